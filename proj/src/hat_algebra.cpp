#include "twc/hat_algebra.hpp"

namespace twc {

std::string hat_tag_str(const SectionAlgebra& alg, const HatTag& a) {
    const std::string& name = alg.basis.at(a.base).name;
    if (a.s == 0 && a.t == 0) return name;
    return "nu^" + std::to_string(a.s) + "*" + name + "*nu^" + std::to_string(-a.t);
}

void HatElem::add(const HatTag& a, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

HatElem& HatElem::operator+=(const HatElem& o) {
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
}

HatElem HatElem::operator+(const HatElem& o) const {
    HatElem r = *this;
    r += o;
    return r;
}

HatElem HatElem::operator-(const HatElem& o) const { return *this + (-o); }

HatElem HatElem::operator-() const {
    HatElem r = *this;
    for (auto& [a, c] : r.terms_) c = -c;
    return r;
}

HatElem HatElem::scaled(const Scalar& c) const {
    HatElem r(field_);
    for (const auto& [a, x] : terms_) r.add(a, x * c);
    return r;
}

HatElem HatElem::single(const HatTag& a, const Scalar& c, const Field& f) {
    HatElem r(f);
    r.add(a, c);
    return r;
}

std::pair<int, int> HatElem::window(const SectionAlgebra&) const {
    if (terms_.empty()) throw Error("window of zero element is undefined");
    auto [s, t] = std::pair{terms_.begin()->first.s, terms_.begin()->first.t};
    for (const auto& [a, c] : terms_)
        if (a.s != s || a.t != t) throw Error("element mixes windows");
    return {s, t};
}

bool HatElem::window_homogeneous() const {
    if (terms_.empty()) return true;
    int s = terms_.begin()->first.s, t = terms_.begin()->first.t;
    for (const auto& [a, c] : terms_)
        if (a.s != s || a.t != t) return false;
    return true;
}

bool HatElem::degree_homogeneous(const SectionAlgebra& alg) const {
    if (terms_.empty()) return true;
    int d = hat_deg(alg, terms_.begin()->first);
    for (const auto& [a, c] : terms_)
        if (hat_deg(alg, a) != d) return false;
    return true;
}

int HatElem::degree(const SectionAlgebra& alg) const {
    if (terms_.empty()) throw Error("degree of zero element is undefined");
    if (!degree_homogeneous(alg)) throw Error("element is not degree-homogeneous");
    return hat_deg(alg, terms_.begin()->first);
}

Element rho(const SectionAlgebra& alg, const HatElem& e) {
    Element out(alg.field);
    if (e.is_zero()) return out;
    e.window(alg);  // throws on mixed windows
    for (const auto& [a, c] : e.terms()) out.add(a.base, c);
    return out;
}

HatElem rho_inv(const SectionAlgebra& alg, const Element& e, int s, int t) {
    HatElem out(alg.field);
    for (const auto& [b, c] : e.terms()) out.add(HatTag{b, s, t}, c);
    return out;
}

HatElem hat_bn(const SectionAlgebra& alg, std::span<const HatTag> chain) {
    size_t n = chain.size();
    if (n == 0) throw Error("hat_bn: empty chain");
    for (size_t i = 0; i + 1 < n; ++i)
        if (hat_src(alg, chain[i]) != hat_dst(alg, chain[i + 1]))
            throw Error("hat_bn: window or idempotent mismatch in chain");
    // window profile w_0..w_n, read off the chain (tensor order)
    int w0 = chain.front().s;
    int wn = chain.back().t;
    int z = w0 - wn;
    for (size_t k = 0; k + 1 < n; ++k) z += (chain[k].t - wn) * hat_deg(alg, chain[k]);
    std::vector<BasisId> sec(n);
    for (size_t i = 0; i < n; ++i) sec[i] = chain[i].base;
    Element val = alg.bn(sec);
    HatElem out = rho_inv(alg, val, w0, wn);
    if (((z % 2) + 2) % 2 == 1) out = -out;
    return out;
}

HatElem hat_bn_eval(const SectionAlgebra& alg, std::span<const HatElem> chain) {
    HatElem acc(alg.field);
    std::vector<HatTag> tags(chain.size());
    Scalar coeff = Scalar::one(alg.field);
    std::function<void(size_t, Scalar)> rec = [&](size_t i, Scalar c) {
        if (i == chain.size()) {
            acc += hat_bn(alg, tags).scaled(c);
            return;
        }
        for (const auto& [a, x] : chain[i].terms()) {
            // skip incompatible pairs early
            if (i > 0 && hat_src(alg, tags[i - 1]) != hat_dst(alg, a)) continue;
            tags[i] = a;
            rec(i + 1, c * x);
        }
    };
    rec(0, coeff);
    return acc;
}

HatElem hat_circ(const SectionAlgebra& alg, const HatElem& x, const HatElem& y) {
    std::vector<HatElem> chain{x, y};
    return hat_bn_eval(alg, chain);
}

HatElem hat_stasheff_residue(const SectionAlgebra& alg, std::span<const HatTag> chain) {
    int n = static_cast<int>(chain.size());
    HatElem acc(alg.field);
    for (int s = 1; s <= n; ++s)
        for (int r = 0; r + s <= n; ++r) {
            int degsum = 0;
            for (int i = 0; i < r; ++i) degsum += hat_deg(alg, chain[i]);
            bool neg = (degsum % 2) != 0;
            HatElem inner = hat_bn(alg, chain.subspan(r, s));
            for (const auto& [b, c] : inner.terms()) {
                std::vector<HatTag> outer;
                outer.reserve(n - s + 1);
                for (int i = 0; i < r; ++i) outer.push_back(chain[i]);
                outer.push_back(b);
                for (int i = r + s; i < n; ++i) outer.push_back(chain[i]);
                acc += hat_bn(alg, outer).scaled(neg ? -c : c);
            }
        }
    return acc;
}

HatTag shift_tag(const HatTag& a, int k) { return {a.base, a.s + k, a.t + k}; }

HatElem shift_elem(const HatElem& e, int k) {
    HatElem r(e.field());
    for (const auto& [a, c] : e.terms()) r.add(shift_tag(a, k), c);
    return r;
}

HatElem nu_left(const HatElem& e, int k) {
    HatElem r(e.field());
    for (const auto& [a, c] : e.terms()) r.add(HatTag{a.base, a.s + k, a.t}, c);
    return r;
}

HatElem nu_right(const HatElem& e, int k) {
    HatElem r(e.field());
    for (const auto& [a, c] : e.terms()) r.add(HatTag{a.base, a.s, a.t - k}, c);
    return r;
}

HatElem hat_unit(const SectionAlgebra& alg, const HatIdem& u) {
    return HatElem::single(HatTag{alg.unit_of(u.base), u.shift, u.shift}, Scalar::one(alg.field), alg.field);
}

HatElem sigma_unit(const SectionAlgebra& alg, const HatIdem& u) {
    Scalar c = (u.shift % 2 == 0) ? Scalar::one(alg.field) : -Scalar::one(alg.field);
    return HatElem::single(HatTag{alg.unit_of(u.base), u.shift + 1, u.shift}, c, alg.field);
}

HatElem tau_unit(const SectionAlgebra& alg, const HatIdem& u) {
    Scalar c = (u.shift % 2 == 0) ? Scalar::one(alg.field) : -Scalar::one(alg.field);
    return HatElem::single(HatTag{alg.unit_of(u.base), u.shift, u.shift + 1}, c, alg.field);
}

}  // namespace twc
