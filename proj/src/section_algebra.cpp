#include "twc/section_algebra.hpp"

#include <algorithm>

namespace twc {

void Element::add(BasisId b, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
        terms_.emplace(b, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
}

Element Element::scaled(const Scalar& c) const {
    Element r(field_);
    for (const auto& [b, x] : terms_) r.add(b, x * c);
    return r;
}

Element Element::single(BasisId b, const Scalar& c, const Field& f) {
    Element r(f);
    r.add(b, c);
    return r;
}

std::string Element::str(const std::vector<BasisElem>& basis) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [b, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + basis.at(b).name;
    }
    return s;
}

int SectionAlgebra::idem_index(const std::string& name) const {
    for (size_t i = 0; i < idems.size(); ++i)
        if (idems[i] == name) return static_cast<int>(i);
    throw Error("unknown idempotent '" + name + "'");
}

int SectionAlgebra::basis_index(const std::string& name) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].name == name) return static_cast<int>(i);
    throw Error("unknown basis element '" + name + "'");
}

int SectionAlgebra::unit_of(int idem) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].unit && basis[i].src == idem) return static_cast<int>(i);
    throw Error("no strict unit for idempotent " + idems.at(idem));
}

void SectionAlgebra::add_basis(BasisElem e) {
    for (const auto& b : basis)
        if (b.name == e.name) throw Error("duplicate basis element '" + e.name + "'");
    basis.push_back(std::move(e));
}

std::uint64_t SectionAlgebra::pack(std::span<const BasisId> chain) {
    std::uint64_t k = 1;
    for (BasisId b : chain) k = k * 251 + static_cast<std::uint64_t>(b) + 1;
    return k;
}

void SectionAlgebra::add_bn(const std::vector<BasisId>& chain, Element value) {
    if (chain.empty()) throw Error("b_0 is not part of the structure");
    auto key = pack(chain);
    if (table_.count(key)) throw Error("duplicate b_n entry");
    max_arity = std::max(max_arity, static_cast<int>(chain.size()));
    table_keys_.push_back(chain);
    table_.emplace(key, std::move(value));
}

bool SectionAlgebra::has_bn(const std::vector<BasisId>& chain) const { return table_.count(pack(chain)) > 0; }

const Element* SectionAlgebra::table_entry(const std::vector<BasisId>& chain) const {
    auto it = table_.find(pack(chain));
    return it == table_.end() ? nullptr : &it->second;
}

bool SectionAlgebra::chain_compatible(std::span<const BasisId> chain) const {
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (basis.at(chain[i]).src != basis.at(chain[i + 1]).dst) return false;
    return true;
}

void SectionAlgebra::validate() const {
    std::vector<int> units_seen(idems.size(), 0);
    for (const auto& b : basis) {
        if (b.src < 0 || b.src >= static_cast<int>(idems.size()) || b.dst < 0 ||
            b.dst >= static_cast<int>(idems.size()))
            throw Error("basis element '" + b.name + "' references unknown idempotent");
        if (b.unit) {
            if (b.deg != -1) throw Error("unit '" + b.name + "' must have degree -1");
            if (b.src != b.dst) throw Error("unit '" + b.name + "' must be directed i -> i");
            units_seen[b.src]++;
        }
    }
    for (size_t i = 0; i < idems.size(); ++i)
        if (units_seen[i] != 1)
            throw Error("idempotent '" + idems[i] + "' needs exactly one strict unit, found " +
                        std::to_string(units_seen[i]));

    for (const auto& chain : table_keys_) {
        const Element& out = *table_entry(chain);
        if (!chain_compatible(chain)) throw Error("table chain is not direction-compatible");
        int n = static_cast<int>(chain.size());
        int src = basis.at(chain.back()).src;
        int dst = basis.at(chain.front()).dst;
        int degsum = 1;
        bool has_unit = false;
        for (BasisId b : chain) {
            degsum += basis.at(b).deg;
            has_unit |= basis.at(b).unit;
        }
        for (const auto& [b, c] : out.terms()) {
            if (basis.at(b).deg != degsum)
                throw Error("degree law violated for table entry on '" + basis.at(chain[0]).name +
                            "...': output degree " + std::to_string(basis.at(b).deg) + " != " +
                            std::to_string(degsum));
            if (basis.at(b).src != src || basis.at(b).dst != dst)
                throw Error("direction law violated for a table entry");
        }
        if (has_unit) {
            if (n != 2) throw Error("table entry of arity != 2 contains a strict unit");
            // must agree with the forced unit rule
            Element forced = bn(chain);
            if (!(forced == out)) throw Error("table entry on a unit disagrees with the unit rules");
        }
    }
}

Element SectionAlgebra::bn(std::span<const BasisId> chain) const {
    if (chain.empty()) throw Error("bn: empty chain");
    for (BasisId b : chain)
        if (b < 0 || b >= static_cast<int>(basis.size())) throw Error("bn: unknown basis id");
    if (!chain_compatible(chain)) throw Error("bn: chain is not direction-compatible");

    size_t n = chain.size();
    bool any_unit = false;
    for (BasisId b : chain) any_unit |= basis[b].unit;
    if (any_unit) {
        if (n != 2) return Element(field);  // strictness of units
        const BasisElem& left = basis[chain[0]];
        const BasisElem& right = basis[chain[1]];
        if (left.unit) {
            // b_2(e_i ⊗ a) = e_i a; compatibility already forces v(a) = i
            Scalar c = Scalar::one(field);
            if (left.src == mutate_left_unit) c = -c;
            return Element::single(chain[1], c, field);
        }
        // b_2(a ⊗ e_i) = (-1)^{|a|+1} a e_i
        Scalar c = (left.deg % 2 == 0) ? -Scalar::one(field) : Scalar::one(field);
        if (right.src == mutate_right_unit) c = -c;
        return Element::single(chain[0], c, field);
    }
    auto it = table_.find(pack(chain));
    if (it == table_.end()) return Element(field);
    return it->second;
}

Element SectionAlgebra::bn_eval(std::span<const std::pair<BasisId, Scalar>> chain) const {
    std::vector<BasisId> ids(chain.size());
    Scalar c = Scalar::one(field);
    for (size_t i = 0; i < chain.size(); ++i) {
        ids[i] = chain[i].first;
        c *= chain[i].second;
    }
    if (c.is_zero()) return Element(field);
    return bn(ids).scaled(c);
}

Element SectionAlgebra::bn_eval(std::span<const Element> chain) const {
    Element acc(field);
    std::vector<std::pair<BasisId, Scalar>> tuple(chain.size());
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == chain.size()) {
            acc += bn_eval(tuple);
            return;
        }
        for (const auto& [b, c] : chain[i].terms()) {
            tuple[i] = {b, c};
            rec(i + 1);
        }
    };
    rec(0);
    return acc;
}

SparseTensor SectionAlgebra::koszul_insert(int r, int s, int t, std::span<const BasisId> chain) const {
    if (r < 0 || t < 0 || s < 1) throw Error("koszul_insert: need r,t >= 0 and s >= 1");
    if (static_cast<size_t>(r + s + t) != chain.size()) throw Error("koszul_insert: r+s+t != chain length");
    int degsum = 0;
    for (int i = 0; i < r; ++i) degsum += basis.at(chain[i]).deg;
    bool neg = (degsum % 2) != 0;
    Element inner = bn(chain.subspan(r, s));
    SparseTensor out;
    for (const auto& [b, c] : inner.terms()) {
        std::vector<BasisId> key;
        key.reserve(r + 1 + t);
        for (int i = 0; i < r; ++i) key.push_back(chain[i]);
        key.push_back(b);
        for (int i = r + s; i < r + s + t; ++i) key.push_back(chain[i]);
        Scalar coeff = neg ? -c : c;
        auto [it, fresh] = out.emplace(std::move(key), coeff);
        if (!fresh) it->second += coeff;
    }
    return out;
}

Element SectionAlgebra::stasheff_residue(std::span<const BasisId> chain) const {
    int n = static_cast<int>(chain.size());
    Element acc(field);
    for (int s = 1; s <= n; ++s)
        for (int r = 0; r + s <= n; ++r) {
            int t = n - r - s;
            for (const auto& [key, c] : koszul_insert(r, s, t, chain)) acc += bn(key).scaled(c);
        }
    return acc;
}

void SectionAlgebra::for_each_chain(int n, const std::function<void(std::span<const BasisId>)>& fn) const {
    std::vector<BasisId> chain(n);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            fn(chain);
            return;
        }
        for (BasisId b = 0; b < static_cast<int>(basis.size()); ++b) {
            // extend to the right: src(chain[i-1]) == dst(b)
            if (i > 0 && basis[chain[i - 1]].src != basis[b].dst) continue;
            chain[i] = b;
            rec(i + 1);
        }
    };
    rec(0);
}

StasheffReport SectionAlgebra::check_stasheff(int n) const {
    StasheffReport rep;
    rep.n = n;
    for_each_chain(n, [&](std::span<const BasisId> chain) {
        Element res = stasheff_residue(chain);
        if (!res.is_zero()) rep.failures.emplace_back(std::vector<BasisId>(chain.begin(), chain.end()), res);
    });
    return rep;
}

UnitReport SectionAlgebra::check_units() const {
    UnitReport rep;
    for (size_t i = 0; i < idems.size(); ++i) {
        int u;
        try {
            u = unit_of(static_cast<int>(i));
        } catch (const Error& e) {
            rep.problems.push_back(e.what());
            continue;
        }
        const BasisElem& eu = basis[u];
        if (eu.deg != -1)
            rep.problems.push_back("unit " + eu.name + " has degree " + std::to_string(eu.deg) +
                                   ", expected -1");
        if (eu.src != eu.dst) rep.problems.push_back("unit " + eu.name + " is not directed i -> i");
        // two-sided unit rules against every homogeneous basis element
        for (BasisId a = 0; a < static_cast<int>(basis.size()); ++a) {
            const BasisElem& ba = basis[a];
            if (ba.dst == static_cast<int>(i)) {
                Element got = bn(std::vector<BasisId>{u, a});
                Element want = Element::single(a, Scalar::one(field), field);
                if (!(got == want))
                    rep.problems.push_back("b_2(" + eu.name + " ⊗ " + ba.name + ") != e·" + ba.name);
            }
            if (ba.src == static_cast<int>(i)) {
                Element got = bn(std::vector<BasisId>{a, u});
                Scalar c = (ba.deg % 2 == 0) ? -Scalar::one(field) : Scalar::one(field);
                Element want = Element::single(a, c, field);
                if (!(got == want))
                    rep.problems.push_back("b_2(" + ba.name + " ⊗ " + eu.name +
                                           ") != (-1)^{|a|+1}·" + ba.name + "·e");
            }
        }
        // strictness: any table entry of arity != 2 mentioning the unit
        for (const auto& chain : table_keys_) {
            if (chain.size() == 2) continue;
            if (std::find(chain.begin(), chain.end(), u) != chain.end() &&
                !table_entry(chain)->is_zero())
                rep.problems.push_back("unit " + eu.name + " appears in a nonzero entry of arity " +
                                       std::to_string(chain.size()));
        }
    }
    return rep;
}

}  // namespace twc
