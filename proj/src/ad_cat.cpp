#include "twc/ad_cat.hpp"

#include <array>

namespace twc {

int SModule::total_dim() const {
    int n = 0;
    for (const auto& [u, d] : dims) n += d;
    return n;
}

void SModule::normalize() {
    for (auto it = dims.begin(); it != dims.end();) {
        if (it->second == 0)
            it = dims.erase(it);
        else {
            if (it->second < 0) throw Error("negative fiber dimension");
            ++it;
        }
    }
}

SModule shift_module(const SModule& x, int k) {
    SModule r;
    for (const auto& [u, d] : x.dims) r.dims[{u.shift + k, u.base}] = d;
    return r;
}

SModule direct_sum(std::span<const SModule> parts) {
    SModule r;
    for (const auto& p : parts)
        for (const auto& [u, d] : p.dims) r.dims[u] += d;
    r.normalize();
    return r;
}

void AdMorphism::add_term(const SectionAlgebra& alg, const HatTag& a, const Matrix& m) {
    int rows = dst_.dim_at(hat_dst(alg, a));
    int cols = src_.dim_at(hat_src(alg, a));
    if (m.rows() != rows || m.cols() != cols)
        throw Error("term shape mismatch at " + hat_tag_str(alg, a) + ": got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", want " +
                    std::to_string(rows) + "x" + std::to_string(cols));
    if (rows == 0 || cols == 0) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        if (!m.is_zero()) terms_.emplace(a, m);
        return;
    }
    it->second = it->second + m;
    if (it->second.is_zero()) terms_.erase(it);
}

AdMorphism AdMorphism::operator+(const AdMorphism& o) const {
    if (!(src_ == o.src_) || !(dst_ == o.dst_)) throw Error("morphism sum: source/target mismatch");
    AdMorphism r = *this;
    for (const auto& [a, m] : o.terms_) {
        auto it = r.terms_.find(a);
        if (it == r.terms_.end())
            r.terms_.emplace(a, m);
        else {
            it->second = it->second + m;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

AdMorphism AdMorphism::operator-(const AdMorphism& o) const { return *this + (-o); }

AdMorphism AdMorphism::operator-() const {
    AdMorphism r = *this;
    for (auto& [a, m] : r.terms_) m = -m;
    return r;
}

AdMorphism AdMorphism::scaled(const Scalar& c) const {
    if (c.is_zero()) return AdMorphism(src_, dst_, field_);
    AdMorphism r = *this;
    for (auto& [a, m] : r.terms_) m = m.scaled(c);
    return r;
}

bool AdMorphism::operator==(const AdMorphism& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && terms_ == o.terms_;
}

bool AdMorphism::degree_homogeneous(const SectionAlgebra& alg) const {
    if (terms_.empty()) return true;
    int d = hat_deg(alg, terms_.begin()->first);
    for (const auto& [a, m] : terms_)
        if (hat_deg(alg, a) != d) return false;
    return true;
}

int AdMorphism::degree(const SectionAlgebra& alg) const {
    if (terms_.empty()) throw Error("degree of the zero morphism is undefined");
    if (!degree_homogeneous(alg)) throw Error("morphism is not degree-homogeneous");
    return hat_deg(alg, terms_.begin()->first);
}

bool AdMorphism::has_degree(const SectionAlgebra& alg, int d) const {
    for (const auto& [a, m] : terms_)
        if (hat_deg(alg, a) != d) return false;
    return true;
}

AdMorphism ad_bn(const SectionAlgebra& alg, std::span<const AdMorphism> chain) {
    size_t n = chain.size();
    if (n == 0) throw Error("ad_bn: empty chain");
    for (size_t i = 0; i + 1 < n; ++i)
        if (!(chain[i].src() == chain[i + 1].dst())) throw Error("ad_bn: modules of chain do not compose");

    AdMorphism out(chain.back().src(), chain.front().dst(), alg.field);
    std::vector<HatTag> tags(n);
    // carries the running matrix product so dead branches prune early
    std::function<void(size_t, const Matrix&)> rec = [&](size_t i, const Matrix& prod) {
        if (i == n) {
            HatElem val = hat_bn(alg, tags);
            for (const auto& [b, c] : val.terms()) out.add_term(alg, b, prod.scaled(c));
            return;
        }
        for (const auto& [a, m] : chain[i].terms()) {
            if (i > 0 && hat_src(alg, tags[i - 1]) != hat_dst(alg, a)) continue;
            Matrix next = (i == 0) ? m : prod * m;
            if (next.is_zero()) continue;
            tags[i] = a;
            rec(i + 1, next);
        }
    };
    rec(0, Matrix());
    return out;
}

AdMorphism circ(const SectionAlgebra& alg, const AdMorphism& g, const AdMorphism& f) {
    std::array<AdMorphism, 2> c{g, f};
    return ad_bn(alg, c);
}

AdMorphism zero_morphism(const SectionAlgebra& alg, const SModule& src, const SModule& dst) {
    return AdMorphism(src, dst, alg.field);
}

AdMorphism identity_of(const SectionAlgebra& alg, const SModule& x) {
    AdMorphism r(x, x, alg.field);
    for (const auto& [u, d] : x.dims)
        r.add_term(alg, HatTag{alg.unit_of(u.base), u.shift, u.shift}, Matrix::identity(d, alg.field));
    return r;
}

AdMorphism special_of(const SectionAlgebra& alg, const SModule& src, const SModule& dst,
                      const std::map<HatIdem, Matrix>& fibers) {
    AdMorphism r(src, dst, alg.field);
    for (const auto& [u, m] : fibers) r.add_term(alg, HatTag{alg.unit_of(u.base), u.shift, u.shift}, m);
    return r;
}

bool is_strict(const SectionAlgebra& alg, const AdMorphism& f) {
    for (const auto& [a, m] : f.terms())
        if (!hat_strict(alg, a)) return false;
    return true;
}

bool is_special(const SectionAlgebra& alg, const AdMorphism& f) {
    for (const auto& [a, m] : f.terms())
        if (!alg.basis.at(a.base).unit || a.s != a.t) return false;
    return true;
}

std::map<HatIdem, Matrix> special_fibers(const SectionAlgebra& alg, const AdMorphism& f) {
    if (!is_special(alg, f)) throw Error("morphism is not special");
    std::map<HatIdem, Matrix> out;
    for (const auto& [a, m] : f.terms()) out.emplace(HatIdem{a.s, alg.basis.at(a.base).src}, m);
    return out;
}

std::optional<AdMorphism> special_inverse(const SectionAlgebra& alg, const AdMorphism& f) {
    if (!is_special(alg, f)) return std::nullopt;
    auto fibers = special_fibers(alg, f);
    AdMorphism inv(f.dst(), f.src(), alg.field);
    // every idempotent in either support must carry an invertible fiber
    std::map<HatIdem, int> all = f.src().dims;
    for (const auto& [u, d] : f.dst().dims) all.emplace(u, d);
    for (const auto& [u, _] : all) {
        int ds = f.src().dim_at(u), dd = f.dst().dim_at(u);
        if (ds != dd) return std::nullopt;
        if (ds == 0) continue;
        auto it = fibers.find(u);
        if (it == fibers.end()) return std::nullopt;
        auto mi = it->second.inverse();
        if (!mi) return std::nullopt;
        inv.add_term(alg, HatTag{alg.unit_of(u.base), u.shift, u.shift}, *mi);
    }
    return inv;
}

AdMorphism shift_morphism(const SectionAlgebra& alg, const AdMorphism& f, int k) {
    AdMorphism r(shift_module(f.src(), k), shift_module(f.dst(), k), f.field());
    for (const auto& [a, m] : f.terms()) r.add_term(alg, shift_tag(a, k), m);
    return r;
}

AdMorphism sigma_of(const SectionAlgebra& alg, const SModule& x) {
    AdMorphism r(x, shift_module(x, 1), alg.field);
    for (const auto& [u, d] : x.dims) {
        Matrix m = Matrix::identity(d, alg.field);
        if (((u.shift % 2) + 2) % 2 == 1) m = -m;
        r.add_term(alg, HatTag{alg.unit_of(u.base), u.shift + 1, u.shift}, m);
    }
    return r;
}

AdMorphism tau_of(const SectionAlgebra& alg, const SModule& x) {
    AdMorphism r(shift_module(x, 1), x, alg.field);
    for (const auto& [u, d] : x.dims) {
        Matrix m = Matrix::identity(d, alg.field);
        if (((u.shift % 2) + 2) % 2 == 1) m = -m;
        r.add_term(alg, HatTag{alg.unit_of(u.base), u.shift, u.shift + 1}, m);
    }
    return r;
}

namespace {

int offset_of(std::span<const SModule> parts, int j, const HatIdem& u) {
    int off = 0;
    for (int i = 0; i < j; ++i) off += parts[i].dim_at(u);
    return off;
}

}  // namespace

AdMorphism block_of(const SectionAlgebra& alg, const AdMorphism& f, std::span<const SModule> row_parts,
                    int i, std::span<const SModule> col_parts, int j) {
    if (!(direct_sum(row_parts) == f.dst()) || !(direct_sum(col_parts) == f.src()))
        throw Error("block_of: decomposition does not match morphism");
    AdMorphism out(col_parts[j], row_parts[i], alg.field);
    for (const auto& [a, m] : f.terms()) {
        HatIdem vu = hat_dst(alg, a), uu = hat_src(alg, a);
        int r0 = offset_of(row_parts, i, vu), nr = row_parts[i].dim_at(vu);
        int c0 = offset_of(col_parts, j, uu), nc = col_parts[j].dim_at(uu);
        if (nr == 0 || nc == 0) continue;
        out.add_term(alg, a, m.slice(r0, r0 + nr, c0, c0 + nc));
    }
    return out;
}

AdMorphism assemble(const SectionAlgebra& alg, const std::vector<std::vector<AdMorphism>>& blocks,
                    std::span<const SModule> row_parts, std::span<const SModule> col_parts) {
    SModule src = direct_sum(col_parts), dst = direct_sum(row_parts);
    AdMorphism out(src, dst, alg.field);
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size() != col_parts.size()) throw Error("assemble: ragged block matrix");
        for (size_t j = 0; j < blocks[i].size(); ++j) {
            const AdMorphism& b = blocks[i][j];
            if (!(b.src() == col_parts[j]) || !(b.dst() == row_parts[i]))
                throw Error("assemble: block (" + std::to_string(i) + "," + std::to_string(j) +
                            ") has wrong source/target");
            for (const auto& [a, m] : b.terms()) {
                HatIdem vu = hat_dst(alg, a), uu = hat_src(alg, a);
                Matrix big(dst.dim_at(vu), src.dim_at(uu), alg.field);
                big.paste(offset_of(row_parts, static_cast<int>(i), vu),
                          offset_of(col_parts, static_cast<int>(j), uu), m);
                out.add_term(alg, a, big);
            }
        }
    }
    return out;
}

AdMorphism injection(const SectionAlgebra& alg, std::span<const SModule> parts, int j) {
    SModule sum = direct_sum(parts);
    AdMorphism r(parts[j], sum, alg.field);
    for (const auto& [u, d] : parts[j].dims) {
        Matrix m(sum.dim_at(u), d, alg.field);
        m.paste(offset_of(parts, j, u), 0, Matrix::identity(d, alg.field));
        r.add_term(alg, HatTag{alg.unit_of(u.base), u.shift, u.shift}, m);
    }
    return r;
}

AdMorphism projection(const SectionAlgebra& alg, std::span<const SModule> parts, int j) {
    SModule sum = direct_sum(parts);
    AdMorphism r(sum, parts[j], alg.field);
    for (const auto& [u, d] : parts[j].dims) {
        Matrix m(d, sum.dim_at(u), alg.field);
        m.paste(0, offset_of(parts, j, u), Matrix::identity(d, alg.field));
        r.add_term(alg, HatTag{alg.unit_of(u.base), u.shift, u.shift}, m);
    }
    return r;
}

}  // namespace twc
