#pragma once

#include "twc/hat_algebra.hpp"
#include "twc/matrix.hpp"

namespace twc {

// Finite-support right module over the extended algebra, recorded purely by
// its dimension vector (the ground algebra is elementary, so fibers are
// plain vector spaces and module elements never need to materialize).
struct SModule {
    std::map<HatIdem, int> dims;

    int dim_at(const HatIdem& u) const {
        auto it = dims.find(u);
        return it == dims.end() ? 0 : it->second;
    }
    int total_dim() const;
    bool is_zero() const { return dims.empty(); }
    void normalize();  // drop zero entries
    bool operator==(const SModule& o) const { return dims == o.dims; }
};

SModule shift_module(const SModule& x, int k);
SModule direct_sum(std::span<const SModule> parts);

// Morphism of the extended ad-category: a finite sum Σ f_a ⊗ a of scalar
// matrices tagged by hat basis elements. The matrix stored at tag a has
// shape dst.dim(target idem of a) × src.dim(source idem of a).
class AdMorphism {
public:
    AdMorphism() = default;
    AdMorphism(SModule src, SModule dst, const Field& f) : src_(std::move(src)), dst_(std::move(dst)), field_(f) {}

    const SModule& src() const { return src_; }
    const SModule& dst() const { return dst_; }
    const Field& field() const { return field_; }
    const std::map<HatTag, Matrix>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // accumulates; validates shape against src/dst dims
    void add_term(const SectionAlgebra& alg, const HatTag& a, const Matrix& m);

    AdMorphism operator+(const AdMorphism& o) const;
    AdMorphism operator-(const AdMorphism& o) const;
    AdMorphism operator-() const;
    AdMorphism scaled(const Scalar& c) const;
    bool operator==(const AdMorphism& o) const;

    bool degree_homogeneous(const SectionAlgebra& alg) const;
    // degree of a homogeneous nonzero morphism; throws otherwise
    int degree(const SectionAlgebra& alg) const;
    // true for zero or homogeneous of degree d
    bool has_degree(const SectionAlgebra& alg, int d) const;

private:
    SModule src_, dst_;
    Field field_;
    std::map<HatTag, Matrix> terms_;
};

// b_n^ad on a chain in tensor order [f_n, ..., f_1]; f_1 acts first.
AdMorphism ad_bn(const SectionAlgebra& alg, std::span<const AdMorphism> chain);
// g ∘ f := b_2^ad(g ⊗ f)
AdMorphism circ(const SectionAlgebra& alg, const AdMorphism& g, const AdMorphism& f);

AdMorphism zero_morphism(const SectionAlgebra& alg, const SModule& src, const SModule& dst);
AdMorphism identity_of(const SectionAlgebra& alg, const SModule& x);
// the embedding L: module maps to special morphisms, f_u ⊗ e_u per idempotent
AdMorphism special_of(const SectionAlgebra& alg, const SModule& src, const SModule& dst,
                      const std::map<HatIdem, Matrix>& fibers);

bool is_strict(const SectionAlgebra& alg, const AdMorphism& f);
bool is_special(const SectionAlgebra& alg, const AdMorphism& f);
// fiber maps of a special morphism
std::map<HatIdem, Matrix> special_fibers(const SectionAlgebra& alg, const AdMorphism& f);
// two-sided inverse of a locally invertible special morphism
std::optional<AdMorphism> special_inverse(const SectionAlgebra& alg, const AdMorphism& f);

AdMorphism shift_morphism(const SectionAlgebra& alg, const AdMorphism& f, int k);

// sigma_X: X -> X[1] (degree -2) and tau_X: X[1] -> X (degree 0)
AdMorphism sigma_of(const SectionAlgebra& alg, const SModule& x);
AdMorphism tau_of(const SectionAlgebra& alg, const SModule& x);

// Block calculus with respect to ordered direct-sum decompositions. The
// (j,i)-component of f coincides with plain slicing of the coefficient
// matrices, so no signs appear here.
AdMorphism block_of(const SectionAlgebra& alg, const AdMorphism& f, std::span<const SModule> row_parts,
                    int i, std::span<const SModule> col_parts, int j);
AdMorphism assemble(const SectionAlgebra& alg, const std::vector<std::vector<AdMorphism>>& blocks,
                    std::span<const SModule> row_parts, std::span<const SModule> col_parts);
AdMorphism injection(const SectionAlgebra& alg, std::span<const SModule> parts, int j);
AdMorphism projection(const SectionAlgebra& alg, std::span<const SModule> parts, int j);

}  // namespace twc
