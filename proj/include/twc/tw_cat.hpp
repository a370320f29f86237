#pragma once

#include "twc/ad_cat.hpp"

namespace twc {

// Twisted object (X, delta): delta is a degree-0 endomorphism whose
// coefficient-matrix graph on coordinate slots is acyclic (this realizes the
// finite filtration) and which solves the Maurer-Cartan equation.
struct TwObject {
    SModule module;
    AdMorphism delta;
    int nil_index = 1;  // longest coordinate path + 1; insertion sums stop here

    bool operator==(const TwObject& o) const { return module == o.module && delta == o.delta; }
};

struct TwMorphism {
    TwObject src, dst;
    AdMorphism under;

    bool operator==(const TwMorphism& o) const {
        return src == o.src && dst == o.dst && under == o.under;
    }
};

// Validates nilpotence (coordinate graph acyclic) and Maurer-Cartan; throws
// Error with a diagnostic otherwise.
TwObject validate_tw(const SectionAlgebra& alg, const SModule& module, const AdMorphism& delta);
// Maurer-Cartan residue Σ_s b_s^ad(delta^{⊗s}) for a delta already known nilpotent.
AdMorphism mc_residue(const SectionAlgebra& alg, const AdMorphism& delta, int nil_index);
// Wraps a delta whose nilpotence bound is already known (sub-blocks and
// transports of valid objects); asserts Maurer-Cartan only.
TwObject tw_trusted(const SectionAlgebra& alg, const SModule& module, const AdMorphism& delta,
                    int nil_index);
// nil_index from the coordinate graph; nullopt when cyclic
std::optional<int> nilpotence_index(const SectionAlgebra& alg, const SModule& module, const AdMorphism& delta);
// Smallest k <= cap such that every product of k composable delta
// coefficients vanishes (so b_s^ad(delta^{⊗s}) = 0 for s >= k); returns cap
// when the search exceeds it. Tightens the insertion bounds.
int insertion_bound(const SectionAlgebra& alg, const AdMorphism& delta, int cap);

TwMorphism tw_morphism(const TwObject& x, const TwObject& y, AdMorphism f);
TwMorphism zero_tw(const SectionAlgebra& alg, const TwObject& x, const TwObject& y);
TwMorphism identity_tw(const SectionAlgebra& alg, const TwObject& x);

// b_n^tw via delta-insertion sums; chain in tensor order [t_n, ..., t_1].
TwMorphism tw_bn(const SectionAlgebra& alg, std::span<const TwMorphism> chain);
TwMorphism star(const SectionAlgebra& alg, const TwMorphism& g, const TwMorphism& f);
TwMorphism b1(const SectionAlgebra& alg, const TwMorphism& f);

// b_1 and ⋆ through the strict/non-strict decomposition f = f0 + f1
// (f0 = unit-tagged part). Equals the insertion-sum value; kept as an
// independent evaluation route.
TwMorphism b1_split(const SectionAlgebra& alg, const TwMorphism& f);
TwMorphism star_split(const SectionAlgebra& alg, const TwMorphism& g, const TwMorphism& f);
// strict part (unit tags) / rest
std::pair<AdMorphism, AdMorphism> split_strict(const SectionAlgebra& alg, const AdMorphism& f);

bool is_cocycle(const SectionAlgebra& alg, const TwMorphism& f);

// Enumerated basis of the degree-d hom space between two modules.
struct HomBasis {
    struct Ent {
        HatTag tag;
        int row, col;
    };
    std::vector<Ent> ents;
    int dim() const { return static_cast<int>(ents.size()); }
};
HomBasis hom_basis(const SectionAlgebra& alg, const SModule& src, const SModule& dst, int degree);
std::vector<Scalar> vectorize(const SectionAlgebra& alg, const AdMorphism& f, const HomBasis& basis);
AdMorphism devectorize(const SectionAlgebra& alg, const SModule& src, const SModule& dst,
                       const HomBasis& basis, std::span<const Scalar> coords);
// matrix of b_1^tw: hom_d(X,Y) -> hom_{d+1}(X,Y) w.r.t. the enumerated bases
Matrix b1_matrix(const SectionAlgebra& alg, const TwObject& x, const TwObject& y, int degree,
                 const HomBasis& dom, const HomBasis& cod);

// Solves b_1(h) = f over the degree-(deg f - 1) hom space.
std::optional<TwMorphism> coboundary_witness(const SectionAlgebra& alg, const TwMorphism& f);
bool is_coboundary(const SectionAlgebra& alg, const TwMorphism& f);
// difference is a coboundary
bool h_equal(const SectionAlgebra& alg, const TwMorphism& f, const TwMorphism& g);

// Transport of the differential along a locally invertible special morphism:
// delta_Y = -h ∘ delta_X ∘ h^{-1}, realized by fiberwise conjugation.
TwObject transport_differential(const SectionAlgebra& alg, const AdMorphism& h, const TwObject& x);

}  // namespace twc
