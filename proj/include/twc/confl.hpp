#pragma once

#include "twc/tw_cat.hpp"

namespace twc {

// A validated special conflation X --f--> E --g--> Y of cocycles: f, g are
// special of degree -1 and every fiber sequence 0 -> Xe_u -> Ee_u -> Ye_u -> 0
// is exact. Canonical means E = X ⊕ Y with f, g the standard inclusion and
// projection and upper-triangular delta with corner gamma: Y -> X.
struct Conflation {
    TwObject X, E, Y;
    TwMorphism f, g;
    bool canonical = false;
    AdMorphism gamma;  // meaningful when canonical

    std::array<SModule, 2> parts() const { return {X.module, Y.module}; }
};

TwObject zero_object(const SectionAlgebra& alg);
// block-diagonal direct sum of twisted objects
TwObject tw_direct_sum(const SectionAlgebra& alg, const TwObject& a, const TwObject& b);
// Upper-triangular twisted object (X⊕Y, [[dX, gamma],[0, dY]]): valid exactly
// when gamma is a degree-0 cocycle (Y,dY) -> (X,dX); the filtrations of the
// parts concatenate, so no structural re-check happens here.
TwObject tw_triangular(const SectionAlgebra& alg, const TwObject& X, const TwObject& Y,
                       const AdMorphism& gamma);

// gamma: degree-0 cocycle (Y,dY) -> (X,dX); rejected with the b1-residue otherwise.
Conflation make_canonical(const SectionAlgebra& alg, const TwObject& X, const TwObject& Y,
                          const AdMorphism& gamma);

// Fiberwise-exactness validation of a special pair.
Conflation validate_special(const SectionAlgebra& alg, const TwMorphism& f, const TwMorphism& g);
// mono/epi criteria for lone special morphisms
bool is_special_inflation(const SectionAlgebra& alg, const TwMorphism& f);
bool is_special_deflation(const SectionAlgebra& alg, const TwMorphism& g);

struct Canonicalized {
    TwMorphism iso;      // E -> can.E, special isomorphism in the cocycle precategory
    TwMorphism iso_inv;  // can.E -> E
    Conflation can;
};
Canonicalized canonicalize(const SectionAlgebra& alg, const Conflation& xi);

// Ladder isomorphism (identity on the ends) between two special conflations
// with the same end objects, if one exists.
std::optional<TwMorphism> equivalent(const SectionAlgebra& alg, const Conflation& xi,
                                     const Conflation& xi2);

// Pushout along h: X -> X1 (gamma1 = h ⋆ gamma) and pullback along
// h: Y1 -> Y (gamma1 = -gamma ⋆ h); both return the connecting middle map t.
std::pair<TwMorphism, Conflation> pushout(const SectionAlgebra& alg, const Conflation& xi,
                                          const TwMorphism& h);
std::pair<TwMorphism, Conflation> pullback(const SectionAlgebra& alg, const Conflation& xi,
                                           const TwMorphism& h);

// The correspondence between classes of maps Y -> X[1] and conflations:
// psi(h) has corner -tau_X ∘ h, psi_inv reads back sigma_X ∘ gamma.
Conflation psi(const SectionAlgebra& alg, const TwMorphism& h);
TwMorphism psi_inv(const SectionAlgebra& alg, const Conflation& xi);

// T on objects/morphisms (delta and tags shift; nothing else changes).
TwObject shift_tw(const SectionAlgebra& alg, const TwObject& x, int k);
TwMorphism shift_tw(const SectionAlgebra& alg, const TwMorphism& f, int k);

// J(X) = X ⊕ X[1] with corner -tau_X; contracting homotopy s with b1(s) = I.
std::pair<TwObject, TwMorphism> J_object(const SectionAlgebra& alg, const TwObject& x);
TwMorphism J_morphism(const SectionAlgebra& alg, const TwMorphism& f);
// canonical conflation X -> J(X) -> X[1]
Conflation xi_J(const SectionAlgebra& alg, const TwObject& x);

// Factorizations of homologically trivial morphisms through a conflation:
// factor_left(h, xi) returns h' with h' ⋆ f = h (h: X -> V trivial);
// factor_right(h, xi) returns h' with g ⋆ h' = h (h: V -> Y trivial).
TwMorphism factor_left(const SectionAlgebra& alg, const TwMorphism& h, const Conflation& xi);
TwMorphism factor_right(const SectionAlgebra& alg, const TwMorphism& h, const Conflation& xi);

// A composable pair known to transform into a canonical conflation through
// an explicit zig of isomorphisms; mid_to_anchor is the composite
// isomorphism from the middle object onto the anchor's middle object.
struct GeneralConflation {
    TwMorphism f, g;  // the pair itself
    Conflation anchor;
    TwMorphism mid_to_anchor, anchor_to_mid;
};

// Mapping cone of a cocycle f: X -> Y, as the conflation
// X -> J(X) ⊕ Y -> W with W = Y ⊕ X[1] and corner f ∘ tau_X in delta_W.
GeneralConflation cone_conflation(const SectionAlgebra& alg, const TwMorphism& f);

// The two rotation conflations of a canonical conflation:
// E -> J(X) ⊕ Y -> X[1] and Y[-1] -> J(Y[-1]) ⊕ X -> E.
GeneralConflation rotate_conflation_right(const SectionAlgebra& alg, const Conflation& xi);
GeneralConflation rotate_conflation_left(const SectionAlgebra& alg, const Conflation& xi);

// kernel/cokernel factorizations through a conflation (exact-pair property):
// given h with h ⋆ f = 0 finds h2 with h = h2 ⋆ g; given h with g ⋆ h = 0
// finds h2 with h = f ⋆ h2. Works for canonical xi.
std::optional<TwMorphism> factor_through_deflation(const SectionAlgebra& alg, const Conflation& xi,
                                                   const TwMorphism& h);
std::optional<TwMorphism> factor_through_inflation(const SectionAlgebra& alg, const Conflation& xi,
                                                   const TwMorphism& h);

}  // namespace twc
