#pragma once

#include "twc/confl.hpp"

namespace twc {

// Morphism class of the cohomology category: a degree -1 cocycle kept with a
// chosen representative; equality always goes through the coboundary solver.
struct HClass {
    TwMorphism rep;
};

HClass h_class(const SectionAlgebra& alg, const TwMorphism& rep);
HClass h_identity(const SectionAlgebra& alg, const TwObject& x);
HClass h_zero(const SectionAlgebra& alg, const TwObject& x, const TwObject& y);
// g after f
HClass h_compose(const SectionAlgebra& alg, const HClass& g, const HClass& f);
bool h_eq(const SectionAlgebra& alg, const HClass& a, const HClass& b);
HClass h_shift(const SectionAlgebra& alg, const HClass& a, int k);
HClass h_neg(const HClass& a);
// two-sided inverse in the cohomology category, by exact linear solve
std::optional<HClass> h_inverse(const SectionAlgebra& alg, const HClass& m);

// An isomorphism of the cohomology category carried with its inverse.
struct HIso {
    HClass fwd, inv;
};
HIso h_iso_identity(const SectionAlgebra& alg, const TwObject& x);
HIso h_iso_shift(const SectionAlgebra& alg, const HIso& i, int k);
// checks fwd/inv are mutually inverse
bool h_iso_valid(const SectionAlgebra& alg, const HIso& i);

// Triangle X --u--> E --v--> Y --w--> X[1], certified by an isomorphism of
// sextuples onto the canonical triangle of a canonical conflation: the cert
// components map this triangle's vertices onto the anchor's vertices.
struct Triangle {
    TwObject X, E, Y;
    HClass u, v, w;
    Conflation anchor;   // canonical
    HIso cX, cE, cY;     // X -> anchor.X, E -> anchor.E, Y -> anchor.Y
};

// w-map of a canonical conflation: pi(sigma_X ∘ gamma)
HClass connecting_class(const SectionAlgebra& alg, const Conflation& xi);

Triangle canonical_triangle(const SectionAlgebra& alg, const Conflation& xi);
// triangle of a general special conflation (canonicalize first)
Triangle triangle_of(const SectionAlgebra& alg, const Conflation& xi);
// triangle of a certified composable pair
Triangle triangle_of(const SectionAlgebra& alg, const GeneralConflation& gc);

// replays the certificate: anchor validity, iso-ness of the components,
// commutativity of the three squares (and the shifted fourth one)
std::vector<std::string> verify_triangle(const SectionAlgebra& alg, const Triangle& t);

// TR2: E --v--> Y --w--> X[1] --(-u[1])--> E[1]
Triangle rotate_right(const SectionAlgebra& alg, const Triangle& t);
// TR2 backward: Y[-1] --(-w[-1])--> X --u--> E --v--> Y
Triangle rotate_left(const SectionAlgebra& alg, const Triangle& t);

// TR1(c): cone triangle X --u--> Y --v--> W --w--> X[1]
Triangle cone_of(const SectionAlgebra& alg, const HClass& u);
// TR1(b): X --id--> X --> 0 --> X[1]
Triangle identity_triangle(const SectionAlgebra& alg, const TwObject& x);

// TR3: completes (th1, th2) with commuting first square to a morphism of
// triangles; returns th3.
HClass complete_tr3(const SectionAlgebra& alg, const Triangle& t, const Triangle& t2,
                    const HClass& th1, const HClass& th2);

struct Octahedron {
    Triangle completion;  // U' -> Y' -> X' -> U'[1]
    // the four commuting squares of the octahedron diagram, in order:
    // f∘i = w∘v, g∘w = j, what∘f = ihat, T(u)∘what = jhat∘g
    std::array<bool, 4> squares{};
    bool ok() const { return squares[0] && squares[1] && squares[2] && squares[3]; }
};

// TR4 on aligned canonical conflations xi: X -> Y -> U', eta: Y -> U -> X',
// zeta: X -> U -> Y' (zeta's inflation = eta.f ⋆ xi.f).
Octahedron octahedron_canonical(const SectionAlgebra& alg, const Conflation& xi, const Conflation& eta,
                                const Conflation& zeta);
// TR4 in general: tri3.u must equal tri2.u ∘ tri1.u in cohomology.
Octahedron octahedron(const SectionAlgebra& alg, const Triangle& tri1, const Triangle& tri2,
                      const Triangle& tri3);

}  // namespace twc
