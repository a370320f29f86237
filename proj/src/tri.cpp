#include "twc/tri.hpp"

namespace twc {

HClass h_class(const SectionAlgebra& alg, const TwMorphism& rep) {
    if (!rep.under.is_zero() && !rep.under.has_degree(alg, -1))
        throw Error("h_class: representative must have degree -1");
    if (!is_cocycle(alg, rep)) throw Error("h_class: representative is not a cocycle");
    return HClass{rep};
}

HClass h_identity(const SectionAlgebra& alg, const TwObject& x) { return HClass{identity_tw(alg, x)}; }

HClass h_zero(const SectionAlgebra& alg, const TwObject& x, const TwObject& y) {
    return HClass{zero_tw(alg, x, y)};
}

HClass h_compose(const SectionAlgebra& alg, const HClass& g, const HClass& f) {
    return HClass{star(alg, g.rep, f.rep)};
}

bool h_eq(const SectionAlgebra& alg, const HClass& a, const HClass& b) {
    return h_equal(alg, a.rep, b.rep);
}

HClass h_shift(const SectionAlgebra& alg, const HClass& a, int k) {
    return HClass{shift_tw(alg, a.rep, k)};
}

HClass h_neg(const HClass& a) { return HClass{TwMorphism{a.rep.src, a.rep.dst, -a.rep.under}}; }

std::optional<HClass> h_inverse(const SectionAlgebra& alg, const HClass& m) {
    const TwObject& A = m.rep.src;
    const TwObject& B = m.rep.dst;
    // right inverse modulo coboundaries: m ⋆ x - b1(w) = I_B
    HomBasis xb = hom_basis(alg, B.module, A.module, -1);
    HomBasis wb = hom_basis(alg, B.module, B.module, -2);
    HomBasis cod = hom_basis(alg, B.module, B.module, -1);
    Matrix sys(cod.dim(), xb.dim() + wb.dim(), alg.field);
    for (int j = 0; j < xb.dim(); ++j) {
        std::vector<Scalar> e(xb.dim(), Scalar::zero(alg.field));
        e[j] = Scalar::one(alg.field);
        TwMorphism cand{B, A, devectorize(alg, B.module, A.module, xb, e)};
        auto img = vectorize(alg, star(alg, m.rep, cand).under, cod);
        for (int i = 0; i < cod.dim(); ++i) sys.at(i, j) = img[i];
    }
    Matrix b1m = b1_matrix(alg, B, B, -2, wb, cod);
    for (int j = 0; j < wb.dim(); ++j)
        for (int i = 0; i < cod.dim(); ++i) sys.at(i, xb.dim() + j) = -b1m.at(i, j);
    auto sol = solve_linear(sys, vectorize(alg, identity_of(alg, B.module), cod));
    if (!sol) return std::nullopt;
    TwMorphism x{B, A, devectorize(alg, B.module, A.module, xb,
                                    std::span<const Scalar>(sol->data(), xb.dim()))};
    // a right inverse is two-sided as soon as a left inverse exists
    TwMorphism leftate = star(alg, x, m.rep);
    AdMorphism diff = leftate.under - identity_of(alg, A.module);
    if (!is_coboundary(alg, TwMorphism{A, A, diff})) return std::nullopt;
    return HClass{x};
}

HIso h_iso_identity(const SectionAlgebra& alg, const TwObject& x) {
    HClass i = h_identity(alg, x);
    return HIso{i, i};
}

HIso h_iso_shift(const SectionAlgebra& alg, const HIso& i, int k) {
    return HIso{h_shift(alg, i.fwd, k), h_shift(alg, i.inv, k)};
}

bool h_iso_valid(const SectionAlgebra& alg, const HIso& i) {
    if (!(i.fwd.rep.src == i.inv.rep.dst) || !(i.fwd.rep.dst == i.inv.rep.src)) return false;
    return h_eq(alg, h_compose(alg, i.fwd, i.inv), h_identity(alg, i.fwd.rep.dst)) &&
           h_eq(alg, h_compose(alg, i.inv, i.fwd), h_identity(alg, i.fwd.rep.src));
}

static HIso compose_iso(const SectionAlgebra& alg, const HIso& outer, const HIso& inner) {
    return HIso{h_compose(alg, outer.fwd, inner.fwd), h_compose(alg, inner.inv, outer.inv)};
}

static HIso neg_iso(const HIso& i) { return HIso{h_neg(i.fwd), h_neg(i.inv)}; }

HClass connecting_class(const SectionAlgebra& alg, const Conflation& xi) {
    return HClass{psi_inv(alg, xi)};
}

Triangle canonical_triangle(const SectionAlgebra& alg, const Conflation& xi) {
    if (!xi.canonical) throw Error("canonical_triangle: conflation must be canonical");
    return Triangle{xi.X,
                    xi.E,
                    xi.Y,
                    HClass{xi.f},
                    HClass{xi.g},
                    connecting_class(alg, xi),
                    xi,
                    h_iso_identity(alg, xi.X),
                    h_iso_identity(alg, xi.E),
                    h_iso_identity(alg, xi.Y)};
}

Triangle triangle_of(const SectionAlgebra& alg, const Conflation& xi) {
    Canonicalized c = canonicalize(alg, xi);
    return Triangle{xi.X,
                    xi.E,
                    xi.Y,
                    HClass{xi.f},
                    HClass{xi.g},
                    connecting_class(alg, c.can),
                    c.can,
                    h_iso_identity(alg, xi.X),
                    HIso{HClass{c.iso}, HClass{c.iso_inv}},
                    h_iso_identity(alg, xi.Y)};
}

Triangle triangle_of(const SectionAlgebra& alg, const GeneralConflation& gc) {
    return Triangle{gc.f.src,
                    gc.f.dst,
                    gc.g.dst,
                    HClass{gc.f},
                    HClass{gc.g},
                    connecting_class(alg, gc.anchor),
                    gc.anchor,
                    h_iso_identity(alg, gc.f.src),
                    HIso{HClass{gc.mid_to_anchor}, HClass{gc.anchor_to_mid}},
                    h_iso_identity(alg, gc.g.dst)};
}

std::vector<std::string> verify_triangle(const SectionAlgebra& alg, const Triangle& t) {
    std::vector<std::string> problems;
    try {
        Conflation replay = make_canonical(alg, t.anchor.X, t.anchor.Y, t.anchor.gamma);
        if (!(replay.E == t.anchor.E)) problems.push_back("anchor middle object mismatch");
    } catch (const Error& e) {
        problems.push_back(std::string("anchor invalid: ") + e.what());
        return problems;
    }
    for (const HClass* m : {&t.u, &t.v, &t.w}) {
        if (!m->rep.under.is_zero() && !m->rep.under.has_degree(alg, -1))
            problems.push_back("triangle map has wrong degree");
        if (!is_cocycle(alg, m->rep)) problems.push_back("triangle map is not a cocycle");
    }
    if (!h_iso_valid(alg, t.cX)) problems.push_back("cX is not an isomorphism in cohomology");
    if (!h_iso_valid(alg, t.cE)) problems.push_back("cE is not an isomorphism in cohomology");
    if (!h_iso_valid(alg, t.cY)) problems.push_back("cY is not an isomorphism in cohomology");
    HClass uc{t.anchor.f}, vc{t.anchor.g};
    HClass wc = connecting_class(alg, t.anchor);
    if (!h_eq(alg, h_compose(alg, t.cE.fwd, t.u), h_compose(alg, uc, t.cX.fwd)))
        problems.push_back("square u does not commute");
    if (!h_eq(alg, h_compose(alg, t.cY.fwd, t.v), h_compose(alg, vc, t.cE.fwd)))
        problems.push_back("square v does not commute");
    if (!h_eq(alg, h_compose(alg, h_shift(alg, t.cX.fwd, 1), t.w), h_compose(alg, wc, t.cY.fwd)))
        problems.push_back("square w does not commute");
    return problems;
}

Triangle rotate_right(const SectionAlgebra& alg, const Triangle& t) {
    GeneralConflation rot = rotate_conflation_right(alg, t.anchor);
    const TwObject& mid = rot.f.dst;
    // J(X_c) ⊕ Y_c decomposition of the middle object
    SModule jm = direct_sum(std::array<SModule, 2>{t.anchor.X.module, shift_module(t.anchor.X.module, 1)});
    std::array<SModule, 2> mparts{jm, t.anchor.Y.module};
    TwMorphism iota{t.anchor.Y, mid, injection(alg, mparts, 1)};
    TwMorphism q{mid, t.anchor.Y, projection(alg, mparts, 1)};
    HClass cE_fwd = h_compose(alg, HClass{rot.mid_to_anchor}, h_compose(alg, HClass{iota}, t.cY.fwd));
    HClass cE_inv = h_compose(alg, t.cY.inv, h_compose(alg, HClass{q}, HClass{rot.anchor_to_mid}));
    return Triangle{t.E,
                    t.Y,
                    shift_tw(alg, t.X, 1),
                    t.v,
                    t.w,
                    h_neg(h_shift(alg, t.u, 1)),
                    rot.anchor,
                    t.cE,
                    HIso{cE_fwd, cE_inv},
                    h_iso_shift(alg, t.cX, 1)};
}

Triangle rotate_left(const SectionAlgebra& alg, const Triangle& t) {
    GeneralConflation rot = rotate_conflation_left(alg, t.anchor);
    const TwObject& mid = rot.f.dst;
    SModule ym1 = shift_module(t.anchor.Y.module, -1);
    SModule jm = direct_sum(std::array<SModule, 2>{ym1, t.anchor.Y.module});
    std::array<SModule, 2> mparts{jm, t.anchor.X.module};
    TwMorphism iota{t.anchor.X, mid, injection(alg, mparts, 1)};
    TwMorphism q{mid, t.anchor.X, projection(alg, mparts, 1)};
    HClass cE_fwd = h_compose(alg, HClass{rot.mid_to_anchor}, h_compose(alg, HClass{iota}, t.cX.fwd));
    HClass cE_inv = h_compose(alg, t.cX.inv, h_compose(alg, HClass{q}, HClass{rot.anchor_to_mid}));
    // the flipped first map -w[-1] is matched on the anchor side by the
    // sextuple isomorphism (-1, 1, 1), so the first component is negated
    return Triangle{shift_tw(alg, t.Y, -1),
                    t.X,
                    t.E,
                    h_neg(h_shift(alg, t.w, -1)),
                    t.u,
                    t.v,
                    rot.anchor,
                    neg_iso(h_iso_shift(alg, t.cY, -1)),
                    HIso{cE_fwd, cE_inv},
                    t.cE};
}

Triangle cone_of(const SectionAlgebra& alg, const HClass& u) {
    GeneralConflation cc = cone_conflation(alg, u.rep);
    const TwObject& X = u.rep.src;
    const TwObject& Y = u.rep.dst;
    const TwObject& W = cc.g.dst;
    const TwObject& mid = cc.f.dst;
    SModule jm = direct_sum(std::array<SModule, 2>{X.module, shift_module(X.module, 1)});
    std::array<SModule, 2> mparts{jm, Y.module};
    std::array<SModule, 2> wparts{Y.module, shift_module(X.module, 1)};
    TwMorphism iota{Y, mid, injection(alg, mparts, 1)};
    TwMorphism q{mid, Y, projection(alg, mparts, 1)};
    HClass v{TwMorphism{Y, W, injection(alg, wparts, 0)}};
    HClass cE_fwd = h_compose(alg, HClass{cc.mid_to_anchor}, HClass{iota});
    HClass cE_inv = h_compose(alg, HClass{q}, HClass{cc.anchor_to_mid});
    return Triangle{X,
                    Y,
                    W,
                    u,
                    v,
                    connecting_class(alg, cc.anchor),
                    cc.anchor,
                    h_iso_identity(alg, X),
                    HIso{cE_fwd, cE_inv},
                    h_iso_identity(alg, W)};
}

Triangle identity_triangle(const SectionAlgebra& alg, const TwObject& x) {
    TwObject zero = zero_object(alg);
    Conflation xi = make_canonical(alg, x, zero, zero_morphism(alg, zero.module, x.module));
    return canonical_triangle(alg, xi);
}

HClass complete_tr3(const SectionAlgebra& alg, const Triangle& t, const Triangle& t2,
                    const HClass& th1, const HClass& th2) {
    if (!h_eq(alg, h_compose(alg, t2.u, th1), h_compose(alg, th2, t.u)))
        throw Error("complete_tr3: input square does not commute");
    // move everything to the canonical anchors
    HClass bar1 = h_compose(alg, t2.cX.fwd, h_compose(alg, th1, t.cX.inv));
    HClass bar2 = h_compose(alg, t2.cE.fwd, h_compose(alg, th2, t.cE.inv));
    const Conflation& xi = t.anchor;
    const Conflation& xi2 = t2.anchor;
    TwMorphism d{xi.X, xi2.E, star(alg, xi2.f, bar1.rep).under - star(alg, bar2.rep, xi.f).under};
    // the square commutes in cohomology, so d factors through the inflation
    TwMorphism corr = factor_left(alg, d, xi);
    TwMorphism t2p{xi.E, xi2.E, bar2.rep.under + corr.under};
    if (!(star(alg, t2p, xi.f).under == star(alg, xi2.f, bar1.rep).under))
        throw Error("complete_tr3: corrected lift does not commute strictly (internal)");
    std::array<SModule, 2> sparts{xi.X.module, xi.Y.module};
    std::array<SModule, 2> dparts{xi2.X.module, xi2.Y.module};
    if (!block_of(alg, t2p.under, dparts, 1, sparts, 0).is_zero())
        throw Error("complete_tr3: corrected lift is not triangular (internal)");
    AdMorphism t3u = block_of(alg, t2p.under, dparts, 1, sparts, 1);
    TwMorphism t3{xi.Y, xi2.Y, t3u};
    if (!is_cocycle(alg, t3)) throw Error("complete_tr3: induced map is not a cocycle (internal)");
    HClass th3 = h_compose(alg, t2.cY.inv, h_compose(alg, HClass{t3}, t.cY.fwd));
    if (!h_eq(alg, h_compose(alg, th3, t.v), h_compose(alg, t2.v, th2)))
        throw Error("complete_tr3: middle square fails (internal)");
    if (!h_eq(alg, h_compose(alg, h_shift(alg, th1, 1), t.w), h_compose(alg, t2.w, th3)))
        throw Error("complete_tr3: w square fails (internal)");
    return th3;
}

Octahedron octahedron_canonical(const SectionAlgebra& alg, const Conflation& xi, const Conflation& eta,
                                const Conflation& zeta) {
    if (!xi.canonical || !eta.canonical || !zeta.canonical)
        throw Error("octahedron_canonical: all three conflations must be canonical");
    if (!(eta.X == xi.E) || !(zeta.X == xi.X) || !(zeta.E == eta.E))
        throw Error("octahedron_canonical: conflations are not aligned");
    if (!(zeta.f.under == star(alg, eta.f, xi.f).under))
        throw Error("octahedron_canonical: zeta's inflation is not the composite");

    const SModule& xm = xi.X.module;
    const SModule& um = xi.Y.module;   // U'
    const SModule& xpm = eta.Y.module; // X'
    std::array<SModule, 3> uparts{xm, um, xpm};

    TwMorphism jp1{xi.Y, zeta.E, injection(alg, uparts, 1)};
    TwMorphism f1 = star(alg, zeta.g, jp1);
    std::array<SModule, 2> zparts{xm, zeta.Y.module};
    TwMorphism wp1{zeta.Y, zeta.E, injection(alg, zparts, 1)};
    TwMorphism g1 = star(alg, eta.g, wp1);
    Conflation comp = validate_special(alg, f1, g1);

    Triangle base = triangle_of(alg, comp);
    HClass wcomp = h_compose(alg, h_shift(alg, HClass{xi.g}, 1), connecting_class(alg, eta));
    Octahedron out;
    out.completion = base;
    if (!h_eq(alg, base.w, wcomp))
        throw Error("octahedron_canonical: completion w disagrees with T(i)∘jhat (internal)");
    out.completion.w = wcomp;

    HClass f{f1}, g{g1};
    HClass i{xi.g}, v{eta.f}, w{zeta.g}, j{eta.g};
    HClass ihat = connecting_class(alg, xi);
    HClass jhat = connecting_class(alg, eta);
    HClass what = connecting_class(alg, zeta);
    out.squares[0] = h_eq(alg, h_compose(alg, f, i), h_compose(alg, w, v));
    out.squares[1] = h_eq(alg, h_compose(alg, g, w), j);
    out.squares[2] = h_eq(alg, h_compose(alg, what, f), ihat);
    out.squares[3] =
        h_eq(alg, h_compose(alg, h_shift(alg, HClass{xi.f}, 1), what), h_compose(alg, jhat, g));
    return out;
}

Octahedron octahedron(const SectionAlgebra& alg, const Triangle& tri1, const Triangle& tri2,
                      const Triangle& tri3) {
    if (!(tri2.X == tri1.E) || !(tri3.X == tri1.X) || !(tri3.E == tri2.E))
        throw Error("octahedron: triangles are not composable");
    if (!h_eq(alg, tri3.u, h_compose(alg, tri2.u, tri1.u)))
        throw Error("octahedron: tri3 is not a cone of the composite");

    // conjugate everything to canonical conflations, then run the canonical case
    const Conflation& xi1 = tri1.anchor;
    HClass h = h_compose(alg, tri2.u, tri1.cE.inv);  // B -> Z
    GeneralConflation cone = cone_conflation(alg, h.rep);
    const Conflation& xi2 = cone.anchor;
    const TwObject& mid = cone.f.dst;
    SModule jbm = direct_sum(
        std::array<SModule, 2>{xi1.E.module, shift_module(xi1.E.module, 1)});
    std::array<SModule, 2> mparts{jbm, tri2.E.module};
    TwMorphism iota{tri2.E, mid, injection(alg, mparts, 1)};
    TwMorphism q{mid, tri2.E, projection(alg, mparts, 1)};
    HIso zeta2{h_compose(alg, HClass{cone.mid_to_anchor}, HClass{iota}),
               h_compose(alg, HClass{q}, HClass{cone.anchor_to_mid})};

    Triangle txi2 = canonical_triangle(alg, xi2);
    HClass beta3 = complete_tr3(alg, tri2, txi2, tri1.cE.fwd, zeta2.fwd);
    auto beta3inv = h_inverse(alg, beta3);
    if (!beta3inv) throw Error("octahedron: completed beta3 is not invertible");

    // xi3: A -> C -> B' with B' = C' ⊕ A'
    const TwObject& C = xi2.E;
    std::array<SModule, 2> cparts{xi1.X.module,
                                  direct_sum(std::array<SModule, 2>{xi1.Y.module, xi2.Y.module})};
    AdMorphism deltaBp = block_of(alg, C.delta, cparts, 1, cparts, 1);
    TwObject Bp = tw_trusted(alg, cparts[1], deltaBp, C.nil_index);
    AdMorphism gamma3 = block_of(alg, C.delta, cparts, 0, cparts, 1);
    Conflation xi3 = make_canonical(alg, xi1.X, Bp, gamma3);
    if (!(xi3.E == C)) throw Error("octahedron: xi3 middle does not reproduce C (internal)");

    Triangle txi3 = canonical_triangle(alg, xi3);
    HClass zeta3 = complete_tr3(alg, tri3, txi3, tri1.cX.fwd, zeta2.fwd);
    auto zeta3inv = h_inverse(alg, zeta3);
    if (!zeta3inv) throw Error("octahedron: completed zeta3 is not invertible");

    Octahedron part1 = octahedron_canonical(alg, xi1, xi2, xi3);
    const Triangle& tau = part1.completion;

    HClass fbar = h_compose(alg, *zeta3inv, h_compose(alg, tau.u, tri1.cY.fwd));
    HClass gbar = h_compose(alg, *beta3inv, h_compose(alg, tau.v, zeta3));
    HClass third = h_compose(alg, h_shift(alg, tri1.v, 1), tri2.w);

    Octahedron out;
    out.completion = Triangle{tri1.Y,
                              tri3.Y,
                              tri2.Y,
                              fbar,
                              gbar,
                              third,
                              tau.anchor,
                              compose_iso(alg, tau.cX, tri1.cY),
                              compose_iso(alg, tau.cE, HIso{zeta3, *zeta3inv}),
                              compose_iso(alg, tau.cY, HIso{beta3, *beta3inv})};
    out.squares[0] = h_eq(alg, h_compose(alg, fbar, tri1.v), h_compose(alg, tri3.v, tri2.u));
    out.squares[1] = h_eq(alg, h_compose(alg, gbar, tri3.v), tri2.v);
    out.squares[2] = h_eq(alg, h_compose(alg, tri3.w, fbar), tri1.w);
    out.squares[3] = h_eq(alg, h_compose(alg, h_shift(alg, tri1.u, 1), tri3.w),
                          h_compose(alg, tri2.w, gbar));
    return out;
}

}  // namespace twc
