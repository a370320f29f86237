#include "twc/confl.hpp"

namespace twc {

namespace {

// fiber matrix of a special morphism at u, materializing zeros
Matrix fiber_at(const SectionAlgebra& alg, const TwMorphism& f, const HatIdem& u) {
    auto fibers = special_fibers(alg, f.under);
    auto it = fibers.find(u);
    if (it != fibers.end()) return it->second;
    return Matrix(f.dst.module.dim_at(u), f.src.module.dim_at(u), alg.field);
}

std::vector<HatIdem> support_union(std::initializer_list<const SModule*> mods) {
    std::map<HatIdem, int> acc;
    for (const SModule* m : mods)
        for (const auto& [u, d] : m->dims) acc[u] = 1;
    std::vector<HatIdem> out;
    for (const auto& [u, d] : acc) out.push_back(u);
    return out;
}

void require_cocycle(const SectionAlgebra& alg, const TwMorphism& f, const char* who) {
    if (!f.under.is_zero() && !f.under.has_degree(alg, -1))
        throw Error(std::string(who) + ": morphism must be homogeneous of degree -1");
    if (!is_cocycle(alg, f)) throw Error(std::string(who) + ": morphism is not a cocycle");
}

}  // namespace

TwObject zero_object(const SectionAlgebra& alg) {
    SModule z;
    return TwObject{z, zero_morphism(alg, z, z), 1};
}

TwObject tw_triangular(const SectionAlgebra& alg, const TwObject& X, const TwObject& Y,
                       const AdMorphism& gamma) {
    if (!(gamma.src() == Y.module) || !(gamma.dst() == X.module))
        throw Error("tw_triangular: gamma must map Y -> X");
    if (!gamma.has_degree(alg, 0)) throw Error("tw_triangular: gamma of wrong degree (want 0)");
    TwMorphism gtw{Y, X, gamma};
    TwMorphism res = b1(alg, gtw);
    if (!res.under.is_zero()) {
        std::string diag = "tw_triangular: b1(gamma) != 0; residue terms:";
        for (const auto& [a, m] : res.under.terms()) diag += " " + hat_tag_str(alg, a) + ":" + m.str();
        throw Error(diag);
    }
    std::array<SModule, 2> parts{X.module, Y.module};
    AdMorphism delta = assemble(alg,
                                {{X.delta, gamma}, {zero_morphism(alg, X.module, Y.module), Y.delta}},
                                parts, parts);
    // coefficient paths run through Y, jump the corner at most once, then
    // run through X, so the parts' insertion bounds add
    TwObject E{direct_sum(parts), delta, insertion_bound(alg, delta, X.nil_index + Y.nil_index)};
    if (!mc_residue(alg, delta, E.nil_index).is_zero())
        throw Error("tw_triangular: Maurer-Cartan violated (internal)");
    return E;
}

TwObject tw_direct_sum(const SectionAlgebra& alg, const TwObject& a, const TwObject& b) {
    return tw_triangular(alg, a, b, zero_morphism(alg, b.module, a.module));
}

Conflation make_canonical(const SectionAlgebra& alg, const TwObject& X, const TwObject& Y,
                          const AdMorphism& gamma) {
    TwObject E = tw_triangular(alg, X, Y, gamma);
    std::array<SModule, 2> parts{X.module, Y.module};
    TwMorphism f{X, E, injection(alg, parts, 0)};
    TwMorphism g{E, Y, projection(alg, parts, 1)};
    return Conflation{X, E, Y, f, g, true, gamma};
}

Conflation validate_special(const SectionAlgebra& alg, const TwMorphism& f, const TwMorphism& g) {
    if (!(f.dst == g.src)) throw Error("validate_special: middle objects disagree");
    if (!is_special(alg, f.under) || !is_special(alg, g.under))
        throw Error("validate_special: morphisms must be special");
    require_cocycle(alg, f, "validate_special(f)");
    require_cocycle(alg, g, "validate_special(g)");
    const SModule& mx = f.src.module;
    const SModule& me = f.dst.module;
    const SModule& my = g.dst.module;
    for (const HatIdem& u : support_union({&mx, &me, &my})) {
        int dx = mx.dim_at(u), de = me.dim_at(u), dy = my.dim_at(u);
        Matrix fu = fiber_at(alg, f, u), gu = fiber_at(alg, g, u);
        std::string at = " at idempotent (" + std::to_string(u.shift) + "," + alg.idems.at(u.base) + ")";
        if (dx + dy != de) throw Error("validate_special: fiber dimensions not exact" + at);
        if (fu.rank() != dx) throw Error("validate_special: not an inflation" + at);
        if (gu.rank() != dy) throw Error("validate_special: not a deflation" + at);
        if (!(gu * fu).is_zero()) throw Error("validate_special: g∘f != 0" + at);
    }
    // canonical iff the shapes are literally the standard ones
    bool canon = me == direct_sum(std::array<SModule, 2>{mx, my}) &&
                 f.under == injection(alg, std::array<SModule, 2>{mx, my}, 0) &&
                 g.under == projection(alg, std::array<SModule, 2>{mx, my}, 1);
    Conflation xi{f.src, f.dst, g.dst, f, g, canon, {}};
    if (canon) {
        std::array<SModule, 2> parts{mx, my};
        xi.gamma = block_of(alg, f.dst.delta, parts, 0, parts, 1);
    }
    return xi;
}

bool is_special_inflation(const SectionAlgebra& alg, const TwMorphism& f) {
    if (!is_special(alg, f.under) || !is_cocycle(alg, f)) return false;
    if (!f.under.is_zero() && !f.under.has_degree(alg, -1)) return false;
    for (const HatIdem& u : support_union({&f.src.module, &f.dst.module}))
        if (fiber_at(alg, f, u).rank() != f.src.module.dim_at(u)) return false;
    return true;
}

bool is_special_deflation(const SectionAlgebra& alg, const TwMorphism& g) {
    if (!is_special(alg, g.under) || !is_cocycle(alg, g)) return false;
    if (!g.under.is_zero() && !g.under.has_degree(alg, -1)) return false;
    for (const HatIdem& u : support_union({&g.src.module, &g.dst.module}))
        if (fiber_at(alg, g, u).rank() != g.dst.module.dim_at(u)) return false;
    return true;
}

Canonicalized canonicalize(const SectionAlgebra& alg, const Conflation& xi) {
    if (xi.canonical) {
        TwMorphism id = identity_tw(alg, xi.E);
        return Canonicalized{id, id, xi};
    }
    // fiberwise: complete f_u, g_u to an isomorphism h_u = (f+_u(1 - s_u g_u); g_u)
    std::map<HatIdem, Matrix> hf;
    for (const HatIdem& u : support_union({&xi.X.module, &xi.E.module, &xi.Y.module})) {
        int dx = xi.X.module.dim_at(u), de = xi.E.module.dim_at(u), dy = xi.Y.module.dim_at(u);
        if (de == 0) continue;
        Matrix fu = fiber_at(alg, xi.f, u), gu = fiber_at(alg, xi.g, u);
        // right inverse of g_u (exact solve per column)
        Matrix su(de, dy, alg.field);
        for (int j = 0; j < dy; ++j) {
            std::vector<Scalar> e(dy, Scalar::zero(alg.field));
            e[j] = Scalar::one(alg.field);
            auto col = solve_linear(gu, e);
            if (!col) throw Error("canonicalize: deflation fiber is not surjective");
            for (int i = 0; i < de; ++i) su.at(i, j) = (*col)[i];
        }
        // left inverse of f_u: solve f^T y = e_i
        Matrix ft(dx, de, alg.field);
        for (int i = 0; i < de; ++i)
            for (int j = 0; j < dx; ++j) ft.at(j, i) = fu.at(i, j);
        Matrix lu(dx, de, alg.field);
        for (int i = 0; i < dx; ++i) {
            std::vector<Scalar> e(dx, Scalar::zero(alg.field));
            e[i] = Scalar::one(alg.field);
            auto row = solve_linear(ft, e);
            if (!row) throw Error("canonicalize: inflation fiber is not injective");
            for (int j = 0; j < de; ++j) lu.at(i, j) = (*row)[j];
        }
        Matrix proj = Matrix::identity(de, alg.field) - su * gu;
        Matrix hu(dx + dy, de, alg.field);
        hu.paste(0, 0, lu * proj);
        hu.paste(dx, 0, gu);
        hf.emplace(u, std::move(hu));
    }
    SModule ebar = direct_sum(std::array<SModule, 2>{xi.X.module, xi.Y.module});
    AdMorphism h = special_of(alg, xi.E.module, ebar, hf);
    TwObject Ebar = transport_differential(alg, h, xi.E);
    std::array<SModule, 2> parts{xi.X.module, xi.Y.module};
    // forced by the triangular-form lemma; cheap sanity checks
    if (!block_of(alg, Ebar.delta, parts, 1, parts, 0).is_zero())
        throw Error("canonicalize: transported delta is not upper triangular");
    if (!(block_of(alg, Ebar.delta, parts, 0, parts, 0) == xi.X.delta) ||
        !(block_of(alg, Ebar.delta, parts, 1, parts, 1) == xi.Y.delta))
        throw Error("canonicalize: transported delta has wrong diagonal");
    AdMorphism gamma = block_of(alg, Ebar.delta, parts, 0, parts, 1);
    Conflation can = make_canonical(alg, xi.X, xi.Y, gamma);
    TwMorphism iso{xi.E, can.E, h};
    if (!is_cocycle(alg, iso)) throw Error("canonicalize: completed isomorphism is not a cocycle");
    auto hinv = special_inverse(alg, h);
    TwMorphism iso_inv{can.E, xi.E, *hinv};
    return Canonicalized{iso, iso_inv, can};
}

std::optional<TwMorphism> equivalent(const SectionAlgebra& alg, const Conflation& xi,
                                     const Conflation& xi2) {
    if (!(xi.X == xi2.X) || !(xi.Y == xi2.Y)) return std::nullopt;
    Canonicalized c1 = canonicalize(alg, xi), c2 = canonicalize(alg, xi2);
    // ladder isomorphisms between canonical conflations are triangular with
    // identity diagonal; the corner solves b1(s) = gamma2 - gamma1
    TwMorphism diff{xi.Y, xi.X, c2.can.gamma - c1.can.gamma};
    auto s = coboundary_witness(alg, diff);
    if (!s) return std::nullopt;
    std::array<SModule, 2> parts{xi.X.module, xi.Y.module};
    AdMorphism t = assemble(alg,
                            {{identity_of(alg, xi.X.module), s->under},
                             {zero_morphism(alg, xi.X.module, xi.Y.module), identity_of(alg, xi.Y.module)}},
                            parts, parts);
    TwMorphism ttw{c1.can.E, c2.can.E, t};
    if (!is_cocycle(alg, ttw)) throw Error("equivalent: corner witness failed the cocycle check");
    TwMorphism h = star(alg, c2.iso_inv, star(alg, ttw, c1.iso));
    // ladder must commute on the nose
    if (!(star(alg, h, xi.f).under == xi2.f.under) || !(star(alg, xi2.g, h).under == xi.g.under))
        throw Error("equivalent: ladder does not commute");
    return h;
}

std::pair<TwMorphism, Conflation> pushout(const SectionAlgebra& alg, const Conflation& xi,
                                          const TwMorphism& h) {
    if (!xi.canonical) throw Error("pushout: conflation must be canonical");
    if (!(h.src == xi.X)) throw Error("pushout: h must start at X");
    require_cocycle(alg, h, "pushout");
    TwMorphism gtw{xi.Y, xi.X, xi.gamma};
    AdMorphism gamma1 = star(alg, h, gtw).under;
    Conflation out = make_canonical(alg, h.dst, xi.Y, gamma1);
    std::array<SModule, 2> sparts{xi.X.module, xi.Y.module};
    std::array<SModule, 2> dparts{h.dst.module, xi.Y.module};
    AdMorphism t = assemble(alg,
                            {{h.under, zero_morphism(alg, xi.Y.module, h.dst.module)},
                             {zero_morphism(alg, xi.X.module, xi.Y.module), identity_of(alg, xi.Y.module)}},
                            dparts, sparts);
    TwMorphism ttw{xi.E, out.E, t};
    if (!is_cocycle(alg, ttw)) throw Error("pushout: connecting map is not a cocycle");
    if (!(star(alg, ttw, xi.f).under == star(alg, out.f, h).under) ||
        !(star(alg, out.g, ttw).under == xi.g.under))
        throw Error("pushout: ladder does not commute");
    return {ttw, out};
}

std::pair<TwMorphism, Conflation> pullback(const SectionAlgebra& alg, const Conflation& xi,
                                           const TwMorphism& h) {
    if (!xi.canonical) throw Error("pullback: conflation must be canonical");
    if (!(h.dst == xi.Y)) throw Error("pullback: h must end at Y");
    require_cocycle(alg, h, "pullback");
    TwMorphism gtw{xi.Y, xi.X, xi.gamma};
    AdMorphism gamma1 = (-star(alg, gtw, h).under);
    Conflation out = make_canonical(alg, xi.X, h.src, gamma1);
    std::array<SModule, 2> sparts{xi.X.module, h.src.module};
    std::array<SModule, 2> dparts{xi.X.module, xi.Y.module};
    AdMorphism t = assemble(alg,
                            {{identity_of(alg, xi.X.module), zero_morphism(alg, h.src.module, xi.X.module)},
                             {zero_morphism(alg, xi.X.module, xi.Y.module), h.under}},
                            dparts, sparts);
    TwMorphism ttw{out.E, xi.E, t};
    if (!is_cocycle(alg, ttw)) throw Error("pullback: connecting map is not a cocycle");
    if (!(star(alg, ttw, out.f).under == xi.f.under) ||
        !(star(alg, xi.g, ttw).under == star(alg, h, out.g).under))
        throw Error("pullback: ladder does not commute");
    return {ttw, out};
}

TwObject shift_tw(const SectionAlgebra& alg, const TwObject& x, int k) {
    return TwObject{shift_module(x.module, k), shift_morphism(alg, x.delta, k), x.nil_index};
}

TwMorphism shift_tw(const SectionAlgebra& alg, const TwMorphism& f, int k) {
    return TwMorphism{shift_tw(alg, f.src, k), shift_tw(alg, f.dst, k), shift_morphism(alg, f.under, k)};
}

Conflation psi(const SectionAlgebra& alg, const TwMorphism& h) {
    require_cocycle(alg, h, "psi");
    TwObject X = shift_tw(alg, h.dst, -1);
    if (!(shift_tw(alg, X, 1) == h.dst)) throw Error("psi: target of h is not a shift");
    AdMorphism gamma = -circ(alg, tau_of(alg, X.module), h.under);
    return make_canonical(alg, X, h.src, gamma);
}

TwMorphism psi_inv(const SectionAlgebra& alg, const Conflation& xi) {
    if (!xi.canonical) throw Error("psi_inv: conflation must be canonical");
    AdMorphism h = circ(alg, sigma_of(alg, xi.X.module), xi.gamma);
    TwMorphism out{xi.Y, shift_tw(alg, xi.X, 1), h};
    if (!is_cocycle(alg, out)) throw Error("psi_inv: sigma∘gamma is not a cocycle");
    return out;
}

std::pair<TwObject, TwMorphism> J_object(const SectionAlgebra& alg, const TwObject& x) {
    TwObject tx = shift_tw(alg, x, 1);
    std::array<SModule, 2> parts{x.module, tx.module};
    TwObject j = tw_triangular(alg, x, tx, -tau_of(alg, x.module));
    AdMorphism s = assemble(alg,
                            {{zero_morphism(alg, x.module, x.module), zero_morphism(alg, tx.module, x.module)},
                             {-sigma_of(alg, x.module), zero_morphism(alg, tx.module, tx.module)}},
                            parts, parts);
    TwMorphism stw{j, j, s};
    if (!(b1(alg, stw).under == identity_of(alg, j.module)))
        throw Error("J_object: b1(s) != identity (internal)");
    return {j, stw};
}

TwMorphism J_morphism(const SectionAlgebra& alg, const TwMorphism& f) {
    TwObject jx = J_object(alg, f.src).first, jy = J_object(alg, f.dst).first;
    TwObject sx = shift_tw(alg, f.src, 1), sy = shift_tw(alg, f.dst, 1);
    std::array<SModule, 2> sparts{f.src.module, sx.module};
    std::array<SModule, 2> dparts{f.dst.module, sy.module};
    AdMorphism under = assemble(alg,
                                {{f.under, zero_morphism(alg, sx.module, f.dst.module)},
                                 {zero_morphism(alg, f.src.module, sy.module), shift_morphism(alg, f.under, 1)}},
                                dparts, sparts);
    return TwMorphism{jx, jy, under};
}

Conflation xi_J(const SectionAlgebra& alg, const TwObject& x) {
    return make_canonical(alg, x, shift_tw(alg, x, 1), -tau_of(alg, x.module));
}

TwMorphism factor_left(const SectionAlgebra& alg, const TwMorphism& h, const Conflation& xi) {
    if (!xi.canonical) throw Error("factor_left: conflation must be canonical");
    if (!(h.src == xi.X)) throw Error("factor_left: h must start at X");
    auto w = coboundary_witness(alg, h);
    if (!w) throw Error("factor_left: morphism is not homologically trivial");
    TwMorphism gtw{xi.Y, xi.X, xi.gamma};
    AdMorphism s = star(alg, *w, gtw).under;  // b1(w ⋆ gamma) = -(h ⋆ gamma)
    std::array<SModule, 2> parts{xi.X.module, xi.Y.module};
    AdMorphism under = assemble(alg, {{h.under, s}}, std::array<SModule, 1>{h.dst.module}, parts);
    TwMorphism out{xi.E, h.dst, under};
    if (!is_cocycle(alg, out)) throw Error("factor_left: factorization is not a cocycle");
    if (!(star(alg, out, xi.f).under == h.under)) throw Error("factor_left: h' ⋆ f != h");
    return out;
}

TwMorphism factor_right(const SectionAlgebra& alg, const TwMorphism& h, const Conflation& xi) {
    if (!xi.canonical) throw Error("factor_right: conflation must be canonical");
    if (!(h.dst == xi.Y)) throw Error("factor_right: h must end at Y");
    auto w = coboundary_witness(alg, h);
    if (!w) throw Error("factor_right: morphism is not homologically trivial");
    TwMorphism gtw{xi.Y, xi.X, xi.gamma};
    AdMorphism r = star(alg, gtw, *w).under;  // b1(gamma ⋆ w) = -(gamma ⋆ h)
    std::array<SModule, 2> parts{xi.X.module, xi.Y.module};
    AdMorphism under = assemble(alg, {{r}, {h.under}}, parts, std::array<SModule, 1>{h.src.module});
    TwMorphism out{h.src, xi.E, under};
    if (!is_cocycle(alg, out)) throw Error("factor_right: factorization is not a cocycle");
    if (!(star(alg, xi.g, out).under == h.under)) throw Error("factor_right: g ⋆ h' != h");
    return out;
}

namespace {

// special isomorphism permuting an ordered decomposition
TwMorphism permute_parts(const SectionAlgebra& alg, const TwObject& src,
                         std::span<const SModule> sparts, std::span<const int> perm) {
    // target parts[i] = sparts[perm[i]]
    std::vector<SModule> dparts;
    for (int p : perm) dparts.push_back(sparts[p]);
    std::vector<std::vector<AdMorphism>> blocks(perm.size());
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = 0; j < perm.size(); ++j)
            blocks[i].push_back(perm[i] == static_cast<int>(j)
                                    ? identity_of(alg, sparts[j])
                                    : zero_morphism(alg, sparts[j], dparts[i]));
    AdMorphism p = assemble(alg, blocks, dparts, sparts);
    TwObject dst = transport_differential(alg, p, src);
    return TwMorphism{src, dst, p};
}

}  // namespace

GeneralConflation cone_conflation(const SectionAlgebra& alg, const TwMorphism& f) {
    require_cocycle(alg, f, "cone_conflation");
    const TwObject& X = f.src;
    const TwObject& Y = f.dst;
    TwObject TX = shift_tw(alg, X, 1);
    std::array<SModule, 2> wparts{Y.module, TX.module};

    // W = Y ⊕ X[1] with corner f∘tau_X
    AdMorphism corner = circ(alg, f.under, tau_of(alg, X.module));
    TwObject W = tw_triangular(alg, Y, TX, corner);

    auto [JX, sJ] = J_object(alg, X);
    TwObject mid = tw_direct_sum(alg, JX, Y);
    std::array<SModule, 2> mparts{JX.module, Y.module};
    std::array<SModule, 2> jparts{X.module, TX.module};

    // alpha = (alpha_X, f)^t : X -> J(X) ⊕ Y
    AdMorphism alpha = assemble(alg, {{injection(alg, jparts, 0)}, {f.under}}, mparts,
                                std::array<SModule, 1>{X.module});
    // beta = (h, g): J(X) ⊕ Y -> W, h = [[-f,0],[0,I]], g = (I_Y, 0)^t
    AdMorphism hblk = assemble(alg,
                               {{-f.under, zero_morphism(alg, TX.module, Y.module)},
                                {zero_morphism(alg, X.module, TX.module), identity_of(alg, TX.module)}},
                               wparts, jparts);
    AdMorphism gblk = injection(alg, wparts, 0);
    AdMorphism beta = assemble(alg, {{hblk, gblk}}, std::array<SModule, 1>{W.module}, mparts);

    // canonical anchor: X -> (X ⊕ W, [[dX, (0,-tau_X)],[0, dW']]) -> W
    AdMorphism gammac = assemble(alg, {{zero_morphism(alg, Y.module, X.module), -tau_of(alg, X.module)}},
                                 std::array<SModule, 1>{X.module}, wparts);
    Conflation anchor = make_canonical(alg, X, W, gammac);

    // middle isomorphism chain: permutation then lower-triangular correction
    TwMorphism perm = permute_parts(alg, mid, std::array<SModule, 3>{X.module, TX.module, Y.module},
                                    std::array<int, 3>{0, 2, 1});
    // rho = (-f, 0)^t : X -> W; correction [[I,0],[rho,I]] into the anchor middle
    AdMorphism rho = assemble(alg, {{-f.under}, {zero_morphism(alg, X.module, TX.module)}}, wparts,
                              std::array<SModule, 1>{X.module});
    std::array<SModule, 2> eparts{X.module, W.module};
    AdMorphism corr = assemble(alg,
                               {{identity_of(alg, X.module), zero_morphism(alg, W.module, X.module)},
                                {rho, identity_of(alg, W.module)}},
                               eparts, eparts);
    TwMorphism corrtw{perm.dst, anchor.E, corr};
    if (!is_cocycle(alg, corrtw)) throw Error("cone_conflation: correction is not a cocycle");
    TwMorphism mid_to_anchor = star(alg, corrtw, perm);
    AdMorphism corr_inv = assemble(alg,
                                   {{identity_of(alg, X.module), zero_morphism(alg, W.module, X.module)},
                                    {-rho, identity_of(alg, W.module)}},
                                   eparts, eparts);
    auto perm_inv = special_inverse(alg, perm.under);
    TwMorphism anchor_to_mid =
        star(alg, TwMorphism{perm.dst, mid, *perm_inv}, TwMorphism{anchor.E, perm.dst, corr_inv});

    GeneralConflation out{TwMorphism{X, mid, alpha}, TwMorphism{mid, W, beta}, anchor, mid_to_anchor,
                          anchor_to_mid};
    if (!(star(alg, mid_to_anchor, out.f).under == anchor.f.under))
        throw Error("cone_conflation: inflation square does not commute");
    if (!(star(alg, anchor.g, mid_to_anchor).under == beta))
        throw Error("cone_conflation: deflation square does not commute");
    return out;
}

GeneralConflation rotate_conflation_right(const SectionAlgebra& alg, const Conflation& xi) {
    if (!xi.canonical) throw Error("rotate_conflation_right: conflation must be canonical");
    const TwObject& X = xi.X;
    const TwObject& Y = xi.Y;
    TwObject TX = shift_tw(alg, X, 1);
    std::array<SModule, 2> eparts{X.module, Y.module};
    std::array<SModule, 2> jparts{X.module, TX.module};

    // h_gamma = -sigma_X ∘ gamma : Y -> X[1]
    AdMorphism hgamma = -circ(alg, sigma_of(alg, X.module), xi.gamma);
    auto [JX, sJ] = J_object(alg, X);
    TwObject mid = tw_direct_sum(alg, JX, Y);
    std::array<SModule, 2> mparts{JX.module, Y.module};

    // alpha = (h_xi, g)^t with h_xi = diag(I_X, h_gamma) : E -> J(X)
    AdMorphism hxi = assemble(alg,
                              {{identity_of(alg, X.module), zero_morphism(alg, Y.module, X.module)},
                               {zero_morphism(alg, X.module, TX.module), hgamma}},
                              jparts, eparts);
    AdMorphism alpha = assemble(alg, {{hxi}, {xi.g.under}}, mparts, std::array<SModule, 1>{xi.E.module});
    // beta = (beta_X, -h_gamma)
    AdMorphism beta = assemble(alg, {{projection(alg, jparts, 1), -hgamma}},
                               std::array<SModule, 1>{TX.module}, mparts);

    // anchor: E -> (E ⊕ X[1], corner (-tau_X, 0)^t) -> X[1]
    AdMorphism gamma2 = assemble(alg, {{-tau_of(alg, X.module)}, {zero_morphism(alg, TX.module, Y.module)}},
                                 eparts, std::array<SModule, 1>{TX.module});
    Conflation anchor = make_canonical(alg, xi.E, TX, gamma2);
    // key rotation identity: sigma_E ∘ gamma2 = -f[1]
    if (!(circ(alg, sigma_of(alg, xi.E.module), gamma2) == -shift_morphism(alg, xi.f.under, 1)))
        throw Error("rotate_conflation_right: sigma∘gamma != -f[1] (internal)");

    TwMorphism perm = permute_parts(alg, mid, std::array<SModule, 3>{X.module, TX.module, Y.module},
                                    std::array<int, 3>{0, 2, 1});
    // correction [[I_E, 0],[rho, I]] with rho = (0, -h_gamma): E -> X[1]
    AdMorphism rho = assemble(alg, {{zero_morphism(alg, X.module, TX.module), -hgamma}},
                              std::array<SModule, 1>{TX.module}, eparts);
    std::array<SModule, 2> aparts{xi.E.module, TX.module};
    AdMorphism corr = assemble(alg,
                               {{identity_of(alg, xi.E.module), zero_morphism(alg, TX.module, xi.E.module)},
                                {rho, identity_of(alg, TX.module)}},
                               aparts, aparts);
    TwMorphism corrtw{perm.dst, anchor.E, corr};
    if (!is_cocycle(alg, corrtw)) throw Error("rotate_conflation_right: correction is not a cocycle");
    TwMorphism mid_to_anchor = star(alg, corrtw, perm);
    AdMorphism corr_inv = assemble(alg,
                                   {{identity_of(alg, xi.E.module), zero_morphism(alg, TX.module, xi.E.module)},
                                    {-rho, identity_of(alg, TX.module)}},
                                   aparts, aparts);
    auto perm_inv = special_inverse(alg, perm.under);
    TwMorphism anchor_to_mid =
        star(alg, TwMorphism{perm.dst, mid, *perm_inv}, TwMorphism{anchor.E, perm.dst, corr_inv});

    GeneralConflation out{TwMorphism{xi.E, mid, alpha}, TwMorphism{mid, TX, beta}, anchor,
                          mid_to_anchor, anchor_to_mid};
    if (!(star(alg, mid_to_anchor, out.f).under == anchor.f.under))
        throw Error("rotate_conflation_right: inflation square does not commute");
    if (!(star(alg, anchor.g, mid_to_anchor).under == beta))
        throw Error("rotate_conflation_right: deflation square does not commute");
    return out;
}

GeneralConflation rotate_conflation_left(const SectionAlgebra& alg, const Conflation& xi) {
    if (!xi.canonical) throw Error("rotate_conflation_left: conflation must be canonical");
    const TwObject& X = xi.X;
    const TwObject& Y = xi.Y;
    TwObject Ym1 = shift_tw(alg, Y, -1);
    std::array<SModule, 2> eparts{X.module, Y.module};
    std::array<SModule, 2> jparts{Ym1.module, Y.module};  // J(Y[-1]) = Y[-1] ⊕ Y

    // h^gamma = (-sigma_X ∘ gamma)[-1] : Y[-1] -> X
    AdMorphism hgamma = -circ(alg, sigma_of(alg, X.module), xi.gamma);
    AdMorphism hgam_m1 = shift_morphism(alg, hgamma, -1);
    auto [JY, sJ] = J_object(alg, Ym1);
    TwObject mid = tw_direct_sum(alg, JY, X);
    std::array<SModule, 2> mparts{JY.module, X.module};

    // alpha = (alpha_{Y[-1]}, -h^gamma)^t : Y[-1] -> J(Y[-1]) ⊕ X
    AdMorphism alpha = assemble(alg, {{injection(alg, jparts, 0)}, {-hgam_m1}}, mparts,
                                std::array<SModule, 1>{Ym1.module});
    // beta = (h^xi, f) with h^xi = diag(h^gamma, I_Y): J(Y[-1]) -> E
    AdMorphism hxi = assemble(alg,
                              {{hgam_m1, zero_morphism(alg, Y.module, X.module)},
                               {zero_morphism(alg, Ym1.module, Y.module), identity_of(alg, Y.module)}},
                              eparts, jparts);
    AdMorphism beta = assemble(alg, {{hxi, xi.f.under}}, std::array<SModule, 1>{xi.E.module}, mparts);

    // anchor: Y[-1] -> (Y[-1] ⊕ E, corner (0, -tau_{Y[-1]})) -> E
    AdMorphism gamma2 = assemble(alg,
                                 {{zero_morphism(alg, X.module, Ym1.module), -tau_of(alg, Ym1.module)}},
                                 std::array<SModule, 1>{Ym1.module}, eparts);
    Conflation anchor = make_canonical(alg, Ym1, xi.E, gamma2);
    // key rotation identity: sigma_{Y[-1]} ∘ gamma2 = -g
    if (!(circ(alg, sigma_of(alg, Ym1.module), gamma2) == -xi.g.under))
        throw Error("rotate_conflation_left: sigma∘gamma != -g (internal)");

    TwMorphism perm = permute_parts(alg, mid, std::array<SModule, 3>{Ym1.module, Y.module, X.module},
                                    std::array<int, 3>{0, 2, 1});
    // correction [[I, 0],[rho', I_E]] with rho' = (h^gamma, 0)^t: Y[-1] -> E
    AdMorphism rho = assemble(alg, {{hgam_m1}, {zero_morphism(alg, Ym1.module, Y.module)}}, eparts,
                              std::array<SModule, 1>{Ym1.module});
    std::array<SModule, 2> aparts{Ym1.module, xi.E.module};
    AdMorphism corr = assemble(alg,
                               {{identity_of(alg, Ym1.module), zero_morphism(alg, xi.E.module, Ym1.module)},
                                {rho, identity_of(alg, xi.E.module)}},
                               aparts, aparts);
    TwMorphism corrtw{perm.dst, anchor.E, corr};
    if (!is_cocycle(alg, corrtw)) throw Error("rotate_conflation_left: correction is not a cocycle");
    TwMorphism mid_to_anchor = star(alg, corrtw, perm);
    AdMorphism corr_inv = assemble(alg,
                                   {{identity_of(alg, Ym1.module), zero_morphism(alg, xi.E.module, Ym1.module)},
                                    {-rho, identity_of(alg, xi.E.module)}},
                                   aparts, aparts);
    auto perm_inv = special_inverse(alg, perm.under);
    TwMorphism anchor_to_mid =
        star(alg, TwMorphism{perm.dst, mid, *perm_inv}, TwMorphism{anchor.E, perm.dst, corr_inv});

    GeneralConflation out{TwMorphism{Ym1, mid, alpha}, TwMorphism{mid, xi.E, beta}, anchor,
                          mid_to_anchor, anchor_to_mid};
    if (!(star(alg, mid_to_anchor, out.f).under == anchor.f.under))
        throw Error("rotate_conflation_left: inflation square does not commute");
    if (!(star(alg, anchor.g, mid_to_anchor).under == beta))
        throw Error("rotate_conflation_left: deflation square does not commute");
    return out;
}

std::optional<TwMorphism> factor_through_deflation(const SectionAlgebra& alg, const Conflation& xi,
                                                   const TwMorphism& h) {
    if (!xi.canonical) throw Error("factor_through_deflation: conflation must be canonical");
    if (!(h.src == xi.E)) throw Error("factor_through_deflation: h must start at E");
    if (!star(alg, h, xi.f).under.is_zero()) return std::nullopt;
    std::array<SModule, 2> parts{xi.X.module, xi.Y.module};
    std::array<SModule, 1> vpart{h.dst.module};
    AdMorphism h2 = block_of(alg, h.under, vpart, 0, parts, 1);
    TwMorphism out{xi.Y, h.dst, h2};
    if (!is_cocycle(alg, out)) return std::nullopt;
    if (!(star(alg, out, xi.g).under == h.under)) return std::nullopt;
    return out;
}

std::optional<TwMorphism> factor_through_inflation(const SectionAlgebra& alg, const Conflation& xi,
                                                   const TwMorphism& h) {
    if (!xi.canonical) throw Error("factor_through_inflation: conflation must be canonical");
    if (!(h.dst == xi.E)) throw Error("factor_through_inflation: h must end at E");
    if (!star(alg, xi.g, h).under.is_zero()) return std::nullopt;
    std::array<SModule, 2> parts{xi.X.module, xi.Y.module};
    std::array<SModule, 1> vpart{h.src.module};
    AdMorphism h1 = block_of(alg, h.under, parts, 0, vpart, 0);
    TwMorphism out{h.src, xi.X, h1};
    if (!is_cocycle(alg, out)) return std::nullopt;
    if (!(star(alg, xi.f, out).under == h.under)) return std::nullopt;
    return out;
}

}  // namespace twc
