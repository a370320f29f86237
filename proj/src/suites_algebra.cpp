#include "twc/suites.hpp"

namespace twc {

namespace {

std::string chain_str(const SectionAlgebra& alg, std::span<const BasisId> chain) {
    std::string s = "(";
    for (size_t i = 0; i < chain.size(); ++i) s += (i ? "," : "") + alg.basis[chain[i]].name;
    return s + ")";
}

// all hat tags over the basis with windows in [-w, w]
std::vector<HatTag> window_tags(const SectionAlgebra& alg, int w) {
    std::vector<HatTag> out;
    for (BasisId b = 0; b < static_cast<int>(alg.basis.size()); ++b)
        for (int s = -w; s <= w; ++s)
            for (int t = -w; t <= w; ++t) out.push_back({b, s, t});
    return out;
}

// direction-compatible random hat chain in tensor order
std::vector<HatTag> random_hat_chain(Rng& rng, const SectionAlgebra& alg, int n, int w) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<HatTag> chain;
        int b0 = rng.below(static_cast<int>(alg.basis.size()));
        chain.push_back({b0, rng.below(2 * w + 1) - w, rng.below(2 * w + 1) - w});
        bool dead = false;
        while (static_cast<int>(chain.size()) < n) {
            HatIdem need = hat_src(alg, chain.back());  // next factor's target
            std::vector<HatTag> cands;
            for (BasisId b = 0; b < static_cast<int>(alg.basis.size()); ++b) {
                if (alg.basis[b].dst != need.base) continue;
                for (int t = -w; t <= w; ++t) cands.push_back({b, need.shift, t});
            }
            if (cands.empty()) {
                dead = true;
                break;
            }
            chain.push_back(cands[rng.below(static_cast<int>(cands.size()))]);
        }
        if (!dead) return chain;
    }
    throw Error("random_hat_chain: no compatible chain");
}

HatElem tag_elem(const SectionAlgebra& alg, const HatTag& a) {
    return HatElem::single(a, Scalar::one(alg.field), alg.field);
}

Scalar sign_of(const SectionAlgebra& alg, int exponent) {
    return ((exponent % 2) + 2) % 2 == 0 ? Scalar::one(alg.field) : -Scalar::one(alg.field);
}

}  // namespace

void suite_stasheff(Report& rep, const std::string& tag, const SectionAlgebra& alg) {
    rep.add(tag + ".units", alg.check_units().pass());
    for (int n = 1; n <= alg.check_bound(); ++n) {
        StasheffReport r = alg.check_stasheff(n);
        std::string detail;
        if (!r.pass())
            detail = "first failing chain " + chain_str(alg, r.failures[0].first) + " residue " +
                     r.failures[0].second.str(alg.basis);
        rep.add(tag + ".stasheff.n" + std::to_string(n), r.pass(), detail);
    }
    // sign-mutation corpus: one flipped unit-rule coefficient per mutant.
    // A right-rule flip at i is only part of the corpus when the rule can
    // fire, i.e. some non-unit basis element starts at i (unit ⊗ unit pairs
    // resolve through the left rule).
    for (size_t i = 0; i < alg.idems.size(); ++i) {
        for (int side = 0; side < 2; ++side) {
            if (side == 1) {
                bool reachable = false;
                for (const auto& b : alg.basis)
                    if (!b.unit && b.src == static_cast<int>(i)) reachable = true;
                if (!reachable) continue;
            }
            SectionAlgebra mut = alg;
            (side == 0 ? mut.mutate_left_unit : mut.mutate_right_unit) = static_cast<int>(i);
            bool detected = !mut.check_units().pass();
            for (int n = 1; n <= mut.check_bound() && !detected; ++n)
                detected = !mut.check_stasheff(n).pass();
            rep.add(tag + ".mutation." + alg.idems[i] + (side == 0 ? ".left" : ".right"), detected,
                    detected ? "" : "mutant not rejected");
        }
    }
}

void suite_hat(Report& rep, const std::string& tag, const SectionAlgebra& alg, const SuiteParams& p) {
    Rng rng(p.seed ^ 0x68617453ull);  // deterministic per-suite stream
    const Field& F = alg.field;

    // hat-Stasheff. The window profile enters the computation only through
    // parities, so the parity sweep covers every |s| <= W profile; a sampled
    // set of full-range profiles cross-checks that reduction, and small
    // algebras get the literal full enumeration.
    for (int n = 1; n <= alg.check_bound(); ++n) {
        bool ok = true;
        std::string detail;
        std::vector<std::vector<BasisId>> chains;
        alg.for_each_chain(n, [&](std::span<const BasisId> c) {
            chains.emplace_back(c.begin(), c.end());
        });
        long long profiles_full = 1;
        for (int k = 0; k <= n; ++k) profiles_full *= (2 * p.window + 1);
        auto run_profile = [&](const std::vector<int>& w) {
            for (const auto& base : chains) {
                std::vector<HatTag> hat(n);
                for (int k = 0; k < n; ++k) hat[k] = {base[k], w[k], w[k + 1]};
                HatElem res = hat_stasheff_residue(alg, hat);
                if (!res.is_zero()) {
                    ok = false;
                    if (detail.empty())
                        detail = "chain " + chain_str(alg, base) + " profile w0=" + std::to_string(w[0]);
                }
            }
        };
        if (profiles_full * static_cast<long long>(chains.size()) <= 400000) {
            std::vector<int> w(n + 1, -p.window);
            while (true) {
                run_profile(w);
                int k = 0;
                while (k <= n && ++w[k] > p.window) w[k++] = -p.window;
                if (k > n) break;
            }
        } else {
            for (int mask = 0; mask < (1 << (n + 1)); ++mask) {
                std::vector<int> w(n + 1);
                for (int k = 0; k <= n; ++k) w[k] = (mask >> k) & 1;
                run_profile(w);
            }
            for (int c = 0; c < 200; ++c) {
                std::vector<int> w(n + 1);
                for (int k = 0; k <= n; ++k) w[k] = rng.below(2 * p.window + 1) - p.window;
                run_profile(w);
            }
        }
        rep.add(tag + ".hat_stasheff.n" + std::to_string(n), ok, detail);
    }

    // the eight identity groups, fuzzed over compatible hat chains
    bool nu_left_ok = true, nu_right_ok = true, nu_mid_ok = true;
    bool shift_ok = true, circ_nu_ok = true, unit_conj_ok = true;
    bool shifted_units_ok = true, triples_ok = true, pullout_ok = true, tau_sigma_mid_ok = true;
    for (int cse = 0; cse < p.fuzz_cases; ++cse) {
        int n = 1 + rng.below(std::min(alg.max_arity + 1, 4));
        std::vector<HatTag> v = random_hat_chain(rng, alg, n, p.window);
        HatElem base = hat_bn(alg, v);
        int s1 = v[0].t;           // window boundary after the leftmost factor
        int sn = v[n - 1].t;       // rightmost boundary

        // (1) nu-equivariance of the leftmost factor
        {
            std::vector<HatElem> lhs_chain;
            for (int k = 0; k < n; ++k) lhs_chain.push_back(tag_elem(alg, v[k]));
            lhs_chain[0] = nu_left(lhs_chain[0], 1);
            HatElem lhs = hat_bn_eval(alg, lhs_chain);
            HatElem rhs = nu_left(base, 1).scaled(sign_of(alg, s1 - sn + 1));
            if (!(lhs == rhs)) nu_left_ok = false;
        }
        // (2) nu^{-1} on the rightmost factor
        {
            std::vector<HatElem> lhs_chain;
            for (int k = 0; k < n; ++k) lhs_chain.push_back(tag_elem(alg, v[k]));
            lhs_chain[n - 1] = nu_right(lhs_chain[n - 1], -1);
            HatElem lhs = hat_bn_eval(alg, lhs_chain);
            int degs = 0;
            for (int k = 0; k + 1 < n; ++k) degs += hat_deg(alg, v[k]);
            HatElem rhs = nu_right(base, -1).scaled(sign_of(alg, 1 + degs));
            if (!(lhs == rhs)) nu_right_ok = false;
        }
        // (3) internal exchange a_l nu^{-1} ⊗ nu a_{l+1}
        if (n >= 2) {
            int l = 1 + rng.below(n - 1);  // paper index, factors v[l-1], v[l]
            std::vector<HatElem> lhs_chain;
            for (int k = 0; k < n; ++k) lhs_chain.push_back(tag_elem(alg, v[k]));
            lhs_chain[l - 1] = nu_right(lhs_chain[l - 1], -1);
            lhs_chain[l] = nu_left(lhs_chain[l], 1);
            HatElem lhs = hat_bn_eval(alg, lhs_chain);
            int sl = v[l - 1].t, sl1 = v[l].t;
            HatElem rhs = base.scaled(sign_of(alg, hat_deg(alg, v[l - 1]) + sl - sl1 + 1));
            if (!(lhs == rhs)) nu_mid_ok = false;
        }
        // shift equivariance
        {
            std::vector<HatTag> sh(v);
            for (auto& a : sh) a = shift_tag(a, 1);
            if (!(hat_bn(alg, sh) == shift_elem(base, 1))) shift_ok = false;
        }
        // circ/nu laws at n = 2
        if (n == 2) {
            HatElem a1 = tag_elem(alg, v[0]), a2 = tag_elem(alg, v[1]);
            int t1 = v[0].t, t2 = v[1].t;
            if (!(hat_circ(alg, nu_left(a1, 1), a2) == nu_left(base, 1).scaled(sign_of(alg, t1 - t2 + 1))))
                circ_nu_ok = false;
            if (!(hat_circ(alg, a1, nu_right(a2, -1)) ==
                  nu_right(base, -1).scaled(sign_of(alg, hat_deg(alg, v[0]) + 1))))
                circ_nu_ok = false;
            if (!(hat_circ(alg, nu_right(a1, -1), nu_left(a2, 1)) ==
                  base.scaled(sign_of(alg, t1 - t2 + hat_deg(alg, v[0]) + 1))))
                circ_nu_ok = false;
        }
        // sigma pull-out on the leftmost factor
        {
            HatIdem vu = hat_dst(alg, v[0]);
            std::vector<HatElem> lhs_chain;
            lhs_chain.push_back(hat_circ(alg, sigma_unit(alg, vu), tag_elem(alg, v[0])));
            for (int k = 1; k < n; ++k) lhs_chain.push_back(tag_elem(alg, v[k]));
            HatElem lhs = hat_bn_eval(alg, lhs_chain);
            HatElem rhs = -hat_circ(alg, sigma_unit(alg, vu), base);
            if (!(lhs == rhs)) pullout_ok = false;
        }
        // tau ⊗ sigma middle insertion with sign (-1)^{|a_l|}
        if (n >= 2) {
            int l = 1 + rng.below(n - 1);
            HatIdem uu = hat_src(alg, v[l - 1]);
            HatIdem vv = hat_dst(alg, v[l]);
            std::vector<HatElem> lhs_chain;
            for (int k = 0; k < n; ++k) lhs_chain.push_back(tag_elem(alg, v[k]));
            lhs_chain[l - 1] = hat_circ(alg, tag_elem(alg, v[l - 1]), tau_unit(alg, uu));
            lhs_chain[l] = hat_circ(alg, sigma_unit(alg, vv), tag_elem(alg, v[l]));
            HatElem lhs = hat_bn_eval(alg, lhs_chain);
            HatElem rhs = base.scaled(sign_of(alg, hat_deg(alg, v[l - 1])));
            if (!(lhs == rhs)) tau_sigma_mid_ok = false;
        }
        // composition with shifted units and the triple products, on a = v[0]
        {
            HatTag a = v[0];
            HatElem ae = tag_elem(alg, a);
            int s = a.s, t = a.t;
            HatIdem usrc = hat_src(alg, a), udst = hat_dst(alg, a);
            HatIdem u1{t - 1, usrc.base};
            if (!(hat_circ(alg, ae, sigma_unit(alg, u1)) == nu_right(ae, 1).scaled(sign_of(alg, t - 1))))
                shifted_units_ok = false;
            HatIdem u2{s, udst.base};
            if (!(hat_circ(alg, sigma_unit(alg, u2), ae) == nu_left(ae, 1).scaled(sign_of(alg, t - 1))))
                shifted_units_ok = false;
            HatIdem u3{t, usrc.base};
            if (!(hat_circ(alg, ae, tau_unit(alg, u3)) == nu_right(ae, -1).scaled(sign_of(alg, t))))
                shifted_units_ok = false;
            HatIdem u4{s - 1, udst.base};
            if (!(hat_circ(alg, tau_unit(alg, u4), ae) == nu_left(ae, -1).scaled(sign_of(alg, t))))
                shifted_units_ok = false;

            // triples
            HatElem sa = hat_circ(alg, sigma_unit(alg, u2), ae);
            if (!(hat_circ(alg, tau_unit(alg, u2), sa) == -ae)) triples_ok = false;
            HatElem ta = hat_circ(alg, tau_unit(alg, u4), ae);
            if (!(hat_circ(alg, sigma_unit(alg, u4), ta) == -ae)) triples_ok = false;
            HatElem at = hat_circ(alg, ae, tau_unit(alg, u3));
            if (!(hat_circ(alg, sigma_unit(alg, u2), at) == shift_elem(ae, 1))) triples_ok = false;
            if (!(hat_circ(alg, sa, tau_unit(alg, u3)) == -shift_elem(ae, 1))) triples_ok = false;
            HatElem atu = hat_circ(alg, ae, tau_unit(alg, u3));
            if (!(hat_circ(alg, atu, sigma_unit(alg, u3)) == ae)) triples_ok = false;
        }
    }
    // unit conjugation nu^s e_u nu^{-s} = e_{nu^s u} and tau∘sigma = e_u
    for (size_t i = 0; i < alg.idems.size() && unit_conj_ok; ++i) {
        for (int s = -p.window; s <= p.window; ++s) {
            HatIdem u{s, static_cast<int>(i)};
            HatElem unit0 = hat_unit(alg, HatIdem{0, static_cast<int>(i)});
            if (!(shift_elem(unit0, s) == hat_unit(alg, u))) unit_conj_ok = false;
            if (!(hat_circ(alg, tau_unit(alg, u), sigma_unit(alg, u)) == hat_unit(alg, u)))
                unit_conj_ok = false;
            if (!(hat_circ(alg, sigma_unit(alg, u), tau_unit(alg, u)) ==
                  hat_unit(alg, HatIdem{s + 1, static_cast<int>(i)})))
                unit_conj_ok = false;
            // sigma(e_u)[-1] = -sigma(e_{nu^{-1}u}), same for tau
            if (!(shift_elem(sigma_unit(alg, u), -1) ==
                  -sigma_unit(alg, HatIdem{s - 1, static_cast<int>(i)})))
                unit_conj_ok = false;
            if (!(shift_elem(tau_unit(alg, u), -1) == -tau_unit(alg, HatIdem{s - 1, static_cast<int>(i)})))
                unit_conj_ok = false;
        }
    }
    (void)F;
    rep.add(tag + ".hat.nu_left", nu_left_ok);
    rep.add(tag + ".hat.nu_right", nu_right_ok);
    rep.add(tag + ".hat.nu_exchange", nu_mid_ok);
    rep.add(tag + ".hat.shift_equivariance", shift_ok);
    rep.add(tag + ".hat.circ_nu", circ_nu_ok);
    rep.add(tag + ".hat.unit_conjugation", unit_conj_ok);
    rep.add(tag + ".hat.shifted_units", shifted_units_ok);
    rep.add(tag + ".hat.triple_products", triples_ok);
    rep.add(tag + ".hat.sigma_pullout", pullout_ok);
    rep.add(tag + ".hat.tau_sigma_insertion", tau_sigma_mid_ok);
}

namespace {

// random homogeneous morphism between plain modules
AdMorphism random_ad(Rng& rng, const SectionAlgebra& alg, const SModule& src, const SModule& dst,
                     int degree) {
    HomBasis hb = hom_basis(alg, src, dst, degree);
    std::vector<Scalar> coords(hb.dim(), Scalar::zero(alg.field));
    for (auto& c : coords)
        if (rng.chance(1, 2)) c = rng.scalar(alg.field);
    return devectorize(alg, src, dst, hb, coords);
}

}  // namespace

void suite_adcat(Report& rep, const std::string& tag, const SectionAlgebra& alg, const SuiteParams& p) {
    Rng rng(p.seed ^ 0x61644361ull);
    bool unit_laws = true, embed = true, strict3 = true, components = true, blockbn = true;
    bool shift_laws = true, st_basic = true, st_three = true, special_pull = true;
    bool sigma_pull = true, tausigma = true, sandwich = true, shift_st = true;

    for (int cse = 0; cse < p.fuzz_cases; ++cse) {
        GenBounds b = p.bounds;
        SModule X = random_module(rng, alg, b);
        SModule Y = random_module(rng, alg, b);
        int d = rng.below(5) - 2;
        AdMorphism f = random_ad(rng, alg, X, Y, d);

        // unit laws
        if (!(circ(alg, identity_of(alg, Y), f) == f)) unit_laws = false;
        AdMorphism fI = circ(alg, f, identity_of(alg, X));
        if (!(fI == f.scaled(sign_of(alg, d + 1)))) unit_laws = false;

        // embedding L respects composition; specials compose to specials
        {
            SModule Z = random_module(rng, alg, b);
            std::map<HatIdem, Matrix> gf, hf;
            for (const auto& [u, dy] : Y.dims) {
                Matrix m(Z.dim_at(u), dy, alg.field);
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rng.scalar(alg.field);
                if (!m.is_zero()) gf.emplace(u, m);
            }
            for (const auto& [u, dx] : X.dims) {
                Matrix m(Y.dim_at(u), dx, alg.field);
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rng.scalar(alg.field);
                if (!m.is_zero()) hf.emplace(u, m);
            }
            AdMorphism g = special_of(alg, Y, Z, gf);
            AdMorphism h = special_of(alg, X, Y, hf);
            AdMorphism comp = circ(alg, g, h);
            if (!is_special(alg, comp)) embed = false;
            std::map<HatIdem, Matrix> want;
            for (const auto& [u, m] : gf) {
                auto it = hf.find(u);
                if (it == hf.end()) continue;
                Matrix pr = m * it->second;
                if (!pr.is_zero()) want.emplace(u, pr);
            }
            if (!(comp == special_of(alg, X, Z, want))) embed = false;

            // b_n with a strict factor dies for n != 2
            std::array<AdMorphism, 3> c3{g, h, random_ad(rng, alg, random_module(rng, alg, b), X, 0)};
            if (!ad_bn(alg, c3).is_zero()) strict3 = false;
        }

        // component calculus: slicing reproduces (-1)^{|f|+1} p ∘ f ∘ s
        {
            SModule A = random_module(rng, alg, b), B = random_module(rng, alg, b);
            SModule C = random_module(rng, alg, b), D = random_module(rng, alg, b);
            std::array<SModule, 2> cols{A, B}, rows{C, D};
            AdMorphism big = random_ad(rng, alg, direct_sum(cols), direct_sum(rows), d);
            for (int i = 0; i < 2 && components; ++i)
                for (int j = 0; j < 2; ++j) {
                    AdMorphism slice = block_of(alg, big, rows, i, cols, j);
                    AdMorphism via =
                        circ(alg, circ(alg, projection(alg, rows, i), big), injection(alg, cols, j))
                            .scaled(sign_of(alg, d + 1));
                    if (!(slice == via)) {
                        components = false;
                        break;
                    }
                }
            // reassembly
            std::vector<std::vector<AdMorphism>> blocks(2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) blocks[i].push_back(block_of(alg, big, rows, i, cols, j));
            if (!(assemble(alg, blocks, rows, cols) == big)) components = false;

            // matrix of the composition equals the matrix product of blocks
            SModule E2 = random_module(rng, alg, b), F2 = random_module(rng, alg, b);
            std::array<SModule, 2> rows2{E2, F2};
            AdMorphism big2 = random_ad(rng, alg, direct_sum(rows), direct_sum(rows2), rng.below(3) - 1);
            AdMorphism comp = circ(alg, big2, big);
            for (int t = 0; t < 2 && blockbn; ++t)
                for (int i = 0; i < 2; ++i) {
                    AdMorphism want = circ(alg, block_of(alg, big2, rows2, t, rows, 0),
                                           block_of(alg, big, rows, 0, cols, i)) +
                                      circ(alg, block_of(alg, big2, rows2, t, rows, 1),
                                           block_of(alg, big, rows, 1, cols, i));
                    if (!(block_of(alg, comp, rows2, t, cols, i) == want)) {
                        blockbn = false;
                        break;
                    }
                }
        }

        // shifts
        {
            if (!(identity_of(alg, shift_module(X, 1)) == shift_morphism(alg, identity_of(alg, X), 1)))
                shift_laws = false;
            if (!(shift_morphism(alg, shift_morphism(alg, f, 1), -1) == f)) shift_laws = false;
        }

        // sigma/tau calculus
        {
            AdMorphism sX = sigma_of(alg, X), tX = tau_of(alg, X);
            AdMorphism sY = sigma_of(alg, Y), tY = tau_of(alg, Y);
            if (!(circ(alg, tX, sX) == identity_of(alg, X))) st_basic = false;
            if (!(circ(alg, sX, tX) == identity_of(alg, shift_module(X, 1)))) st_basic = false;
            if (!(circ(alg, circ(alg, f, tX), sX) == f)) st_three = false;
            if (!(circ(alg, tY, circ(alg, sY, f)) == -f)) st_three = false;
            AdMorphism g = random_ad(rng, alg, X, shift_module(Y, 1), d);
            if (!(circ(alg, sY, circ(alg, tY, g)) == -g)) st_three = false;
            if (!(circ(alg, sY, circ(alg, f, tX)) == shift_morphism(alg, f, 1))) st_three = false;
            if (!(circ(alg, circ(alg, sY, f), tX) == -shift_morphism(alg, f, 1))) st_three = false;
            if (!(shift_morphism(alg, sX, -1) == -sigma_of(alg, shift_module(X, -1)))) st_basic = false;
            if (!(shift_morphism(alg, tX, -1) == -tau_of(alg, shift_module(X, -1)))) st_basic = false;
        }

        // chains for the pull-out and sandwich laws
        {
            int n = 2 + rng.below(2);
            std::vector<SModule> objs(n + 1);
            for (auto& m : objs) m = random_module(rng, alg, b);
            std::vector<AdMorphism> chain;  // tensor order [f_n, ..., f_1]
            std::vector<int> degs(n);
            for (int k = 0; k < n; ++k) {
                degs[k] = rng.below(4) - 2;
                chain.push_back(random_ad(rng, alg, objs[n - 1 - k], objs[n - k], degs[k]));
            }
            AdMorphism base = ad_bn(alg, chain);

            // special pull-out on the left
            std::map<HatIdem, Matrix> gfib;
            SModule U = random_module(rng, alg, b);
            for (const auto& [u, dv] : objs[n].dims) {
                Matrix m(U.dim_at(u), dv, alg.field);
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rng.scalar(alg.field);
                if (!m.is_zero()) gfib.emplace(u, m);
            }
            AdMorphism g = special_of(alg, objs[n], U, gfib);
            std::vector<AdMorphism> lchain = chain;
            lchain[0] = circ(alg, g, chain[0]);
            if (!(ad_bn(alg, lchain) == circ(alg, g, base))) special_pull = false;

            // special pull-out on the right with sign (-1)^{|f_n|+..+|f_2|+1}
            std::map<HatIdem, Matrix> hfib;
            SModule V = random_module(rng, alg, b);
            for (const auto& [u, dv] : objs[0].dims) {
                Matrix m(dv, V.dim_at(u), alg.field);
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rng.scalar(alg.field);
                if (!m.is_zero()) hfib.emplace(u, m);
            }
            AdMorphism h = special_of(alg, V, objs[0], hfib);
            std::vector<AdMorphism> rchain = chain;
            rchain[n - 1] = circ(alg, chain[n - 1], h);
            int dsum = 0;
            for (int k = 0; k + 1 < n; ++k) dsum += degs[k];  // |f_n| + ... + |f_2|
            if (!(ad_bn(alg, rchain) == circ(alg, base, h).scaled(sign_of(alg, dsum + 1))))
                special_pull = false;

            // sigma pull-out
            std::vector<AdMorphism> schain = chain;
            schain[0] = circ(alg, sigma_of(alg, objs[n]), chain[0]);
            if (!(ad_bn(alg, schain) == -circ(alg, sigma_of(alg, objs[n]), base))) sigma_pull = false;

            // tau ⊗ sigma middle insertion: paper index l, factors f_{l+1}, f_l
            if (n >= 2) {
                int l = 1 + rng.below(n - 1);
                int il1 = n - 1 - l;  // tensor position of f_{l+1}
                int il = n - l;       // tensor position of f_l
                std::vector<AdMorphism> mchain = chain;
                mchain[il1] = circ(alg, chain[il1], tau_of(alg, objs[l]));
                mchain[il] = circ(alg, sigma_of(alg, objs[l]), chain[il]);
                if (!(ad_bn(alg, mchain) == base.scaled(sign_of(alg, degs[il1])))) tausigma = false;
            }

            // sandwich law with d_l = |f_{l+1}| + ... + |f_n| + 1
            {
                int l = 1 + rng.below(n);
                std::vector<AdMorphism> wchain;
                for (int k = 0; k < n - l; ++k) wchain.push_back(shift_morphism(alg, chain[k], 1));
                wchain.push_back(circ(alg, sigma_of(alg, objs[l]), chain[n - l]));
                for (int k = n - l + 1; k < n; ++k) wchain.push_back(chain[k]);
                int dl = 1;
                for (int k = 0; k < n - l; ++k) dl += degs[k];
                if (!(circ(alg, sigma_of(alg, objs[n]), base) ==
                      ad_bn(alg, wchain).scaled(sign_of(alg, dl))))
                    sandwich = false;
            }

            // translation is an automorphism of the operations
            std::vector<AdMorphism> shchain;
            for (const auto& c : chain) shchain.push_back(shift_morphism(alg, c, 1));
            if (!(ad_bn(alg, shchain) == shift_morphism(alg, base, 1))) shift_st = false;
        }
    }
    rep.add(tag + ".ad.unit_laws", unit_laws);
    rep.add(tag + ".ad.embedding", embed);
    rep.add(tag + ".ad.strict_vanishing", strict3);
    rep.add(tag + ".ad.components", components);
    rep.add(tag + ".ad.block_bn", blockbn);
    rep.add(tag + ".ad.shift_laws", shift_laws);
    rep.add(tag + ".ad.sigma_tau", st_basic);
    rep.add(tag + ".ad.sigma_tau_three", st_three);
    rep.add(tag + ".ad.special_pullout", special_pull);
    rep.add(tag + ".ad.sigma_pullout", sigma_pull);
    rep.add(tag + ".ad.tau_sigma_insertion", tausigma);
    rep.add(tag + ".ad.sandwich", sandwich);
    rep.add(tag + ".ad.shift_equivariance", shift_st);
}

}  // namespace twc
