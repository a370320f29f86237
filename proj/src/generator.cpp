#include "twc/generator.hpp"

namespace twc {

SModule random_module(Rng& rng, const SectionAlgebra& alg, const GenBounds& b) {
    SModule m;
    int slots = 1 + rng.below(b.max_slots);
    for (int i = 0; i < slots; ++i) {
        int shift = rng.below(2 * b.window + 1) - b.window;
        int idem = rng.below(static_cast<int>(alg.idems.size()));
        m.dims[{shift, idem}] += 1 + rng.below(b.max_dim);
    }
    // keep the total small even when slots collide
    for (auto& [u, d] : m.dims) d = std::min(d, b.max_dim);
    m.normalize();
    return m;
}

TwObject random_tw(Rng& rng, const SectionAlgebra& alg, const GenBounds& b) {
    SModule m = random_module(rng, alg, b);
    // global slot order
    std::vector<std::pair<HatIdem, int>> slots;
    for (const auto& [u, d] : m.dims)
        for (int i = 0; i < d; ++i) slots.push_back({u, i});
    auto slot_index = [&](const HatIdem& u, int i) {
        for (size_t k = 0; k < slots.size(); ++k)
            if (slots[k].first == u && slots[k].second == i) return static_cast<int>(k);
        return -1;
    };
    int n = static_cast<int>(slots.size());
    auto band = [&](int k) { return n ? (3 * k) / n : 0; };  // three contiguous bands

    AdMorphism delta(m, m, alg.field);
    HomBasis hb = hom_basis(alg, m, m, 0);
    std::map<HatTag, Matrix> mats;
    for (const auto& e : hb.ents) {
        if (alg.basis.at(e.tag.base).unit) continue;  // no strict tags in generated deltas
        int si = slot_index(hat_src(alg, e.tag), e.col);
        int di = slot_index(hat_dst(alg, e.tag), e.row);
        // edges run strictly down the order and drop exactly one band
        if (di >= si) continue;
        if (band(di) != band(si) - 1) continue;
        if (!rng.chance(1, 3)) continue;
        Scalar c = rng.nonzero_scalar(alg.field);
        auto it = mats.find(e.tag);
        if (it == mats.end()) {
            Matrix z(m.dim_at(hat_dst(alg, e.tag)), m.dim_at(hat_src(alg, e.tag)), alg.field);
            it = mats.emplace(e.tag, std::move(z)).first;
        }
        it->second.at(e.row, e.col) = c;
    }
    for (const auto& [a, mat] : mats) delta.add_term(alg, a, mat);
    return validate_tw(alg, m, delta);
}

TwMorphism random_hom(Rng& rng, const SectionAlgebra& alg, const TwObject& x, const TwObject& y, int d) {
    HomBasis hb = hom_basis(alg, x.module, y.module, d);
    std::vector<Scalar> coords(hb.dim(), Scalar::zero(alg.field));
    for (auto& c : coords)
        if (rng.chance(1, 2)) c = rng.scalar(alg.field);
    return TwMorphism{x, y, devectorize(alg, x.module, y.module, hb, coords)};
}

TwMorphism random_cocycle(Rng& rng, const SectionAlgebra& alg, const TwObject& x, const TwObject& y,
                          int d) {
    HomBasis dom = hom_basis(alg, x.module, y.module, d);
    HomBasis cod = hom_basis(alg, x.module, y.module, d + 1);
    Matrix b1m = b1_matrix(alg, x, y, d, dom, cod);
    auto kernel = kernel_basis(b1m);
    std::vector<Scalar> coords(dom.dim(), Scalar::zero(alg.field));
    for (const auto& k : kernel) {
        if (!rng.chance(1, 2)) continue;
        Scalar c = rng.scalar(alg.field);
        for (size_t i = 0; i < k.size(); ++i) coords[i] += k[i] * c;
    }
    return TwMorphism{x, y, devectorize(alg, x.module, y.module, dom, coords)};
}

TwMorphism random_coboundary(Rng& rng, const SectionAlgebra& alg, const TwObject& x, const TwObject& y,
                             int d) {
    TwMorphism h = random_hom(rng, alg, x, y, d - 1);
    return b1(alg, h);
}

Conflation random_canonical(Rng& rng, const SectionAlgebra& alg, const GenBounds& b) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        TwObject x = random_tw(rng, alg, b);
        TwObject y = random_tw(rng, alg, b);
        TwMorphism gamma = random_cocycle(rng, alg, y, x, 0);
        try {
            return make_canonical(alg, x, y, gamma.under);
        } catch (const Error&) {
            continue;  // gamma landed outside the cocycle space (should not happen)
        }
    }
    throw Error("random_canonical: generation failed");
}

AdMorphism random_special_auto(Rng& rng, const SectionAlgebra& alg, const SModule& x) {
    std::map<HatIdem, Matrix> fibers;
    for (const auto& [u, d] : x.dims) {
        Matrix m = Matrix::identity(d, alg.field);
        // a few random shears keep it invertible
        for (int k = 0; k < 2 * d; ++k) {
            int i = rng.below(d), j = rng.below(d);
            if (i == j) continue;
            Scalar c = rng.scalar(alg.field);
            for (int col = 0; col < d; ++col) m.at(i, col) += c * m.at(j, col);
        }
        fibers.emplace(u, std::move(m));
    }
    return special_of(alg, x, x, fibers);
}

}  // namespace twc
