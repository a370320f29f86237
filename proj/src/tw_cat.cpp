#include "twc/tw_cat.hpp"

#include <algorithm>

namespace twc {

std::optional<int> nilpotence_index(const SectionAlgebra& alg, const SModule& module,
                                    const AdMorphism& delta) {
    // coordinate slots of the module, in deterministic order
    std::map<std::pair<HatIdem, int>, int> slot;
    std::vector<std::pair<HatIdem, int>> slots;
    for (const auto& [u, d] : module.dims)
        for (int i = 0; i < d; ++i) {
            slot[{u, i}] = static_cast<int>(slots.size());
            slots.push_back({u, i});
        }
    int n = static_cast<int>(slots.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, m] : delta.terms()) {
        HatIdem su = hat_src(alg, a), du = hat_dst(alg, a);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (!m.at(r, c).is_zero()) adj[slot.at({su, c})].push_back(slot.at({du, r}));
    }
    // longest path by DFS; colors detect cycles
    std::vector<int> color(n, 0), depth(n, 0);
    bool cyclic = false;
    std::function<int(int)> dfs = [&](int v) -> int {
        if (color[v] == 1) {
            cyclic = true;
            return 0;
        }
        if (color[v] == 2) return depth[v];
        color[v] = 1;
        int best = 0;
        for (int w : adj[v]) {
            if (cyclic) break;
            best = std::max(best, 1 + dfs(w));
        }
        color[v] = 2;
        depth[v] = best;
        return best;
    };
    int longest = 0;
    for (int v = 0; v < n && !cyclic; ++v) longest = std::max(longest, dfs(v));
    if (cyclic) return std::nullopt;
    return longest + 1;
}

int insertion_bound(const SectionAlgebra& alg, const AdMorphism& delta, int cap) {
    if (delta.is_zero()) return 1;
    struct Prod {
        HatIdem src, dst;
        Matrix m;
    };
    std::vector<Prod> cur;
    for (const auto& [a, m] : delta.terms()) cur.push_back({hat_src(alg, a), hat_dst(alg, a), m});
    int k = 1;
    while (k < cap && !cur.empty()) {
        std::vector<Prod> next;
        for (const auto& [a, m] : delta.terms()) {
            HatIdem asrc = hat_src(alg, a);
            for (const auto& p : cur) {
                if (p.dst != asrc) continue;
                Matrix prod = m * p.m;
                if (!prod.is_zero()) next.push_back({p.src, hat_dst(alg, a), prod});
            }
            if (next.size() > 20000) return cap;  // give up, keep the safe bound
        }
        cur = std::move(next);
        ++k;
    }
    return cur.empty() ? k : cap;
}

AdMorphism mc_residue(const SectionAlgebra& alg, const AdMorphism& delta, int nil_index) {
    AdMorphism acc = zero_morphism(alg, delta.src(), delta.dst());
    std::vector<AdMorphism> chain;
    for (int s = 1; s < nil_index; ++s) {
        chain.assign(s, delta);
        acc = acc + ad_bn(alg, chain);
    }
    return acc;
}

TwObject validate_tw(const SectionAlgebra& alg, const SModule& module, const AdMorphism& delta) {
    if (!(delta.src() == module) || !(delta.dst() == module))
        throw Error("validate_tw: delta is not an endomorphism of the module");
    if (!delta.has_degree(alg, 0)) throw Error("validate_tw: delta is not homogeneous of degree 0");
    auto nil = nilpotence_index(alg, module, delta);
    if (!nil) throw Error("not filtration-nilpotent: coordinate graph of delta has a cycle");
    *nil = insertion_bound(alg, delta, *nil);
    AdMorphism residue = mc_residue(alg, delta, *nil);
    if (!residue.is_zero()) {
        std::string diag = "Maurer-Cartan violated; residue terms:";
        for (const auto& [a, m] : residue.terms())
            diag += " " + hat_tag_str(alg, a) + ":" + m.str();
        throw Error(diag);
    }
    return TwObject{module, delta, *nil};
}

TwObject tw_trusted(const SectionAlgebra& alg, const SModule& module, const AdMorphism& delta,
                    int nil_index) {
    if (!(delta.src() == module) || !(delta.dst() == module))
        throw Error("tw_trusted: delta is not an endomorphism of the module");
    TwObject out{module, delta, insertion_bound(alg, delta, nil_index)};
    if (!mc_residue(alg, delta, out.nil_index).is_zero())
        throw Error("tw_trusted: Maurer-Cartan violated");
    return out;
}

TwMorphism tw_morphism(const TwObject& x, const TwObject& y, AdMorphism f) {
    if (!(f.src() == x.module) || !(f.dst() == y.module))
        throw Error("tw_morphism: underlying morphism does not match the twisted objects");
    return TwMorphism{x, y, std::move(f)};
}

TwMorphism zero_tw(const SectionAlgebra& alg, const TwObject& x, const TwObject& y) {
    return TwMorphism{x, y, zero_morphism(alg, x.module, y.module)};
}

TwMorphism identity_tw(const SectionAlgebra& alg, const TwObject& x) {
    return TwMorphism{x, x, identity_of(alg, x.module)};
}

TwMorphism tw_bn(const SectionAlgebra& alg, std::span<const TwMorphism> chain) {
    size_t n = chain.size();
    if (n == 0) throw Error("tw_bn: empty chain");
    for (size_t i = 0; i + 1 < n; ++i)
        if (!(chain[i].src == chain[i + 1].dst)) throw Error("tw_bn: chain objects do not compose");

    // objects in tensor order: objs[0] leftmost (target end), objs[n] rightmost
    std::vector<const TwObject*> objs(n + 1);
    objs[0] = &chain[0].dst;
    for (size_t j = 0; j < n; ++j) objs[j + 1] = &chain[j].src;

    AdMorphism acc = zero_morphism(alg, objs[n]->module, objs[0]->module);
    std::vector<int> mult(n + 1, 0);
    std::vector<AdMorphism> ad_chain;
    std::function<void(size_t)> enumerate = [&](size_t j) {
        if (j == n + 1) {
            ad_chain.clear();
            for (size_t k = 0; k <= n; ++k) {
                for (int i = 0; i < mult[k]; ++i) ad_chain.push_back(objs[k]->delta);
                if (k < n) ad_chain.push_back(chain[k].under);
            }
            acc = acc + ad_bn(alg, ad_chain);
            return;
        }
        for (int i = 0; i < objs[j]->nil_index; ++i) {
            mult[j] = i;
            enumerate(j + 1);
        }
    };
    enumerate(0);
    return TwMorphism{*objs[n], *objs[0], acc};
}

TwMorphism star(const SectionAlgebra& alg, const TwMorphism& g, const TwMorphism& f) {
    std::array<TwMorphism, 2> c{g, f};
    return tw_bn(alg, c);
}

TwMorphism b1(const SectionAlgebra& alg, const TwMorphism& f) {
    std::array<TwMorphism, 1> c{f};
    return tw_bn(alg, c);
}

std::pair<AdMorphism, AdMorphism> split_strict(const SectionAlgebra& alg, const AdMorphism& f) {
    AdMorphism strict(f.src(), f.dst(), alg.field), rest(f.src(), f.dst(), alg.field);
    for (const auto& [a, m] : f.terms()) (hat_strict(alg, a) ? strict : rest).add_term(alg, a, m);
    return {strict, rest};
}

TwMorphism b1_split(const SectionAlgebra& alg, const TwMorphism& f) {
    auto [f0, f1] = split_strict(alg, f.under);
    auto [dx0, dx1] = split_strict(alg, f.src.delta);
    auto [dy0, dy1] = split_strict(alg, f.dst.delta);
    AdMorphism acc = circ(alg, f.under, f.src.delta) + circ(alg, f.dst.delta, f.under);
    std::vector<AdMorphism> chain{f1};
    acc = acc + ad_bn(alg, chain);  // b_1^ad of the non-strict part
    for (int i1 = 0; i1 < f.dst.nil_index; ++i1)
        for (int i0 = 0; i0 < f.src.nil_index; ++i0) {
            if (i0 + i1 < 2) continue;
            chain.assign(i1, dy1);
            chain.push_back(f1);
            for (int k = 0; k < i0; ++k) chain.push_back(dx1);
            acc = acc + ad_bn(alg, chain);
        }
    return TwMorphism{f.src, f.dst, acc};
}

TwMorphism star_split(const SectionAlgebra& alg, const TwMorphism& g, const TwMorphism& f) {
    if (!(g.src == f.dst)) throw Error("star_split: morphisms do not compose");
    auto [f0, f1] = split_strict(alg, f.under);
    auto [g0, g1] = split_strict(alg, g.under);
    auto [dx0, dx1] = split_strict(alg, f.src.delta);
    auto [dy0, dy1] = split_strict(alg, f.dst.delta);
    auto [dw0, dw1] = split_strict(alg, g.dst.delta);
    AdMorphism acc = circ(alg, g.under, f.under);
    std::vector<AdMorphism> chain;
    for (int i2 = 0; i2 < g.dst.nil_index; ++i2)
        for (int i1 = 0; i1 < f.dst.nil_index; ++i1)
            for (int i0 = 0; i0 < f.src.nil_index; ++i0) {
                if (i0 + i1 + i2 < 1) continue;
                chain.assign(i2, dw1);
                chain.push_back(g1);
                for (int k = 0; k < i1; ++k) chain.push_back(dy1);
                chain.push_back(f1);
                for (int k = 0; k < i0; ++k) chain.push_back(dx1);
                acc = acc + ad_bn(alg, chain);
            }
    return TwMorphism{f.src, g.dst, acc};
}

bool is_cocycle(const SectionAlgebra& alg, const TwMorphism& f) {
    return b1(alg, f).under.is_zero();
}

HomBasis hom_basis(const SectionAlgebra& alg, const SModule& src, const SModule& dst, int degree) {
    HomBasis out;
    for (const auto& [u, du] : src.dims)
        for (const auto& [v, dv] : dst.dims) {
            for (BasisId b = 0; b < static_cast<int>(alg.basis.size()); ++b) {
                const BasisElem& be = alg.basis[b];
                if (be.src != u.base || be.dst != v.base) continue;
                // hat degree |b| + t - s with t = u.shift, s = v.shift
                if (be.deg + u.shift - v.shift != degree) continue;
                HatTag tag{b, v.shift, u.shift};
                for (int r = 0; r < dv; ++r)
                    for (int c = 0; c < du; ++c) out.ents.push_back({tag, r, c});
            }
        }
    return out;
}

std::vector<Scalar> vectorize(const SectionAlgebra& alg, const AdMorphism& f, const HomBasis& basis) {
    std::vector<Scalar> v(basis.ents.size(), Scalar::zero(alg.field));
    std::map<HatTag, const Matrix*> lookup;
    for (const auto& [a, m] : f.terms()) lookup[a] = &m;
    for (size_t i = 0; i < basis.ents.size(); ++i) {
        auto it = lookup.find(basis.ents[i].tag);
        if (it != lookup.end()) v[i] = it->second->at(basis.ents[i].row, basis.ents[i].col);
    }
    return v;
}

AdMorphism devectorize(const SectionAlgebra& alg, const SModule& src, const SModule& dst,
                       const HomBasis& basis, std::span<const Scalar> coords) {
    AdMorphism f(src, dst, alg.field);
    std::map<HatTag, Matrix> mats;
    for (size_t i = 0; i < basis.ents.size(); ++i) {
        if (coords[i].is_zero()) continue;
        const auto& e = basis.ents[i];
        auto it = mats.find(e.tag);
        if (it == mats.end()) {
            Matrix m(dst.dim_at(hat_dst(alg, e.tag)), src.dim_at(hat_src(alg, e.tag)), alg.field);
            it = mats.emplace(e.tag, std::move(m)).first;
        }
        it->second.at(e.row, e.col) += coords[i];
    }
    for (const auto& [a, m] : mats) f.add_term(alg, a, m);
    return f;
}

namespace {

std::string tw_key(const SectionAlgebra& alg, const TwObject& x) {
    std::string k;
    for (const auto& [u, d] : x.module.dims)
        k += std::to_string(u.shift) + "." + std::to_string(u.base) + ":" + std::to_string(d) + ";";
    k += "|";
    for (const auto& [a, m] : x.delta.terms()) {
        k += std::to_string(a.base) + "." + std::to_string(a.s) + "." + std::to_string(a.t) + "=";
        k += m.str() + ";";
    }
    (void)alg;
    return k;
}

// distinguishes algebras (and their mutants) sharing module shapes
std::string alg_key(const SectionAlgebra& alg) {
    std::string k = std::to_string(alg.idems.size()) + "/" + std::to_string(alg.mutate_left_unit) +
                    "/" + std::to_string(alg.mutate_right_unit) + "/";
    for (const auto& b : alg.basis)
        k += b.name + "." + std::to_string(b.src) + "." + std::to_string(b.dst) + "." +
             std::to_string(b.deg) + (b.unit ? "u" : "") + ";";
    for (const auto& chain : alg.table_keys()) {
        for (BasisId b : chain) k += std::to_string(b) + ",";
        k += "->" + alg.table_entry(chain)->str(alg.basis) + ";";
    }
    return k;
}

}  // namespace

Matrix b1_matrix(const SectionAlgebra& alg, const TwObject& x, const TwObject& y, int degree,
                 const HomBasis& dom, const HomBasis& cod) {
    // memoized per (source object, target object, degree); the differential
    // matrix is rebuilt many times for the same hom spaces during axiom sweeps
    thread_local std::map<std::string, Matrix> cache;
    std::string key = alg_key(alg) + "#" + alg.field.str() + "#" + std::to_string(degree) + "#" +
                      tw_key(alg, x) + "#" + tw_key(alg, y);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;
    Matrix m(cod.dim(), dom.dim(), alg.field);
    for (int j = 0; j < dom.dim(); ++j) {
        std::vector<Scalar> e(dom.dim(), Scalar::zero(alg.field));
        e[j] = Scalar::one(alg.field);
        TwMorphism basis_mor{x, y, devectorize(alg, x.module, y.module, dom, e)};
        auto img = vectorize(alg, b1(alg, basis_mor).under, cod);
        for (int i = 0; i < cod.dim(); ++i) m.at(i, j) = img[i];
    }
    if (cache.size() > 4096) cache.clear();
    cache.emplace(std::move(key), m);
    return m;
}

std::optional<TwMorphism> coboundary_witness(const SectionAlgebra& alg, const TwMorphism& f) {
    if (f.under.is_zero())
        return TwMorphism{f.src, f.dst, zero_morphism(alg, f.src.module, f.dst.module)};
    int d = f.under.degree(alg);
    HomBasis dom = hom_basis(alg, f.src.module, f.dst.module, d - 1);
    HomBasis cod = hom_basis(alg, f.src.module, f.dst.module, d);
    Matrix A = b1_matrix(alg, f.src, f.dst, d - 1, dom, cod);
    auto sol = solve_linear(A, vectorize(alg, f.under, cod));
    if (!sol) return std::nullopt;
    return TwMorphism{f.src, f.dst, devectorize(alg, f.src.module, f.dst.module, dom, *sol)};
}

bool is_coboundary(const SectionAlgebra& alg, const TwMorphism& f) {
    return coboundary_witness(alg, f).has_value();
}

bool h_equal(const SectionAlgebra& alg, const TwMorphism& f, const TwMorphism& g) {
    if (!(f.src == g.src) || !(f.dst == g.dst)) return false;
    return is_coboundary(alg, TwMorphism{f.src, f.dst, f.under - g.under});
}

TwObject transport_differential(const SectionAlgebra& alg, const AdMorphism& h, const TwObject& x) {
    if (!(h.src() == x.module)) throw Error("transport: h does not start at the object");
    auto hinv = special_inverse(alg, h);
    if (!hinv) throw Error("transport: h is not a locally invertible special morphism");
    auto hf = special_fibers(alg, h);
    auto gf = special_fibers(alg, *hinv);
    AdMorphism delta_y(h.dst(), h.dst(), alg.field);
    for (const auto& [a, m] : x.delta.terms()) {
        HatIdem v = hat_dst(alg, a), u = hat_src(alg, a);
        auto hit = hf.find(v);
        auto git = gf.find(u);
        if (hit == hf.end() || git == gf.end()) continue;  // zero fiber on either side
        delta_y.add_term(alg, a, hit->second * m * git->second);
    }
    // The transported filtration h(X_i) need not be a coordinate filtration,
    // so the acyclicity scan does not apply here. Runs of conjugated
    // coefficients telescope (h^{-1}h = id), so the insertion bound of x
    // stays valid for the image; the Maurer-Cartan sum is still asserted.
    TwObject y{h.dst(), delta_y, insertion_bound(alg, delta_y, x.nil_index)};
    if (!mc_residue(alg, delta_y, y.nil_index).is_zero())
        throw Error("transport: Maurer-Cartan violated (internal)");
    return y;
}

}  // namespace twc
