#pragma once

#include <random>

#include "twc/tri.hpp"

namespace twc {

// Deterministic RNG wrapper. Only raw mt19937_64 draws are used (never
// std distributions) so identical seeds give identical streams everywhere.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next() { return eng(); }
    int below(int n) { return n <= 0 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool chance(int num, int den) { return below(den) < num; }
    // small exact scalar in [-3, 3]
    Scalar scalar(const Field& f) { return Scalar::of_int(below(7) - 3, f); }
    Scalar nonzero_scalar(const Field& f) {
        int v = below(6) - 3;
        if (v >= 0) ++v;
        return Scalar::of_int(v, f);
    }
};

struct GenBounds {
    int window = 1;    // support shifts in [-window, window]
    int max_dim = 3;   // fiber dimension bound
    int max_slots = 3; // support size bound
};

SModule random_module(Rng& rng, const SectionAlgebra& alg, const GenBounds& b);

// Twisted object whose differential is strictly triangular with respect to a
// global slot order (acyclic by construction) and avoids unit tags; paths are
// band-limited to length two so every higher Maurer-Cartan term dies against
// the finite table. Falls back to delta = 0 if the module is too small.
TwObject random_tw(Rng& rng, const SectionAlgebra& alg, const GenBounds& b);

// arbitrary element of the degree-d hom space
TwMorphism random_hom(Rng& rng, const SectionAlgebra& alg, const TwObject& x, const TwObject& y, int d);
// random element of ker b1 in degree d (solved exactly)
TwMorphism random_cocycle(Rng& rng, const SectionAlgebra& alg, const TwObject& x, const TwObject& y,
                          int d);
// b1 of a random degree d-1 hom element
TwMorphism random_coboundary(Rng& rng, const SectionAlgebra& alg, const TwObject& x, const TwObject& y,
                             int d);
// random canonical conflation over random objects
Conflation random_canonical(Rng& rng, const SectionAlgebra& alg, const GenBounds& b);
// random special (locally invertible) automorphism of x's module
AdMorphism random_special_auto(Rng& rng, const SectionAlgebra& alg, const SModule& x);

}  // namespace twc
