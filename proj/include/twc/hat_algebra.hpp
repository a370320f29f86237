#pragma once

#include <compare>

#include "twc/section_algebra.hpp"

namespace twc {

// e_{(shift, base)} = nu^shift(e_base), an idempotent of the extended algebra.
struct HatIdem {
    int shift = 0;
    int base = 0;
    auto operator<=>(const HatIdem&) const = default;
};

// nu^s a nu^{-t}, the window-(s,t) copy of the section basis element `base`.
// Source idempotent (t, u(a)), target idempotent (s, v(a)), degree |a|+t-s.
struct HatTag {
    BasisId base = 0;
    int s = 0;
    int t = 0;
    auto operator<=>(const HatTag&) const = default;
};

inline HatIdem hat_src(const SectionAlgebra& alg, const HatTag& a) { return {a.t, alg.basis.at(a.base).src}; }
inline HatIdem hat_dst(const SectionAlgebra& alg, const HatTag& a) { return {a.s, alg.basis.at(a.base).dst}; }
inline int hat_deg(const SectionAlgebra& alg, const HatTag& a) { return alg.basis.at(a.base).deg + a.t - a.s; }
// Strict elements of the extension are exactly the conjugates nu^s e_u nu^t.
inline bool hat_strict(const SectionAlgebra& alg, const HatTag& a) { return alg.basis.at(a.base).unit; }

std::string hat_tag_str(const SectionAlgebra& alg, const HatTag& a);

// Finite linear combination of hat basis elements.
class HatElem {
public:
    HatElem() = default;
    explicit HatElem(const Field& f) : field_(f) {}

    const Field& field() const { return field_; }
    const std::map<HatTag, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const HatTag& a, const Scalar& c);
    HatElem& operator+=(const HatElem& o);
    HatElem operator+(const HatElem& o) const;
    HatElem operator-(const HatElem& o) const;
    HatElem operator-() const;
    HatElem scaled(const Scalar& c) const;
    bool operator==(const HatElem& o) const { return terms_ == o.terms_; }

    static HatElem single(const HatTag& a, const Scalar& c, const Field& f);

    // (s,t) shared by all terms; throws on mixed windows or zero.
    std::pair<int, int> window(const SectionAlgebra& alg) const;
    bool window_homogeneous() const;
    // all terms share one degree?
    bool degree_homogeneous(const SectionAlgebra& alg) const;
    int degree(const SectionAlgebra& alg) const;

private:
    Field field_;
    std::map<HatTag, Scalar> terms_;
};

// rho_{s,t}: window-(s,t) elements back into the section, nu^s a nu^{-t} -> a.
Element rho(const SectionAlgebra& alg, const HatElem& e);
HatElem rho_inv(const SectionAlgebra& alg, const Element& e, int s, int t);

// hat(b)_n on a single basis chain in tensor order (leftmost factor first):
// (-1)^z rho^{-1}_{w0,wn} b_n(rho ⊗ ... ⊗ rho), z = w0-wn + Σ_l (w_l-w_n)|a_l|.
HatElem hat_bn(const SectionAlgebra& alg, std::span<const HatTag> chain);
// multilinear extension
HatElem hat_bn_eval(const SectionAlgebra& alg, std::span<const HatElem> chain);
// x ∘ y := hat(b)_2(x ⊗ y)
HatElem hat_circ(const SectionAlgebra& alg, const HatElem& x, const HatElem& y);

// Σ_{r+s+t=n} hat(b)_{r+1+t}(id^r ⊗ hat(b)_s ⊗ id^t) on one basis chain,
// Koszul signs included; zero for every chain iff the extension satisfies
// the Stasheff relations.
HatElem hat_stasheff_residue(const SectionAlgebra& alg, std::span<const HatTag> chain);

// a[k] = nu^k a nu^{-k}: (s,t) -> (s+k,t+k), degree preserved.
HatElem shift_elem(const HatElem& e, int k);
HatTag shift_tag(const HatTag& a, int k);
// left multiplication by nu^k: (s,t) -> (s+k,t); lowers degree by k.
HatElem nu_left(const HatElem& e, int k);
// right multiplication by nu^k: (s,t) -> (s,t-k); lowers degree by k.
HatElem nu_right(const HatElem& e, int k);

// the strict unit e_u of the extension, u = (shift, base idem)
HatElem hat_unit(const SectionAlgebra& alg, const HatIdem& u);
// sigma(e_u) = (-1)^s nu e_u, degree -2, window (s+1, s)
HatElem sigma_unit(const SectionAlgebra& alg, const HatIdem& u);
// tau(e_u) = (-1)^s e_u nu^{-1}, degree 0, window (s, s+1)
HatElem tau_unit(const SectionAlgebra& alg, const HatIdem& u);

}  // namespace twc
