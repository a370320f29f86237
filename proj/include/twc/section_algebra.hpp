#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "twc/scalar.hpp"

namespace twc {

using BasisId = int;

struct BasisElem {
    std::string name;
    int src = 0;   // idempotent index u(a)
    int dst = 0;   // idempotent index v(a)
    int deg = 0;
    bool unit = false;
};

// Sparse linear combination of section basis elements.
class Element {
public:
    Element() = default;
    explicit Element(const Field& f) : field_(f) {}

    const Field& field() const { return field_; }
    const std::map<BasisId, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(BasisId b, const Scalar& c);
    Element& operator+=(const Element& o);
    Element operator+(const Element& o) const;
    Element operator-() const;
    Element scaled(const Scalar& c) const;
    bool operator==(const Element& o) const { return terms_ == o.terms_; }

    static Element single(BasisId b, const Scalar& c, const Field& f);
    std::string str(const std::vector<BasisElem>& basis) const;

private:
    Field field_;
    std::map<BasisId, Scalar> terms_;
};

// Formal element of Z^{otimes n}: chains in tensor order with coefficients.
using SparseTensor = std::map<std::vector<BasisId>, Scalar>;

struct StasheffReport {
    int n = 0;
    // failing chains (tensor order) with their nonzero residue
    std::vector<std::pair<std::vector<BasisId>, Element>> failures;
    bool pass() const { return failures.empty(); }
};

struct UnitReport {
    std::vector<std::string> problems;
    bool pass() const { return problems.empty(); }
};

// The section b-algebra Z = (Z, {b_n}) over an elementary algebra with
// enough idempotents. Chains are stored and passed in tensor order: the
// chain [a_n, ..., a_1] denotes b_n(a_n ⊗ ... ⊗ a_1), so element 0 of the
// vector is the leftmost tensor factor (the last map applied) and the
// last element is the rightmost (applied first). Direction compatibility
// therefore reads src(v[i]) == dst(v[i+1]).
class SectionAlgebra {
public:
    Field field;
    std::vector<std::string> idems;
    std::vector<BasisElem> basis;
    int max_arity = 2;

    // Test hooks: flip the sign of one unit rule for the given idempotent
    // (-1 = off). Used by the sign-mutation corpus.
    int mutate_left_unit = -1;   // b_2(e_i ⊗ a) -> -e_i a
    int mutate_right_unit = -1;  // b_2(a ⊗ e_i) -> (-1)^{|a|} a e_i

    int idem_index(const std::string& name) const;
    int basis_index(const std::string& name) const;
    int unit_of(int idem) const;  // basis id of the strict unit e_idem

    void add_basis(BasisElem e);
    void add_bn(const std::vector<BasisId>& chain, Element value);
    bool has_bn(const std::vector<BasisId>& chain) const;

    // Load-time checks: directedness, degree law, unit degrees/uniqueness,
    // unit-rule consistency of any table entry containing a unit. Throws.
    void validate() const;

    bool chain_compatible(std::span<const BasisId> chain) const;

    // b_n on a single basis chain (tensor order). Unit arguments at arity 2
    // resolve through the unit rules; at any other arity they give zero.
    Element bn(std::span<const BasisId> chain) const;

    // Multilinear extension over (basis element, coefficient) tensor factors.
    Element bn_eval(std::span<const std::pair<BasisId, Scalar>> chain) const;
    Element bn_eval(std::span<const Element> chain) const;

    // id^{⊗r} ⊗ b_s ⊗ id^{⊗t} with the Koszul sign (-1)^{sum of degrees of
    // the r leftmost tensor factors}, |b_s| = 1.
    SparseTensor koszul_insert(int r, int s, int t, std::span<const BasisId> chain) const;

    // Σ_{r+s+t=n} b_{r+1+t}( koszul_insert(r,s,t, chain) )
    Element stasheff_residue(std::span<const BasisId> chain) const;

    StasheffReport check_stasheff(int n) const;
    UnitReport check_units() const;

    // All direction-compatible chains of length n over the whole basis.
    void for_each_chain(int n, const std::function<void(std::span<const BasisId>)>& fn) const;

    // Largest n worth checking: table arities and the unit rules at 2 are
    // the only sources, so S_n vanishes identically past max_arity + 2.
    int check_bound() const { return max_arity + 2; }

private:
    static std::uint64_t pack(std::span<const BasisId> chain);
    std::unordered_map<std::uint64_t, Element> table_;
    std::vector<std::vector<BasisId>> table_keys_;  // insertion-ordered, for reports/printing
public:
    const std::vector<std::vector<BasisId>>& table_keys() const { return table_keys_; }
    const Element* table_entry(const std::vector<BasisId>& chain) const;
};

}  // namespace twc
