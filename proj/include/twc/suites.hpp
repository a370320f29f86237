#pragma once

#include "twc/generator.hpp"
#include "twc/io.hpp"
#include "twc/report.hpp"

namespace twc {

struct SuiteParams {
    int window = 3;        // window bound for exhaustive hat sweeps
    int fuzz_cases = 100;  // per-identity fuzz count
    int axiom_instances = 25;
    std::uint64_t seed = 42;
    GenBounds bounds{1, 3, 3};
};

// Stasheff relations and unit axioms on the section, plus the unit-rule
// sign-mutation corpus (every mutant must be rejected).
void suite_stasheff(Report& rep, const std::string& tag, const SectionAlgebra& alg);
// hat-Stasheff over window profiles and the eight identity groups of the
// extension layer.
void suite_hat(Report& rep, const std::string& tag, const SectionAlgebra& alg, const SuiteParams& p);
// module-category identities: units, specials, components, shifts,
// sigma/tau calculus, pull-outs, sandwich signs.
void suite_adcat(Report& rep, const std::string& tag, const SectionAlgebra& alg, const SuiteParams& p);
// twisted layer: b1^2 = 0, star closure, coboundary ideal, associativity in
// cohomology, split evaluation against insertion sums, transport.
void suite_tw(Report& rep, const std::string& tag, const SectionAlgebra& alg, const SuiteParams& p);
// J objects: contracting homotopy, functoriality, relative projectivity.
void suite_J(Report& rep, const std::string& tag, const SectionAlgebra& alg, const SuiteParams& p);
// psi correspondence round trips and both directions of the equivalence.
void suite_psi(Report& rep, const std::string& tag, const SectionAlgebra& alg, const SuiteParams& p);
// conflation calculus: pushout/pullback, canonicalization, exact pairs,
// biproducts, triangular inverses, corner-sign regression.
void suite_confl(Report& rep, const std::string& tag, const SectionAlgebra& alg, const SuiteParams& p);
// shift functor: compatibility with star, identities, coboundaries, and the
// canonical-triangle construction.
void suite_shift(Report& rep, const std::string& tag, const SectionAlgebra& alg, const SuiteParams& p);
// TR1-TR4 on generated instances, plus the rotation sign mutation.
void suite_axioms(Report& rep, const std::string& tag, const SectionAlgebra& alg, const SuiteParams& p);

// everything above on one algebra
void run_suites(Report& rep, const std::string& tag, const SectionAlgebra& alg, const SuiteParams& p);

// the three shipped algebras, parsed with an optional field override
std::vector<std::pair<std::string, SectionAlgebra>> shipped_algebras(const std::string& field_override = "");

}  // namespace twc
