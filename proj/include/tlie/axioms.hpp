#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlie/core.hpp"
#include "tlie/report.hpp"

namespace tlie {

CheckRecord check_involution(const TLieSpec& spec);
CheckRecord check_multiplicativity(const TLieSpec& spec);
CheckRecord check_stability(const TLieSpec& spec);
CheckRecord check_antisymmetry(const TLieSpec& spec);
CheckRecord check_jacobi(const TLieSpec& spec);

enum class BraidMap { S, T };
// S: all triples. T: strictly decreasing triples x > y > z.
CheckRecord check_braid(const TLieSpec& spec, BraidMap which);

// Two balanced-bracket identities over all triples; PreconditionViolated
// when the pseudobracket is nonzero.
CheckRecord check_balanced(const TLieSpec& spec);

enum class AdequacyMethod { Rewrite, Linear, Auto };

// For every decreasing triple with total grade s <= r_max, tests whether
// LHS - RHS of the adequacy congruence lies in the span J_{s-1} of the
// defining relations placed in words of length <= 3 and grade <= s-1. The
// verdict additionally requires the diamond check up to r_max; a congruence
// that holds while the diamond check fails is reported as a failure.
// Rewrite alone throws Inconclusive when a normal form does not vanish.
CheckRecord check_adequacy(const TLieSpec& spec, std::optional<int> r_max,
                           AdequacyMethod method = AdequacyMethod::Auto);

// Largest total grade of a decreasing triple (0 if none).
int adequacy_grade_bound(const TLieSpec& spec);
TensorPoly adequacy_difference(const TLieSpec& spec, Letter lambda, Letter mu, Letter gamma);

struct VerifyOptions {
    std::optional<int> r_max;
    AdequacyMethod method = AdequacyMethod::Auto;
    std::optional<int> diamond_delta;
    std::optional<int> lemma_c_bound;
};

constexpr int kDefaultLemmaCBound = 12;

// What "all" expands to: the T-Lie axioms, adequacy and the S braid equation.
std::vector<std::string> axiom_check_names();
// Also accepts "braid-T", "balanced", "diamond" and "lemma-c".
std::vector<std::string> known_check_names();

VerificationReport verify(const TLieSpec& spec, const std::vector<std::string>& checks, const VerifyOptions& options = {});

// Recomputes the discrepancy of a witness from its inputs.
TensorPoly reevaluate_witness(const TLieSpec& spec, const std::string& check, const Witness& witness);

}  // namespace tlie
