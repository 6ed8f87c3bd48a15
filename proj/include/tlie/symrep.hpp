#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tlie/core.hpp"
#include "tlie/report.hpp"

namespace tlie {

// Elements of the q-symmetric algebra are stored as TensorPolys whose words
// are sorted monomials (non-decreasing, no square of a letter with q = -1).
using SymPoly = TensorPoly;

// Product z_{w_1} ... z_{w_k} in the q-symmetric algebra, sorted.
SymPoly sym_normalize(const TLieSpec& spec, const TensorPoly& t);
bool is_sym_monomial(const TLieSpec& spec, const Word& w);

// Monomials N with eta(N) <= max_grade, in lexicographic order.
std::vector<Word> enumerate_sym_monomials(const TLieSpec& spec, int max_grade);

struct FiltrationViolation {
    Letter letter;
    Word monomial;
    SymPoly excess;  // terms of x.z_N - z_x z_N above eta(x) + eta(N) - 1
};

// The action L x S(L) -> S(L) defined by recursion on the first letter of
// the monomial, memoized per (letter, monomial). Not thread safe.
class SymmetricAction {
public:
    explicit SymmetricAction(const TLieSpec& spec);

    const TLieSpec& spec() const { return spec_; }

    const SymPoly& act(Letter x, const Word& monomial);
    SymPoly act(Letter x, const SymPoly& v);
    // w_1 . (w_2 . ( ... (w_k . v)))
    SymPoly act_word(const Word& w, const SymPoly& v);
    SymPoly act_tensor(const TensorPoly& t, const SymPoly& v);

    std::size_t cache_size() const { return cache_.size(); }
    const std::map<std::pair<Letter, Word>, SymPoly>& cache() const { return cache_; }
    const std::vector<FiltrationViolation>& filtration_violations() const { return violations_; }

    // Evaluates the recursion for (x, monomial) without reading the cache at
    // the top level; used to confirm cached values.
    SymPoly recompute(Letter x, const Word& monomial);

private:
    SymPoly compute(Letter x, const Word& monomial);

    const TLieSpec& spec_;
    std::map<std::pair<Letter, Word>, SymPoly> cache_;
    std::vector<FiltrationViolation> violations_;
    std::size_t depth_ = 0;
};

// x_l . x_m . z_N - T(x_l (x) x_m) . z_N - [x_l, x_m] . z_N
SymPoly lemma_c_discrepancy(const TLieSpec& spec, Letter lambda, Letter mu, const Word& monomial);
SymPoly lemma_c_discrepancy(SymmetricAction& action, Letter lambda, Letter mu, const Word& monomial);

// Terms of x . z_N - z_x z_N whose grade exceeds eta(x) + eta(N) - 1.
SymPoly filtration_excess(const TLieSpec& spec, Letter x, const Word& monomial);

// Checks the identity above for all pairs and all monomials N with
// eta(l) + eta(m) + eta(N) <= max_total_grade. Witness inputs are (l, m, N...).
CheckRecord check_lemma_c(const TLieSpec& spec, int max_total_grade);

struct Certified {
    std::size_t monomials = 0;
    int lemma_c_bound = 0;
};

struct Refuted {
    std::string reason;
    CheckRecord evidence;
};

using IndependenceCertificate = std::variant<Certified, Refuted>;

// Runs the representation checks covering PBW monomials up to max_len:
// The lemma-c identities up to max_len * max grade, then x_Sigma . 1 = z_Sigma.
IndependenceCertificate independence_certificate(const TLieSpec& spec, std::size_t max_len);

}  // namespace tlie
