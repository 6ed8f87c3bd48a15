#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tlie {

using Rational = mpq_class;

inline constexpr std::size_t kMaxVariables = 4;
using Exponents = std::array<int, kMaxVariables>;

// Values for a partial substitution; disengaged entries stay symbolic.
using Assignment = std::array<std::optional<Rational>, kMaxVariables>;

// Element of Q[v_0^{+-1}, ..., v_3^{+-1}]. Terms are kept sorted by exponent
// vector with nonzero coefficients, so equality is structural.
class LaurentScalar {
public:
    struct Term {
        Exponents exponents{};
        Rational coefficient;
    };

    LaurentScalar() = default;
    LaurentScalar(int value);  // NOLINT(google-explicit-constructor)
    LaurentScalar(const Rational& value);  // NOLINT(google-explicit-constructor)

    static LaurentScalar monomial(const Rational& coefficient, const Exponents& exponents);
    static LaurentScalar variable(std::size_t index, int power = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_unit() const { return terms_.size() == 1; }
    bool is_constant() const;
    std::optional<Rational> constant_value() const;
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Highest power of the variable appearing anywhere (0 for constants).
    int max_degree(std::size_t index) const;
    int min_degree(std::size_t index) const;

    LaurentScalar& operator+=(const LaurentScalar& other);
    LaurentScalar& operator-=(const LaurentScalar& other);
    LaurentScalar& operator*=(const LaurentScalar& other);

    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
    friend LaurentScalar operator-(LaurentScalar a);
    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b);

    // Inverse of a single-term element; throws NotAUnit otherwise.
    LaurentScalar inverse_unit() const;
    // Integer power; negative powers require a unit.
    LaurentScalar pow(int exponent) const;

    // Substitutes the engaged entries of `values`. Variables are units, so a
    // zero value is rejected with ZeroAssignment.
    LaurentScalar substitute(const Assignment& values) const;
    // Full evaluation; throws UnassignedVariable if a used variable has no value.
    Rational evaluate(const Assignment& values) const;

    // Total order used only for deterministic containers.
    friend bool operator<(const LaurentScalar& a, const LaurentScalar& b);

private:
    explicit LaurentScalar(std::vector<Term> terms) : terms_(std::move(terms)) {}
    LaurentScalar times_term(const Term& t) const;
    static void canonicalize(std::vector<Term>& terms);

    std::vector<Term> terms_;
};

// Exact quotient a / b in the Laurent ring, if b divides a there.
std::optional<LaurentScalar> exact_divide(const LaurentScalar& a, const LaurentScalar& b);

Rational rational_pow(const Rational& base, int exponent);

// Moves variable i to slot target[i]; a negative target drops the variable,
// which must then not occur.
LaurentScalar remap_variables(const LaurentScalar& value, const std::array<int, kMaxVariables>& target);

// Rendering with the supplied variable names, e.g. "q - q^-1", "2*p^-1*q".
std::string format_scalar(const LaurentScalar& value, std::span<const std::string> names);
// Same, wrapped in parentheses when it has more than one term.
std::string format_scalar_factor(const LaurentScalar& value, std::span<const std::string> names);

}  // namespace tlie
