#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tlie/core.hpp"
#include "tlie/report.hpp"

namespace tlie {

// Termination measure of the rewriting: total grade first, then the number
// of inverted letter pairs.
struct DegreeMeasure {
    int delta = 0;
    int disorder = 0;
    auto operator<=>(const DegreeMeasure&) const = default;
};

DegreeMeasure measure(const TLieSpec& spec, const Word& w);

// Non-decreasing word in which a letter repeats only when q_{x,x} = 1.
bool is_pbw_monomial(const TLieSpec& spec, const Word& w);

// Leftmost position i with w[i] > w[i+1], or w[i] = w[i+1] and q = -1.
std::optional<std::size_t> leftmost_reducible(const TLieSpec& spec, const Word& w);
bool reducible_at(const TLieSpec& spec, const Word& w, std::size_t position);

// Generator of J placed inside w: w - u.(T(x.y) + [x,y]).v for x.y at `position`.
TensorPoly relation_at(const TLieSpec& spec, const Word& w, std::size_t position);
// One rewriting step on w at a reducible position, i.e. the value of w
// modulo the generator relation_at(spec, w, position).
TensorPoly rewrite_at(const TLieSpec& spec, const Word& w, std::size_t position);

struct RewriteTrace;

// Linear combination of PBW monomials.
class PBWPoly {
public:
    PBWPoly() = default;
    // Throws PreconditionViolated if some word is not a PBW monomial.
    static PBWPoly checked(const TLieSpec& spec, TensorPoly t);

    const TensorPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    friend bool operator==(const PBWPoly& a, const PBWPoly& b) { return a.poly_ == b.poly_; }

private:
    friend PBWPoly normalize(const TLieSpec&, const TensorPoly&, RewriteTrace*);
    explicit PBWPoly(TensorPoly t) : poly_(std::move(t)) {}
    TensorPoly poly_;
};

enum class RewriteRule { Swap, Diagonal };

struct RewriteStep {
    RewriteRule rule = RewriteRule::Swap;
    std::size_t position = 0;
    Word before;
    LaurentScalar coefficient;
    TensorPoly after;  // rewrite_at(before, position), for coefficient 1
};

struct RewriteTrace {
    std::vector<RewriteStep> steps;
};

// Normal form modulo J. Words are processed in decreasing (delta, disorder)
// order and rewritten at their leftmost reducible position. Requires a
// stable spec (NotStable otherwise).
PBWPoly normalize(const TLieSpec& spec, const TensorPoly& t, RewriteTrace* trace = nullptr);
PBWPoly pbw_multiply(const TLieSpec& spec, const PBWPoly& a, const PBWPoly& b);

// All PBW monomials of length <= max_len, in lexicographic order.
std::vector<Word> enumerate_pbw(const TLieSpec& spec, std::size_t max_len);

// Compares the normal forms of the two one-step reductions of every word
// x.y.z with x >= y >= z (some position reducible) and total grade <= max_delta.
CheckRecord diamond_check(const TLieSpec& spec, int max_delta);
TensorPoly diamond_discrepancy(const TLieSpec& spec, const Word& w);

// One summand of a membership certificate: coefficient * relation_at(word, position).
struct GeneratorUse {
    Word word;
    std::size_t position = 0;
    LaurentScalar coefficient;
};

struct MembershipResult {
    bool member = false;
    // denominator * t = sum of the certificate terms; denominator is 1 when
    // the combination could be taken with Laurent coefficients.
    std::vector<GeneratorUse> certificate;
    LaurentScalar denominator = 1;
    bool ring_verified = false;
    // Reduced form of t when it is not a member.
    TensorPoly remainder;
    std::size_t generators = 0;
};

// Span of the generators of J placed in words of length <= max_len, built
// incrementally by total grade. Exact fraction-free elimination over the
// Laurent ring with pivots on the largest word in (delta, disorder, lex).
class TruncatedIdeal {
public:
    TruncatedIdeal(const TLieSpec& spec, std::size_t max_len);
    ~TruncatedIdeal();
    TruncatedIdeal(const TruncatedIdeal&) = delete;
    TruncatedIdeal& operator=(const TruncatedIdeal&) = delete;

    // Adds every generator whose leading word has total grade <= max_delta.
    void extend_to(int max_delta);
    int max_delta() const { return max_delta_; }
    std::size_t max_len() const { return max_len_; }
    std::size_t generator_count() const;
    std::size_t rank() const;

    MembershipResult decide(const TensorPoly& t) const;

private:
    struct Impl;
    const TLieSpec& spec_;
    std::size_t max_len_;
    int max_delta_ = 0;
    std::unique_ptr<Impl> impl_;
};

// Decides t in J restricted to words of length <= max_len and total grade
// <= max_delta. BoundsTooSmall if t itself exceeds the bounds.
MembershipResult ideal_member_truncated(const TLieSpec& spec, const TensorPoly& t, std::size_t max_len, int max_delta);

// Recomputes sum coefficient * relation_at(...) for a certificate.
TensorPoly certificate_sum(const TLieSpec& spec, const std::vector<GeneratorUse>& certificate);

}  // namespace tlie
