#include "tlie/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "tlie/error.hpp"

namespace tlie {

namespace {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents out{};
    for (std::size_t i = 0; i < kMaxVariables; ++i) out[i] = a[i] + b[i];
    return out;
}

bool all_zero(const Exponents& e) {
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

}  // namespace

Rational rational_pow(const Rational& base, int exponent) {
    if (exponent == 0) return Rational(1);
    Rational b = base;
    if (exponent < 0) {
        if (b == 0) throw Error(ErrorCode::ZeroAssignment, "negative power of zero");
        b = 1 / b;
        exponent = -exponent;
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational out(num, den);
    out.canonicalize();
    return out;
}

LaurentScalar::LaurentScalar(int value) {
    if (value != 0) terms_.push_back({Exponents{}, Rational(value)});
}

// Rationals built from a numerator and a denominator are not reduced by GMP;
// everything entering a LaurentScalar is, so equality stays structural.
LaurentScalar::LaurentScalar(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    if (v != 0) terms_.push_back({Exponents{}, std::move(v)});
}

LaurentScalar LaurentScalar::monomial(const Rational& coefficient, const Exponents& exponents) {
    Rational c = coefficient;
    c.canonicalize();
    if (c == 0) return {};
    return LaurentScalar(std::vector<Term>{{exponents, std::move(c)}});
}

LaurentScalar LaurentScalar::variable(std::size_t index, int power) {
    Exponents e{};
    e.at(index) = power;
    return monomial(Rational(1), e);
}

bool LaurentScalar::is_one() const {
    return terms_.size() == 1 && all_zero(terms_[0].exponents) && terms_[0].coefficient == 1;
}

bool LaurentScalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && all_zero(terms_[0].exponents));
}

std::optional<Rational> LaurentScalar::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (is_constant()) return terms_[0].coefficient;
    return std::nullopt;
}

int LaurentScalar::max_degree(std::size_t index) const {
    int best = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.exponents[index] > best) best = t.exponents[index];
        first = false;
    }
    return best;
}

int LaurentScalar::min_degree(std::size_t index) const {
    int best = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.exponents[index] < best) best = t.exponents[index];
        first = false;
    }
    return best;
}

void LaurentScalar::canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        t.coefficient.canonicalize();
        if (!merged.empty() && merged.back().exponents == t.exponents) {
            merged.back().coefficient += t.coefficient;
        } else {
            merged.push_back(std::move(t));
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.coefficient == 0; }),
                 merged.end());
    terms = std::move(merged);
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& other) {
    if (other.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->exponents < b->exponents)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->exponents < a->exponents) {
            out.push_back(*b++);
        } else {
            Rational c = a->coefficient + b->coefficient;
            if (c != 0) out.push_back({a->exponents, c});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& other) {
    return *this += -other;
}

LaurentScalar LaurentScalar::times_term(const Term& t) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& s : terms_) {
        out.push_back({add_exponents(s.exponents, t.exponents), s.coefficient * t.coefficient});
    }
    return LaurentScalar(std::move(out));
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0]);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0]);
    std::vector<LaurentScalar::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            out.push_back({add_exponents(s.exponents, t.exponents), s.coefficient * t.coefficient});
        }
    }
    LaurentScalar::canonicalize(out);
    return LaurentScalar(std::move(out));
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& other) {
    *this = *this * other;
    return *this;
}

LaurentScalar operator-(LaurentScalar a) {
    for (auto& t : a.terms_) t.coefficient = -t.coefficient;
    return a;
}

bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exponents != b.terms_[i].exponents) return false;
        if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    }
    return true;
}

bool operator<(const LaurentScalar& a, const LaurentScalar& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = a.terms_[i];
        const auto& t = b.terms_[i];
        if (s.exponents != t.exponents) return s.exponents < t.exponents;
        if (s.coefficient != t.coefficient) return s.coefficient < t.coefficient;
    }
    return a.terms_.size() < b.terms_.size();
}

LaurentScalar LaurentScalar::inverse_unit() const {
    if (!is_unit()) throw Error(ErrorCode::NotAUnit, "scalar with " + std::to_string(terms_.size()) + " terms is not a unit");
    Exponents e{};
    for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = -terms_[0].exponents[i];
    return monomial(1 / terms_[0].coefficient, e);
}

LaurentScalar LaurentScalar::pow(int exponent) const {
    LaurentScalar base = *this;
    if (exponent < 0) {
        base = inverse_unit();
        exponent = -exponent;
    }
    LaurentScalar out(1);
    while (exponent > 0) {
        if (exponent & 1) out *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return out;
}

LaurentScalar LaurentScalar::substitute(const Assignment& values) const {
    for (const auto& v : values) {
        if (v && *v == 0) throw Error(ErrorCode::ZeroAssignment, "a Laurent variable cannot be set to zero");
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term r{t.exponents, t.coefficient};
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            if (values[i] && r.exponents[i] != 0) {
                r.coefficient *= rational_pow(*values[i], r.exponents[i]);
                r.exponents[i] = 0;
            }
        }
        out.push_back(std::move(r));
    }
    canonicalize(out);
    return LaurentScalar(std::move(out));
}

Rational LaurentScalar::evaluate(const Assignment& values) const {
    LaurentScalar s = substitute(values);
    auto c = s.constant_value();
    if (!c) throw Error(ErrorCode::UnassignedVariable, "evaluation needs a value for every variable in use");
    return *c;
}

std::optional<LaurentScalar> exact_divide(const LaurentScalar& a, const LaurentScalar& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return LaurentScalar();
    if (b.is_unit()) return a * b.inverse_unit();
    // Over a domain the extreme degrees in each variable add under
    // multiplication, so every quotient term lies in a known finite box.
    Exponents lo{}, hi{};
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        lo[i] = a.min_degree(i) - b.min_degree(i);
        hi[i] = a.max_degree(i) - b.max_degree(i);
        if (lo[i] > hi[i]) return std::nullopt;
    }
    const auto& lead_b = b.terms().back();
    LaurentScalar remainder = a;
    LaurentScalar quotient;
    while (!remainder.is_zero()) {
        const auto& lead_r = remainder.terms().back();
        Exponents e{};
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            e[i] = lead_r.exponents[i] - lead_b.exponents[i];
            if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
        }
        LaurentScalar t = LaurentScalar::monomial(lead_r.coefficient / lead_b.coefficient, e);
        quotient += t;
        remainder -= t * b;
    }
    return quotient;
}

LaurentScalar remap_variables(const LaurentScalar& value, const std::array<int, kMaxVariables>& target) {
    LaurentScalar out;
    for (const auto& t : value.terms()) {
        Exponents e{};
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            if (t.exponents[i] == 0) continue;
            if (target[i] < 0) throw Error(ErrorCode::UnassignedVariable, "dropping a variable that still occurs");
            e.at(static_cast<std::size_t>(target[i])) += t.exponents[i];
        }
        out += LaurentScalar::monomial(t.coefficient, e);
    }
    return out;
}

namespace {

std::string format_monomial(const Exponents& e, std::span<const std::string> names) {
    std::string out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += i < names.size() ? names[i] : "v" + std::to_string(i);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string format_term(const Rational& c, const Exponents& e, std::span<const std::string> names) {
    std::string mono = format_monomial(e, names);
    if (mono.empty()) return c.get_str();
    if (c == 1) return mono;
    return c.get_str() + "*" + mono;
}

}  // namespace

std::string format_scalar(const LaurentScalar& value, std::span<const std::string> names) {
    if (value.is_zero()) return "0";
    std::string out;
    const auto& terms = value.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Rational c = it->coefficient;
        bool negative = c < 0;
        if (negative) c = -c;
        std::string body = format_term(c, it->exponents, names);
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

std::string format_scalar_factor(const LaurentScalar& value, std::span<const std::string> names) {
    std::string s = format_scalar(value, names);
    if (value.size() > 1) return "(" + s + ")";
    return s;
}

}  // namespace tlie
