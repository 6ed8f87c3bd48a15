#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlie/core.hpp"
#include "tlie/scalar.hpp"

namespace tlie_test {

using namespace tlie;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline LaurentScalar var(std::size_t index, int power = 1) { return LaurentScalar::variable(index, power); }

// Up to `max_terms` monomials over the first `vars` variables, exponents in
// [-span, span], small rational coefficients.
inline LaurentScalar random_scalar(Rng& rng, std::size_t vars, int max_terms = 3, int span = 2) {
    LaurentScalar out;
    const int terms = uniform(rng, 0, max_terms);
    for (int t = 0; t < terms; ++t) {
        Exponents e{};
        for (std::size_t v = 0; v < vars; ++v) e[v] = uniform(rng, -span, span);
        int num = uniform(rng, -4, 4);
        if (num == 0) num = 1;
        out += LaurentScalar::monomial(Rational(num, uniform(rng, 1, 3)), e);
    }
    return out;
}

inline LaurentScalar random_unit(Rng& rng, std::size_t vars, int span = 3) {
    Exponents e{};
    for (std::size_t v = 0; v < vars; ++v) e[v] = uniform(rng, -span, span);
    int num = uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1);
    return LaurentScalar::monomial(Rational(num, uniform(rng, 1, 4)), e);
}

inline Word random_word(Rng& rng, const TLieSpec& spec, std::size_t min_len, std::size_t max_len) {
    Word w(static_cast<std::size_t>(uniform(rng, static_cast<int>(min_len), static_cast<int>(max_len))));
    for (auto& l : w) l = static_cast<Letter>(uniform(rng, 0, static_cast<int>(spec.dimension()) - 1));
    return w;
}

inline TensorPoly random_poly(Rng& rng, const TLieSpec& spec, int max_terms, std::size_t min_len, std::size_t max_len) {
    TensorPoly out;
    const int terms = uniform(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
        out.add(random_word(rng, spec, min_len, max_len), random_scalar(rng, spec.variables().size(), 2, 2));
    }
    return out;
}

// Laurent polynomials in two variables as plain exponent maps, multiplied
// term by term.
using NaivePoly = std::map<std::pair<int, int>, Rational>;

inline NaivePoly naive(const LaurentScalar& a) {
    NaivePoly out;
    for (const auto& t : a.terms()) out[{t.exponents[0], t.exponents[1]}] += t.coefficient;
    return out;
}

inline NaivePoly naive_product(const NaivePoly& a, const NaivePoly& b) {
    NaivePoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Classical brackets of the matrix units E_ij (i < j, or i > j when
// `lower`) in gl_{size}, computed with explicit integer matrices.
class MatrixUnits {
public:
    MatrixUnits(int size, bool lower) : size_(size), lower_(lower) {}

    using Matrix = std::vector<std::vector<long>>;
    using Combination = std::map<std::pair<int, int>, long>;

    Matrix unit(int i, int j) const {
        Matrix m(size_, std::vector<long>(size_, 0));
        m[i - 1][j - 1] = 1;
        return m;
    }

    Matrix multiply(const Matrix& a, const Matrix& b) const {
        Matrix m(size_, std::vector<long>(size_, 0));
        for (int r = 0; r < size_; ++r)
            for (int k = 0; k < size_; ++k)
                for (int c = 0; c < size_; ++c) m[r][c] += a[r][k] * b[k][c];
        return m;
    }

    Matrix subtract(const Matrix& a, const Matrix& b) const {
        Matrix m = a;
        for (int r = 0; r < size_; ++r)
            for (int c = 0; c < size_; ++c) m[r][c] -= b[r][c];
        return m;
    }

    Combination bracket(std::pair<int, int> x, std::pair<int, int> y) const {
        Matrix a = unit(x.first, x.second), b = unit(y.first, y.second);
        Matrix ab = multiply(a, b), ba = multiply(b, a);
        Combination out;
        for (int r = 0; r < size_; ++r) {
            for (int c = 0; c < size_; ++c) {
                long v = ab[r][c] - ba[r][c];
                if (v == 0) continue;
                if (lower_ ? r <= c : r >= c) throw std::logic_error("bracket left the nilpotent part");
                out[{r + 1, c + 1}] = v;
            }
        }
        return out;
    }

    // c with [h, E_uv] = c E_uv for h = [E_ab, E_ba].
    long cartan_exponent(std::pair<int, int> x, std::pair<int, int> y) const {
        Matrix up = unit(x.first, x.second), down = unit(x.second, x.first);
        Matrix h = subtract(multiply(up, down), multiply(down, up));
        Matrix e = unit(y.first, y.second);
        Matrix ad = subtract(multiply(h, e), multiply(e, h));
        return ad[y.first - 1][y.second - 1];
    }

private:
    int size_;
    bool lower_;
};

// Matrix index pair of a catalog id e{i}{j} / e{i}_{j}.
inline std::pair<int, int> matrix_indices(const std::string& id) {
    const auto us = id.find('_');
    if (us != std::string::npos) return {std::stoi(id.substr(1, us - 1)), std::stoi(id.substr(us + 1))};
    return {id[1] - '0', id[2] - '0'};
}

inline std::string matrix_id(int i, int j) {
    if (i >= 10 || j >= 10) return "e" + std::to_string(i) + "_" + std::to_string(j);
    return "e" + std::to_string(i) + std::to_string(j);
}

inline TensorPoly to_poly(const TLieSpec& spec, const MatrixUnits::Combination& c) {
    TensorPoly out;
    for (const auto& [ij, v] : c) out.add(Word{spec.letter(matrix_id(ij.first, ij.second))}, static_cast<int>(v));
    return out;
}

}  // namespace tlie_test
