#pragma once

#include <string>
#include <vector>

#include "tlie/core.hpp"

namespace tlie {

// Ordinary Lie algebra given by its full bracket table; entries may be given
// for either order and must agree with antisymmetry.
struct ClassicalInput {
    std::string name;
    std::vector<std::string> ids;
    std::vector<TableEntry> brackets;
};

TLieSpec make_classical(const ClassicalInput& input);

// Color Lie algebra graded by Z_{m_1} x ... x Z_{m_k}. Group elements are
// numbered in mixed radix with the first factor varying slowest; `epsilon`
// is the full table over that numbering.
struct ColorInput {
    std::string name;
    std::vector<int> moduli;
    std::vector<std::vector<Rational>> epsilon;
    std::vector<std::string> ids;
    std::vector<std::vector<int>> degrees;
    std::vector<TableEntry> brackets;  // ordered pairs x <= y
    std::string note;
};

TLieSpec make_color(const ColorInput& input);

std::size_t group_order(const std::vector<int>& moduli);
std::size_t group_index(const std::vector<int>& moduli, const std::vector<int>& element);
std::vector<int> group_element(const std::vector<int>& moduli, std::size_t index);

// Positive part of sl_{n+1} with the q-symmetry; basis e_ij, 1 <= i < j <= n+1.
TLieSpec make_sl_plus_q(int n);
// Transposed version: basis e_ji ordered like e_ij.
TLieSpec make_sl_minus_q(int n);
// make_sl_plus_q(3) with the pseudobracket removed; PBW fails for it.
TLieSpec make_tilde_sl4();
// Basis Z_i^j (1 <= i <= n, 1 <= j <= m) over Q[p^{+-1}, q^{+-1}]. `eps` is a
// symmetric sign matrix with unit diagonal, at least max(n, m) square.
TLieSpec make_Lpq(int n, int m, const std::vector<std::vector<int>>& eps);
// Odd x, even y with [x, x] = y: exercises the q_{x,x} = -1 rules.
TLieSpec make_super_demo();
TLieSpec make_color_z2z2();
TLieSpec make_classical_sl3plus();
TLieSpec make_classical_sl2();
TLieSpec make_abelian(int dimension);

// Ids used by make_sl_plus_q / make_sl_minus_q for the matrix unit e_ij.
std::string sl_id(int i, int j);
// Ids used by make_Lpq for Z_i^j.
std::string lpq_id(int i, int j);

// Keys: sl_plus_q:N, sl_minus_q:N, tilde_sl4, Lpq:NxM[:neg=i-j,...],
// classical:sl3plus, classical:sl2, classical:abelian:N, color:z2z2,
// super_demo.
TLieSpec from_catalog_key(const std::string& key);
std::vector<std::string> catalog_keys();

}  // namespace tlie
