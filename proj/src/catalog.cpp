#include "tlie/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "tlie/error.hpp"

namespace tlie {

namespace {

std::string id_list(const std::vector<std::string>& ids, std::initializer_list<Letter> letters) {
    std::string out = "(";
    bool first = true;
    for (Letter l : letters) {
        if (!first) out += ", ";
        out += ids[l];
        first = false;
    }
    return out + ")";
}

// Records a table value given for the pair (y, x) with x < y, converting it to
// the stored ordered-pair form; q(x, y) must already be known.
TensorPoly from_descending(const LaurentScalar& q_xy, const TensorPoly& value_yx) {
    return -q_xy * value_yx;
}

}  // namespace

// ---------------------------------------------------------------- classical

TLieSpec make_classical(const ClassicalInput& input) {
    const std::size_t n = input.ids.size();
    std::vector<TensorPoly> table(n * n);
    std::vector<bool> given(n * n, false);
    for (const auto& e : input.brackets) {
        if (e.x >= n || e.y >= n) throw Error(ErrorCode::UnknownIdInTable, "bracket entry outside the basis");
        for (const auto& [w, c] : e.value.terms()) {
            if (w.size() != 1 || w[0] >= n) throw Error(ErrorCode::BadTableValue, "bracket values must lie in L");
        }
        if (e.x == e.y) {
            if (!e.value.is_zero()) {
                throw Error(ErrorCode::JacobiFail, "[" + input.ids[e.x] + ", " + input.ids[e.x] +
                                                       "] must vanish in an ordinary Lie algebra");
            }
            continue;
        }
        std::size_t i = e.x * n + e.y;
        std::size_t j = e.y * n + e.x;
        if (given[i]) throw Error(ErrorCode::DuplicateEntry, "bracket entry " + id_list(input.ids, {e.x, e.y}) + " given twice");
        if (given[j] && !(table[j] == -e.value)) {
            throw Error(ErrorCode::JacobiFail, "bracket table is not antisymmetric at " + id_list(input.ids, {e.x, e.y}));
        }
        table[i] = e.value;
        table[j] = -e.value;
        given[i] = true;
        given[j] = true;
    }
    auto br = [&](const TensorPoly& a, const TensorPoly& b) {
        TensorPoly out;
        for (const auto& [u, c] : a.terms()) {
            for (const auto& [v, d] : b.terms()) out += table[u[0] * n + v[0]] * (c * d);
        }
        return out;
    };
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = x + 1; y < n; ++y) {
            for (Letter z = y + 1; z < n; ++z) {
                auto X = TensorPoly::letter(x), Y = TensorPoly::letter(y), Z = TensorPoly::letter(z);
                TensorPoly j = br(X, br(Y, Z)) + br(Y, br(Z, X)) + br(Z, br(X, Y));
                if (!j.is_zero()) {
                    throw Error(ErrorCode::JacobiFail, "Jacobi identity fails on " + id_list(input.ids, {x, y, z}));
                }
            }
        }
    }
    RawSpec raw;
    raw.name = input.name;
    for (const auto& id : input.ids) raw.basis.push_back({id, 1, id});
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = x + 1; y < n; ++y) {
            if (!table[x * n + y].is_zero()) raw.bracket.push_back({x, y, table[x * n + y]});
        }
    }
    return build_spec(raw);
}

TLieSpec make_classical_sl3plus() {
    ClassicalInput in;
    in.name = "classical:sl3plus";
    in.ids = {"e12", "e13", "e23"};
    in.brackets.push_back({0, 2, TensorPoly::letter(1)});
    return make_classical(in);
}

TLieSpec make_classical_sl2() {
    ClassicalInput in;
    in.name = "classical:sl2";
    in.ids = {"e", "f", "h"};
    in.brackets.push_back({0, 1, TensorPoly::letter(2)});
    in.brackets.push_back({2, 0, TensorPoly::letter(0, 2)});
    in.brackets.push_back({2, 1, TensorPoly::letter(1, -2)});
    return make_classical(in);
}

TLieSpec make_abelian(int dimension) {
    if (dimension < 1) throw Error(ErrorCode::UnknownCatalogKey, "abelian dimension must be positive");
    ClassicalInput in;
    in.name = "classical:abelian:" + std::to_string(dimension);
    for (int i = 1; i <= dimension; ++i) in.ids.push_back("x" + std::to_string(i));
    return make_classical(in);
}

// ---------------------------------------------------------------- color

std::size_t group_order(const std::vector<int>& moduli) {
    std::size_t order = 1;
    for (int m : moduli) order *= static_cast<std::size_t>(m);
    return order;
}

std::size_t group_index(const std::vector<int>& moduli, const std::vector<int>& element) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        int m = moduli[i];
        index = index * static_cast<std::size_t>(m) + static_cast<std::size_t>(((element.at(i) % m) + m) % m);
    }
    return index;
}

std::vector<int> group_element(const std::vector<int>& moduli, std::size_t index) {
    std::vector<int> out(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
        out[i] = static_cast<int>(index % static_cast<std::size_t>(moduli[i]));
        index /= static_cast<std::size_t>(moduli[i]);
    }
    return out;
}

namespace {

std::string element_name(const std::vector<int>& g) {
    std::string out = "(";
    for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
    return out + ")";
}

std::vector<int> group_add(const std::vector<int>& moduli, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) out[i] = (a[i] + b[i]) % moduli[i];
    return out;
}

}  // namespace

TLieSpec make_color(const ColorInput& input) {
    for (int m : input.moduli) {
        if (m < 1) throw Error(ErrorCode::NotACommutationFactor, "group moduli must be positive");
    }
    const std::size_t order = group_order(input.moduli);
    if (input.epsilon.size() != order) throw Error(ErrorCode::NotACommutationFactor, "epsilon table has the wrong size");
    for (const auto& row : input.epsilon) {
        if (row.size() != order) throw Error(ErrorCode::NotACommutationFactor, "epsilon table has the wrong size");
    }
    auto eps = [&](std::size_t a, std::size_t b) -> const Rational& { return input.epsilon[a][b]; };
    for (std::size_t a = 0; a < order; ++a) {
        auto ga = group_element(input.moduli, a);
        for (std::size_t b = 0; b < order; ++b) {
            auto gb = group_element(input.moduli, b);
            if (eps(a, b) * eps(b, a) != 1) {
                throw Error(ErrorCode::NotACommutationFactor,
                            "witness " + element_name(ga) + ", " + element_name(gb) + ": eps(a,b) eps(b,a) = " +
                                Rational(eps(a, b) * eps(b, a)).get_str() + ", expected 1");
            }
            for (std::size_t c = 0; c < order; ++c) {
                auto gc = group_element(input.moduli, c);
                std::size_t ab = group_index(input.moduli, group_add(input.moduli, ga, gb));
                if (eps(ab, c) != eps(a, c) * eps(b, c)) {
                    throw Error(ErrorCode::NotACommutationFactor,
                                "witness " + element_name(ga) + ", " + element_name(gb) + ", " + element_name(gc) +
                                    ": eps(a+b,c) differs from eps(a,c) eps(b,c)");
                }
            }
        }
    }
    if (input.degrees.size() != input.ids.size()) {
        throw Error(ErrorCode::BadTableValue, "every basis element needs a degree");
    }
    RawSpec raw;
    raw.name = input.name;
    raw.note = input.note;
    std::vector<std::size_t> deg;
    for (std::size_t i = 0; i < input.ids.size(); ++i) {
        if (input.degrees[i].size() != input.moduli.size()) throw Error(ErrorCode::BadTableValue, "degree has the wrong rank");
        raw.basis.push_back({input.ids[i], 1, input.ids[i]});
        deg.push_back(group_index(input.moduli, input.degrees[i]));
    }
    const auto n = static_cast<Letter>(input.ids.size());
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = x; y < n; ++y) {
            LaurentScalar v(eps(deg[x], deg[y]));
            if (!v.is_one()) raw.sym.push_back({x, y, v});
        }
    }
    raw.bracket = input.brackets;
    return build_spec(raw);
}

TLieSpec make_super_demo() {
    ColorInput in;
    in.name = "super_demo";
    in.note = "not from the catalog of q-deformed examples: a two-dimensional Lie superalgebra with odd x, even y, [x,x] = y";
    in.moduli = {2};
    in.epsilon = {{1, 1}, {1, -1}};
    in.ids = {"x", "y"};
    in.degrees = {{1}, {0}};
    in.brackets.push_back({0, 0, TensorPoly::letter(1)});
    return make_color(in);
}

TLieSpec make_color_z2z2() {
    ColorInput in;
    in.name = "color:z2z2";
    in.note = "Z2 x Z2 graded color Lie algebra, eps(a,b) = (-1)^(a1 b2 - a2 b1)";
    in.moduli = {2, 2};
    const std::size_t order = group_order(in.moduli);
    in.epsilon.assign(order, std::vector<Rational>(order, Rational(1)));
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            auto ga = group_element(in.moduli, a);
            auto gb = group_element(in.moduli, b);
            int e = ga[0] * gb[1] - ga[1] * gb[0];
            in.epsilon[a][b] = (e % 2 == 0) ? 1 : -1;
        }
    }
    in.ids = {"a", "b", "c"};
    in.degrees = {{1, 0}, {0, 1}, {1, 1}};
    in.brackets.push_back({0, 1, TensorPoly::letter(2)});
    in.brackets.push_back({0, 2, TensorPoly::letter(1)});
    in.brackets.push_back({1, 2, TensorPoly::letter(0)});
    return make_color(in);
}

// ---------------------------------------------------------------- sl_{n+1}

std::string sl_id(int i, int j) {
    if (i < 10 && j < 10) return "e" + std::to_string(i) + std::to_string(j);
    return "e" + std::to_string(i) + "_" + std::to_string(j);
}

namespace {

struct Pair {
    int i;
    int j;
};

// Positive roots e_ij ordered by (i + j, j).
std::vector<Pair> sl_order(int n) {
    if (n < 1) throw Error(ErrorCode::UnknownCatalogKey, "rank must be at least 1");
    std::vector<Pair> out;
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = i + 1; j <= n + 1; ++j) out.push_back({i, j});
    }
    std::sort(out.begin(), out.end(), [](Pair a, Pair b) {
        if (a.i + a.j != b.i + b.j) return a.i + a.j < b.i + b.j;
        return a.j < b.j;
    });
    return out;
}

int delta(int a, int b) { return a == b ? 1 : 0; }

// Shared by the plus and minus versions; `transpose` selects e_ji letters
// and the lower triangular commutator.
RawSpec sl_raw(int n, bool transpose) {
    auto roots = sl_order(n);
    const auto size = static_cast<Letter>(roots.size());
    auto find = [&](int i, int j) -> Letter {
        for (Letter k = 0; k < size; ++k) {
            if (roots[k].i == i && roots[k].j == j) return k;
        }
        throw Error(ErrorCode::UnknownId, "no root e" + std::to_string(i) + std::to_string(j));
    };
    RawSpec raw;
    raw.name = std::string(transpose ? "sl_minus_q:" : "sl_plus_q:") + std::to_string(n);
    raw.variables = {"q"};
    for (const auto& r : roots) {
        std::string id = transpose ? sl_id(r.j, r.i) : sl_id(r.i, r.j);
        raw.basis.push_back({id, r.i * (r.j - r.i), id});
    }
    const LaurentScalar q = LaurentScalar::variable(0);
    const LaurentScalar qq = q - q.inverse_unit();
    for (Letter x = 0; x < size; ++x) {
        for (Letter y = x + 1; y < size; ++y) {
            const int a = roots[x].i, b = roots[x].j, u = roots[y].i, v = roots[y].j;
            const int c = -delta(v, a) + delta(v, b) + delta(u, a) - delta(u, b);
            if (c != 0) raw.sym.push_back({x, y, LaurentScalar::variable(0, c)});
            // Matrix unit commutator [E_ab, E_uv] = d_bu E_av - d_va E_ub; the
            // transposed units give the negative of the transposed result.
            TensorPoly br;
            if (b == u) br.add(Word{find(a, v)}, transpose ? -1 : 1);
            if (v == a) br.add(Word{find(u, b)}, transpose ? 1 : -1);
            if (!br.is_zero()) raw.bracket.push_back({x, y, br});
            if (a < u && u < b && b < v) {
                raw.pseudo.push_back({x, y, TensorPoly::word(Word{find(a, v), find(u, b)}, qq)});
            } else if (u < a && a < v && v < b) {
                raw.pseudo.push_back({x, y, TensorPoly::word(Word{find(u, b), find(a, v)}, -qq)});
            }
        }
    }
    return raw;
}

}  // namespace

TLieSpec make_sl_plus_q(int n) {
    return build_spec(sl_raw(n, false));
}

TLieSpec make_sl_minus_q(int n) {
    RawSpec raw = sl_raw(n, true);
    raw.note = "transposed basis e_ji, ordered like e_ij";
    return build_spec(raw);
}

TLieSpec make_tilde_sl4() {
    RawSpec raw = sl_raw(3, false);
    raw.name = "tilde_sl4";
    raw.note = "sl_plus_q:3 with the pseudobracket set to zero";
    raw.pseudo.clear();
    return build_spec(raw);
}

// ---------------------------------------------------------------- L_{p,q,eps}

std::string lpq_id(int i, int j) {
    return "Z" + std::to_string(i) + "_" + std::to_string(j);
}

TLieSpec make_Lpq(int n, int m, const std::vector<std::vector<int>>& eps) {
    if (n < 1 || m < 1) throw Error(ErrorCode::BadEps, "dimensions must be positive");
    const auto k = static_cast<std::size_t>(std::max(n, m));
    if (eps.size() < k) throw Error(ErrorCode::BadEps, "sign matrix must be at least " + std::to_string(k) + " square");
    for (std::size_t i = 0; i < k; ++i) {
        if (eps[i].size() < k) throw Error(ErrorCode::BadEps, "sign matrix row " + std::to_string(i + 1) + " too short");
        if (eps[i][i] != 1) throw Error(ErrorCode::BadEps, "sign matrix needs a unit diagonal");
        for (std::size_t j = 0; j < k; ++j) {
            if (eps[i][j] != 1 && eps[i][j] != -1) throw Error(ErrorCode::BadEps, "sign matrix entries must be 1 or -1");
            if (eps[i][j] != eps[j][i]) throw Error(ErrorCode::BadEps, "sign matrix must be symmetric");
        }
    }
    auto e = [&](int i, int j) { return eps[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };

    RawSpec raw;
    raw.name = "Lpq:" + std::to_string(n) + "x" + std::to_string(m);
    raw.variables = {"p", "q"};
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (eps[i][j] != 1) raw.signs.push_back({"eps" + std::to_string(i + 1) + "_" + std::to_string(j + 1), eps[i][j]});
        }
    }
    // Row-major: Z_i^j > Z_u^v iff i > u, or i = u and j > v.
    struct Index {
        int sub;
        int sup;
    };
    std::vector<Index> elements;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            elements.push_back({i, j});
            int grade = i;
            for (int t = 1; t < j; ++t) grade *= 3;
            raw.basis.push_back({lpq_id(i, j), grade, "Z_" + std::to_string(i) + "^" + std::to_string(j)});
        }
    }
    auto letter = [&](int i, int j) { return static_cast<Letter>((i - 1) * m + (j - 1)); };
    const LaurentScalar p = LaurentScalar::variable(0);
    const LaurentScalar q = LaurentScalar::variable(1);
    const auto size = static_cast<Letter>(elements.size());
    for (Letter x = 0; x < size; ++x) {
        for (Letter y = x + 1; y < size; ++y) {
            // y = Z_i^l is the larger element, x = Z_u^v the smaller one.
            const int i = elements[y].sub, l = elements[y].sup;
            const int u = elements[x].sub, v = elements[x].sup;
            LaurentScalar q_yx;
            if (i == u) {
                q_yx = LaurentScalar(e(v, l)) * p;
            } else if (l == v) {
                q_yx = LaurentScalar(e(u, i)) * q;
            } else if (v > l) {
                q_yx = LaurentScalar(e(i, u) * e(v, l)) * p.inverse_unit() * q;
            } else {
                q_yx = LaurentScalar(e(v, l) * e(u, i));
            }
            const LaurentScalar q_xy = q_yx.inverse_unit();
            if (!q_xy.is_one()) raw.sym.push_back({x, y, q_xy});
            if (i > u && l > v) {
                TensorPoly value_yx = TensorPoly::word(Word{letter(i, v), letter(u, l)},
                                                       LaurentScalar(e(v, l)) * (p - q.inverse_unit()));
                raw.pseudo.push_back({x, y, from_descending(q_xy, value_yx)});
            }
        }
    }
    return build_spec(raw);
}

// ---------------------------------------------------------------- keys

namespace {

int parse_positive(const std::string& text, const std::string& key) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
        throw Error(ErrorCode::UnknownCatalogKey, "bad number '" + text + "' in key " + key);
    }
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

TLieSpec from_catalog_key(const std::string& key) {
    auto parts = split(key, ':');
    const std::string& family = parts[0];
    if (family == "sl_plus_q" && parts.size() == 2) return make_sl_plus_q(parse_positive(parts[1], key));
    if (family == "sl_minus_q" && parts.size() == 2) return make_sl_minus_q(parse_positive(parts[1], key));
    if (family == "tilde_sl4" && parts.size() == 1) return make_tilde_sl4();
    if (family == "super_demo" && parts.size() == 1) return make_super_demo();
    if (family == "color" && parts.size() == 2 && parts[1] == "z2z2") return make_color_z2z2();
    if (family == "classical" && parts.size() == 2 && parts[1] == "sl3plus") return make_classical_sl3plus();
    if (family == "classical" && parts.size() == 2 && parts[1] == "sl2") return make_classical_sl2();
    if (family == "classical" && parts.size() == 3 && parts[1] == "abelian") return make_abelian(parse_positive(parts[2], key));
    if (family == "Lpq" && (parts.size() == 2 || parts.size() == 3)) {
        auto dims = split(parts[1], 'x');
        if (dims.size() != 2) throw Error(ErrorCode::UnknownCatalogKey, "expected Lpq:NxM in " + key);
        int n = parse_positive(dims[0], key);
        int m = parse_positive(dims[1], key);
        auto k = static_cast<std::size_t>(std::max(n, m));
        std::vector<std::vector<int>> eps(k, std::vector<int>(k, 1));
        if (parts.size() == 3) {
            if (parts[2].rfind("neg=", 0) != 0) throw Error(ErrorCode::UnknownCatalogKey, "expected neg=i-j,... in " + key);
            for (const auto& item : split(parts[2].substr(4), ',')) {
                auto ij = split(item, '-');
                if (ij.size() != 2) throw Error(ErrorCode::UnknownCatalogKey, "expected i-j in " + key);
                auto i = static_cast<std::size_t>(parse_positive(ij[0], key));
                auto j = static_cast<std::size_t>(parse_positive(ij[1], key));
                if (i > k || j > k || i == j) throw Error(ErrorCode::BadEps, "sign index out of range in " + key);
                eps[i - 1][j - 1] = -1;
                eps[j - 1][i - 1] = -1;
            }
        }
        TLieSpec spec = make_Lpq(n, m, eps);
        spec.set_name(key);
        return spec;
    }
    throw Error(ErrorCode::UnknownCatalogKey, "unknown catalog key " + key);
}

std::vector<std::string> catalog_keys() {
    return {"classical:sl3plus", "classical:sl2", "classical:abelian:N", "color:z2z2", "super_demo",
            "sl_plus_q:N",       "sl_minus_q:N",  "tilde_sl4",           "Lpq:NxM",    "Lpq:NxM:neg=i-j,..."};
}

}  // namespace tlie
