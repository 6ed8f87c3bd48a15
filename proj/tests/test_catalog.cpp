#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "support.hpp"
#include "tlie/catalog.hpp"
#include "tlie/error.hpp"

using namespace tlie_test;

namespace {

const LaurentScalar q = var(0);

ErrorCode error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::BadSpecFile;
}

Assignment q_at_one() {
    Assignment a;
    a[0] = Rational(1);
    return a;
}

}  // namespace

TEST_CASE("sl_plus_q sizes, grades and order") {
    for (int n = 1; n <= 5; ++n) {
        const TLieSpec s = make_sl_plus_q(n);
        REQUIRE(s.dimension() == static_cast<std::size_t>(n * (n + 1) / 2));
        for (Letter x = 0; x < s.dimension(); ++x) {
            const auto [i, j] = matrix_indices(s.id(x));
            CHECK(i < j);
            CHECK(s.grade(x) == i * (j - i));
            if (x + 1 < s.dimension()) {
                const auto [u, v] = matrix_indices(s.id(x + 1));
                // (i + j, j) lexicographic.
                CHECK((i + j < u + v || (i + j == u + v && j < v)));
            }
        }
        CHECK(s.stable());
    }
    const TLieSpec s4 = make_sl_plus_q(3);
    std::vector<std::string> ids;
    for (const auto& b : s4.basis()) ids.push_back(b.id);
    CHECK(ids == std::vector<std::string>{"e12", "e13", "e23", "e14", "e24", "e34"});
}

TEST_CASE("two-digit ids") {
    const TLieSpec s = make_sl_plus_q(9);
    CHECK(s.find("e1_10"));
    CHECK(s.find("e9_10"));
    CHECK(s.find("e19"));
    CHECK_FALSE(s.find("e110"));
}

TEST_CASE("q-symmetry exponents come from the Cartan action") {
    for (int n = 1; n <= 4; ++n) {
        const TLieSpec s = make_sl_plus_q(n);
        const MatrixUnits m(n + 1, false);
        for (Letter x = 0; x < s.dimension(); ++x) {
            for (Letter y = 0; y < s.dimension(); ++y) {
                const long c = m.cartan_exponent(matrix_indices(s.id(x)), matrix_indices(s.id(y)));
                if (x < y) CHECK(s.q(x, y) == var(0, static_cast<int>(c)));
                if (x > y) CHECK(s.q(x, y) == var(0, static_cast<int>(-c)));
                if (x == y) CHECK(s.q(x, y).is_one());
            }
        }
    }
}

TEST_CASE("brackets at q = 1 are matrix commutators") {
    for (int n = 1; n <= 4; ++n) {
        for (bool lower : {false, true}) {
            const TLieSpec s = specialize(lower ? make_sl_minus_q(n) : make_sl_plus_q(n), q_at_one());
            const MatrixUnits m(n + 1, lower);
            for (Letter x = 0; x < s.dimension(); ++x) {
                for (Letter y = 0; y < s.dimension(); ++y) {
                    const auto expected = m.bracket(matrix_indices(s.id(x)), matrix_indices(s.id(y)));
                    CHECK(s.bracket(x, y) == to_poly(s, expected));
                    CHECK(s.pseudo(x, y).is_zero());
                }
            }
        }
    }
}

TEST_CASE("brackets for x < y do not depend on q") {
    const TLieSpec s = make_sl_plus_q(4);
    const MatrixUnits m(5, false);
    for (Letter x = 0; x < s.dimension(); ++x) {
        for (Letter y = x + 1; y < s.dimension(); ++y) {
            CHECK(s.bracket(x, y) == to_poly(s, m.bracket(matrix_indices(s.id(x)), matrix_indices(s.id(y)))));
        }
    }
}

TEST_CASE("sl4 pseudobracket vanishes except on e13, e24") {
    const TLieSpec s = make_sl_plus_q(3);
    const Letter e13 = s.letter("e13"), e24 = s.letter("e24");
    for (Letter x = 0; x < s.dimension(); ++x) {
        for (Letter y = 0; y < s.dimension(); ++y) {
            const bool special = (x == e13 && y == e24) || (x == e24 && y == e13);
            CHECK(s.pseudo(x, y).is_zero() != special);
        }
    }
    CHECK(s.pseudo(e13, e24) == TensorPoly::word(Word{s.letter("e14"), s.letter("e23")}, q - q.pow(-1)));
    CHECK(make_tilde_sl4().has_pseudobracket() == false);
}

TEST_CASE("pseudobracket case formulas on sl5") {
    const TLieSpec s = make_sl_plus_q(4);
    for (Letter x = 0; x < s.dimension(); ++x) {
        for (Letter y = x + 1; y < s.dimension(); ++y) {
            const auto [i, j] = matrix_indices(s.id(x));
            const auto [u, v] = matrix_indices(s.id(y));
            TensorPoly expected;
            if (i < u && u < j && j < v) {
                expected = TensorPoly::word(Word{s.letter(matrix_id(i, v)), s.letter(matrix_id(u, j))}, q - q.pow(-1));
            } else if (u < i && i < v && v < j) {
                expected = TensorPoly::word(Word{s.letter(matrix_id(u, j)), s.letter(matrix_id(i, v))}, q.pow(-1) - q);
            }
            CHECK(s.pseudo(x, y) == expected);
        }
    }
}

TEST_CASE("sl_minus_q is the transpose of sl_plus_q") {
    for (int n = 1; n <= 4; ++n) {
        const TLieSpec plus = make_sl_plus_q(n), minus = make_sl_minus_q(n);
        REQUIRE(plus.dimension() == minus.dimension());
        for (Letter x = 0; x < plus.dimension(); ++x) {
            const auto [i, j] = matrix_indices(plus.id(x));
            CHECK(minus.id(x) == matrix_id(j, i));
            CHECK(minus.grade(x) == plus.grade(x));
            for (Letter y = 0; y < plus.dimension(); ++y) {
                CHECK(minus.q(x, y) == plus.q(x, y));
                TensorPoly negated;
                for (const auto& [w, c] : plus.bracket(x, y).terms()) negated.add(w, -c);
                CHECK(minus.bracket(x, y) == negated);
            }
        }
    }
}

TEST_CASE("Lpq grades and stability") {
    const TLieSpec s = make_Lpq(3, 3, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    CHECK(s.dimension() == 9);
    for (int i = 1; i <= 3; ++i) {
        int power = 1;
        for (int j = 1; j <= 3; ++j) {
            CHECK(s.grade(s.letter(lpq_id(i, j))) == i * power);
            CHECK(s.element(s.letter(lpq_id(i, j))).display == "Z_" + std::to_string(i) + "^" + std::to_string(j));
            power *= 3;
        }
    }
    CHECK(s.stable());
    CHECK(s.variables() == std::vector<std::string>{"p", "q"});
    for (Letter x = 0; x < s.dimension(); ++x)
        for (Letter y = 0; y < s.dimension(); ++y) CHECK(s.bracket(x, y).is_zero());
}

TEST_CASE("Lpq sign validation") {
    CHECK(error_of([] { (void)make_Lpq(2, 2, {{1, 2}, {2, 1}}); }) == ErrorCode::BadEps);
    CHECK(error_of([] { (void)make_Lpq(2, 2, {{1, -1}, {1, 1}}); }) == ErrorCode::BadEps);
    CHECK(error_of([] { (void)make_Lpq(2, 2, {{-1, 1}, {1, 1}}); }) == ErrorCode::BadEps);
    CHECK(error_of([] { (void)make_Lpq(3, 2, {{1, 1}, {1, 1}}); }) == ErrorCode::BadEps);
    CHECK(error_of([] { (void)from_catalog_key("Lpq:2x2:neg=1-5"); }) == ErrorCode::BadEps);
}

TEST_CASE("Lpq sign keys") {
    const TLieSpec s = from_catalog_key("Lpq:3x3:neg=1-2,2-3");
    CHECK(s.name() == "Lpq:3x3:neg=1-2,2-3");
    REQUIRE(s.signs().size() == 2);
    CHECK(s.signs()[0].name == "eps1_2");
    CHECK(s.signs()[0].value == -1);
    CHECK(s.signs()[1].name == "eps2_3");
    CHECK(same_structure(s, make_Lpq(3, 3, {{1, -1, 1}, {-1, 1, -1}, {1, -1, 1}})));
}

TEST_CASE("color construction") {
    ColorInput bad;
    bad.moduli = {2};
    bad.epsilon = {{1, 1}, {1, 2}};
    bad.ids = {"x"};
    bad.degrees = {{1}};
    CHECK(error_of([&] { (void)make_color(bad); }) == ErrorCode::NotACommutationFactor);

    ColorInput not_bichar = bad;
    not_bichar.epsilon = {{1, -1}, {-1, 1}};
    CHECK(error_of([&] { (void)make_color(not_bichar); }) == ErrorCode::NotACommutationFactor);

    // A trivial commutation factor gives back an ordinary Lie algebra.
    ColorInput trivial;
    trivial.moduli = {2};
    trivial.epsilon = {{1, 1}, {1, 1}};
    trivial.ids = {"e12", "e13", "e23"};
    trivial.degrees = {{0}, {1}, {1}};
    trivial.brackets.push_back({0, 2, TensorPoly::letter(1)});
    const TLieSpec color = make_color(trivial);
    const TLieSpec classical = make_classical_sl3plus();
    for (Letter x = 0; x < 3; ++x) {
        for (Letter y = 0; y < 3; ++y) {
            CHECK(color.q(x, y) == classical.q(x, y));
            CHECK(color.bracket(x, y) == classical.bracket(x, y));
        }
    }

    const TLieSpec z = make_color_z2z2();
    CHECK(z.q(0, 1) == LaurentScalar(-1));
    CHECK(z.q(0, 0).is_one());
    const TLieSpec super = make_super_demo();
    CHECK(super.q(0, 0) == LaurentScalar(-1));
    CHECK(super.bracket(0, 0) == TensorPoly::letter(1));
}

TEST_CASE("classical construction rejects non-Lie tables") {
    ClassicalInput in;
    in.ids = {"a", "b", "c"};
    in.brackets.push_back({0, 1, TensorPoly::letter(0)});
    in.brackets.push_back({0, 2, TensorPoly::letter(1)});
    CHECK(error_of([&] { (void)make_classical(in); }) == ErrorCode::JacobiFail);

    ClassicalInput self;
    self.ids = {"a", "b"};
    self.brackets.push_back({0, 0, TensorPoly::letter(1)});
    CHECK(error_of([&] { (void)make_classical(self); }) == ErrorCode::JacobiFail);

    const TLieSpec sl2 = make_classical_sl2();
    CHECK(sl2.bracket(0, 1) == TensorPoly::letter(2));
    CHECK(sl2.bracket(1, 0) == TensorPoly::letter(2, -1));
    CHECK(sl2.bracket(0, 2) == TensorPoly::letter(0, -2));
}

TEST_CASE("catalog keys") {
    CHECK(from_catalog_key("sl_plus_q:3").dimension() == 6);
    CHECK(from_catalog_key("sl_minus_q:2").id(0) == "e21");
    CHECK(from_catalog_key("tilde_sl4").dimension() == 6);
    CHECK(from_catalog_key("classical:abelian:4").dimension() == 4);
    CHECK(from_catalog_key("color:z2z2").dimension() == 3);
    CHECK(from_catalog_key("super_demo").dimension() == 2);
    CHECK(from_catalog_key("Lpq:2x3").dimension() == 6);
    for (const char* key : {"sl_plus_q", "sl_plus_q:0", "sl_plus_q:x", "Lpq:2", "Lpq:2x2:pos=1-2", "nothing"}) {
        CHECK(error_of([key] { (void)from_catalog_key(key); }) == ErrorCode::UnknownCatalogKey);
    }
    const auto keys = catalog_keys();
    CHECK(std::find(keys.begin(), keys.end(), "tilde_sl4") != keys.end());
}

TEST_CASE("group numbering") {
    const std::vector<int> moduli{2, 3};
    CHECK(group_order(moduli) == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(group_index(moduli, group_element(moduli, i)) == i);
    CHECK(group_index(moduli, {1, 0}) == 3);
    CHECK(group_index(moduli, {-1, 4}) == 4);
}
