#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "support.hpp"
#include "tlie/axioms.hpp"
#include "tlie/catalog.hpp"
#include "tlie/error.hpp"

using namespace tlie_test;

namespace {

const LaurentScalar q = var(0);

using Checker = std::function<CheckRecord(const TLieSpec&)>;

// Every witness of a failing record re-evaluates to its stored, nonzero
// discrepancy.
void require_self_certifying(const TLieSpec& s, const CheckRecord& r) {
    REQUIRE_FALSE(r.passed());
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.failures >= r.witnesses.size());
    for (const auto& w : r.witnesses) {
        const TensorPoly again = reevaluate_witness(s, r.check, w);
        CHECK_FALSE(again.is_zero());
        CHECK(again == w.discrepancy);
    }
}

Letter id(const TLieSpec& s, const char* name) { return s.letter(name); }

// Number of single-entry mutations of `raw` produced by `mutate` that make
// `check` fail.
int count_flips(const RawSpec& raw, std::size_t entries, const std::function<bool(RawSpec&, std::size_t)>& mutate,
                const Checker& check) {
    int flips = 0;
    for (std::size_t i = 0; i < entries; ++i) {
        RawSpec m = raw;
        if (!mutate(m, i)) continue;
        const TLieSpec s = build_spec(m);
        const CheckRecord r = check(s);
        if (!r.passed()) {
            ++flips;
            require_self_certifying(s, r);
        }
    }
    return flips;
}

}  // namespace

TEST_CASE("catalog algebras satisfy the axioms") {
    const std::vector<Checker> checks{check_involution, check_multiplicativity, check_stability, check_antisymmetry,
                                      check_jacobi, [](const TLieSpec& s) { return check_braid(s, BraidMap::S); }};
    for (const char* key : {"sl_plus_q:2", "sl_plus_q:3", "sl_plus_q:4", "sl_minus_q:3", "tilde_sl4", "Lpq:2x2",
                            "Lpq:3x3:neg=1-2", "Lpq:2x3", "classical:sl3plus", "classical:sl2", "color:z2z2",
                            "super_demo"}) {
        const TLieSpec s = from_catalog_key(key);
        for (const auto& check : checks) {
            const CheckRecord r = check(s);
            INFO(key << " " << r.check);
            CHECK(r.passed());
            CHECK(r.failures == 0);
        }
    }
}

TEST_CASE("stability on the worked cases") {
    const TLieSpec l = from_catalog_key("Lpq:2x2");
    // eta(Z_2^2) + eta(Z_1^1) - 1 = 6 >= eta(Z_2^1) + eta(Z_1^2) = 5
    CHECK(l.grade(id(l, "Z2_2")) + l.grade(id(l, "Z1_1")) - 1 == 6);
    CHECK(l.grade(id(l, "Z2_1")) + l.grade(id(l, "Z1_2")) == 5);
    CHECK(check_stability(l).passed());

    const TLieSpec s = make_sl_plus_q(3);
    CHECK(s.grade(id(s, "e14")) + s.grade(id(s, "e23")) == s.grade(id(s, "e13")) + s.grade(id(s, "e24")) - 1);
}

TEST_CASE("mutation: a sym entry times q breaks multiplicativity") {
    const RawSpec raw = make_sl_plus_q(3).to_raw();
    const int flips = count_flips(
        raw, raw.sym.size(),
        [](RawSpec& m, std::size_t i) {
            if (m.sym[i].x == m.sym[i].y) return false;
            m.sym[i].value *= q;
            return true;
        },
        check_multiplicativity);
    CHECK(flips > 0);
}

TEST_CASE("mutation: unit grades with a pseudobracket break stability") {
    RawSpec raw = make_sl_plus_q(3).to_raw();
    for (auto& b : raw.basis) b.grade = 1;
    const TLieSpec s = build_spec(raw);
    CHECK_FALSE(s.stable());
    const CheckRecord r = check_stability(s);
    require_self_certifying(s, r);

    raw.pseudo.clear();
    CHECK(check_stability(build_spec(raw)).passed());
}

TEST_CASE("mutation: pseudobracket x.y with nonzero bracket breaks antisymmetry") {
    RawSpec raw = make_sl_plus_q(3).to_raw();
    const TLieSpec base = make_sl_plus_q(3);
    const Letter e12 = id(base, "e12"), e23 = id(base, "e23");
    REQUIRE_FALSE(base.bracket(e12, e23).is_zero());
    raw.pseudo.push_back({e12, e23, TensorPoly::word(Word{e12, e23})});
    const TLieSpec s = build_spec(raw);
    require_self_certifying(s, check_antisymmetry(s));
}

TEST_CASE("mutation: scaling a bracket entry breaks jacobi") {
    const RawSpec raw = make_sl_plus_q(3).to_raw();
    const int flips = count_flips(
        raw, raw.bracket.size(),
        [](RawSpec& m, std::size_t i) {
            m.bracket[i].value *= LaurentScalar(2);
            return true;
        },
        check_jacobi);
    CHECK(flips > 0);

    // [e12, e23] := 2 e13 alone.
    RawSpec doubled = raw;
    const TLieSpec base = make_sl_plus_q(3);
    for (auto& e : doubled.bracket) {
        if (e.x == id(base, "e12") && e.y == id(base, "e23")) e.value *= LaurentScalar(2);
    }
    const TLieSpec s = build_spec(doubled);
    const CheckRecord r = check_jacobi(s);
    if (!r.passed()) require_self_certifying(s, r);
}

TEST_CASE("braid-T on sl4 does not see the pseudobracket coefficient") {
    // Only the pair (e24, e13) has a pseudobracket and its value uses neither
    // letter again, so the braid discrepancy is affine in the coefficient c.
    // It vanishes at c = 0 and at c = q - q^-1, hence for every c.
    for (const LaurentScalar& c : {LaurentScalar(1), LaurentScalar(2), q, q.pow(-1) - q}) {
        RawSpec raw = make_sl_plus_q(3).to_raw();
        REQUIRE(raw.pseudo.size() == 1);
        const Word w = raw.pseudo[0].value.terms().begin()->first;
        raw.pseudo[0].value = TensorPoly::word(w, c);
        CHECK(check_braid(build_spec(raw), BraidMap::T).passed());
    }
}

TEST_CASE("mutation: a sym entry times q breaks braid-T") {
    const RawSpec raw = make_sl_plus_q(3).to_raw();
    const int flips = count_flips(
        raw, raw.sym.size(),
        [](RawSpec& m, std::size_t i) {
            if (m.sym[i].x == m.sym[i].y) return false;
            m.sym[i].value *= q;
            return true;
        },
        [](const TLieSpec& s) { return check_braid(s, BraidMap::T); });
    CHECK(flips > 0);
}

TEST_CASE("braid-S holds for every symmetry table") {
    Rng rng(17);
    for (int round = 0; round < 20; ++round) {
        RawSpec raw = make_sl_plus_q(3).to_raw();
        for (auto& e : raw.sym) {
            if (e.x != e.y) e.value = random_unit(rng, 1);
        }
        CHECK(check_braid(build_spec(raw), BraidMap::S).passed());
    }
}

TEST_CASE("removing the pseudobracket breaks adequacy") {
    const TLieSpec s = make_tilde_sl4();
    const CheckRecord r = check_adequacy(s, 24, AdequacyMethod::Linear);
    require_self_certifying(s, r);
    CHECK(check_adequacy(make_sl_plus_q(3), 24, AdequacyMethod::Linear).passed());
}

TEST_CASE("involution holds by construction") {
    CHECK(check_involution(make_sl_plus_q(3)).passed());
    CHECK(check_involution(make_classical_sl3plus()).passed());
    RawSpec raw = make_sl_plus_q(2).to_raw();
    raw.sym.push_back({0, 0, q});
    CHECK_THROWS_AS((void)build_spec(raw), Error);
}

TEST_CASE("braid-T") {
    for (const char* key : {"sl_plus_q:2", "sl_plus_q:3", "sl_minus_q:2", "sl_minus_q:3", "classical:sl3plus"}) {
        INFO(std::string(key));
        CHECK(check_braid(from_catalog_key(key), BraidMap::T).passed());
    }
    // The 10-element algebra of key 4 fails on two decreasing triples.
    const TLieSpec s = make_sl_plus_q(4);
    const CheckRecord r = check_braid(s, BraidMap::T);
    require_self_certifying(s, r);
    CHECK(r.failures == 2);
    CHECK(r.cases == 120);
}

TEST_CASE("balanced identities") {
    CHECK(check_balanced(make_tilde_sl4()).passed());
    CHECK(check_balanced(make_classical_sl3plus()).passed());
    try {
        (void)check_balanced(make_sl_plus_q(3));
        FAIL("expected PreconditionViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PreconditionViolated);
    }
}

TEST_CASE("adequacy") {
    for (const char* key : {"sl_plus_q:2", "sl_plus_q:3", "sl_minus_q:3", "Lpq:2x2", "classical:sl3plus", "color:z2z2",
                            "super_demo"}) {
        INFO(std::string(key));
        const TLieSpec s = from_catalog_key(key);
        const CheckRecord linear = check_adequacy(s, std::nullopt, AdequacyMethod::Linear);
        CHECK(linear.passed());
        CHECK(check_adequacy(s, std::nullopt, AdequacyMethod::Auto).passed());
        // rewrite member implies linear member
        try {
            if (check_adequacy(s, std::nullopt, AdequacyMethod::Rewrite).passed()) CHECK(linear.passed());
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Inconclusive);
        }
    }
    const TLieSpec s4 = make_sl_plus_q(3);
    CHECK(adequacy_grade_bound(s4) == 10);  // e34 > e24 > e14: 3 + 4 + 3
    const Letter e24 = id(s4, "e24"), e13 = id(s4, "e13"), e12 = id(s4, "e12");
    const TLieSpec tilde = make_tilde_sl4();
    CHECK_FALSE(adequacy_difference(tilde, e24, e13, e12).is_zero());
}

TEST_CASE("verify") {
    VerifyOptions options;
    options.r_max = 24;
    const VerificationReport full = verify(make_sl_plus_q(4), {"all"}, options);
    CHECK(full.all_passed());
    CHECK(full.checks.size() == axiom_check_names().size());

    const VerificationReport partial = verify(make_tilde_sl4(), {"jacobi", "braid-S"});
    CHECK(partial.all_passed());
    CHECK(partial.checks.size() == 2);

    CHECK(verify(make_classical_sl3plus(), {"all"}).all_passed());

    const VerificationReport tilde = verify(make_tilde_sl4(), {"diamond", "lemma-c"});
    CHECK(tilde.any_failed());

    const VerificationReport balanced = verify(make_sl_plus_q(3), {"balanced"});
    REQUIRE(balanced.checks.size() == 1);
    CHECK(balanced.checks[0].status == CheckStatus::Skipped);
    CHECK(balanced.all_passed());

    CHECK_THROWS_AS((void)verify(make_sl_plus_q(2), {"nonsense"}), Error);
}

TEST_CASE("reports are deterministic apart from timing") {
    const TLieSpec s = make_tilde_sl4();
    auto strip = [&](VerificationReport r) {
        for (auto& c : r.checks) c.wall_time_ms = 0;
        return report_json(s, r).dump();
    };
    const std::vector<std::string> checks{"all", "diamond", "lemma-c"};
    CHECK(strip(verify(s, checks)) == strip(verify(s, checks)));
}

TEST_CASE("check names") {
    const auto all = axiom_check_names();
    CHECK(std::find(all.begin(), all.end(), "braid-T") == all.end());
    const auto known = known_check_names();
    for (const char* n : {"braid-T", "balanced", "diamond", "lemma-c", "adequacy"}) {
        CHECK(std::find(known.begin(), known.end(), n) != known.end());
    }
}
