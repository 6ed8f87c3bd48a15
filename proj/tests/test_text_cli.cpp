#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "tlie/catalog.hpp"
#include "tlie/cli.hpp"
#include "tlie/error.hpp"
#include "tlie/text.hpp"

using namespace tlie_test;

namespace {

const LaurentScalar q = var(0);

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_command(args, out, err);
    return {status, out.str(), err.str()};
}

ErrorCode parse_error(std::string_view src, const TLieSpec& s) {
    try {
        (void)parse_expression(src, s);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse error for " << src);
    return ErrorCode::BadSpecFile;
}

ErrorCode spec_error(std::string_view text) {
    try {
        (void)load_spec_text(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a spec error");
    return ErrorCode::BadSpecFile;
}

nlohmann::json without_timing(nlohmann::json j) {
    if (j.is_object()) {
        j.erase("wall_time_ms");
        for (auto& [k, v] : j.items()) v = without_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = without_timing(v);
    }
    return j;
}

}  // namespace

TEST_CASE("expressions") {
    const TLieSpec s3 = make_sl_plus_q(2);
    CHECK(parse_expression("e23.e12", s3) == TensorPoly::word(Word{s3.letter("e23"), s3.letter("e12")}));

    const TLieSpec s = make_sl_plus_q(3);
    const TensorPoly t = parse_expression("(q - q^-1) * e14.e23 + e13.e24", s);
    CHECK(t.size() == 2);
    CHECK(t.coefficient(Word{s.letter("e14"), s.letter("e23")}) == q - q.pow(-1));
    CHECK(t.coefficient(Word{s.letter("e13"), s.letter("e24")}) == 1);

    CHECK(parse_expression("e12.(e13 + 2*e23)", s) ==
          parse_expression("e12.e13 + 2 * e12.e23", s));
    CHECK(parse_expression("-e12 / q", s) == TensorPoly::letter(s.letter("e12"), -q.pow(-1)));
    CHECK(parse_expression("q^(-2) * e12", s) == TensorPoly::letter(s.letter("e12"), q.pow(-2)));
    CHECK(parse_expression("3/2", s) == TensorPoly::scalar(Rational(3, 2)));
    CHECK(parse_expression("0 * e12", s).is_zero());

    CHECK(parse_error("e99", s3) == ErrorCode::UnknownId);
    CHECK(parse_error("e12 +", s3) == ErrorCode::SyntaxError);
    CHECK(parse_error("e12 * e13", s3) == ErrorCode::SyntaxError);
    CHECK(parse_error("e12 / (q + 1)", s3) == ErrorCode::NotAUnit);
    CHECK(parse_error("(e12", s3) == ErrorCode::SyntaxError);
    try {
        (void)parse_expression("e12 $ e13", s3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SyntaxError);
        CHECK(e.detail().find("column 5") != std::string::npos);
    }
}

TEST_CASE("scalars with signs") {
    const std::vector<std::string> vars{"p", "q"};
    const std::vector<SignConstant> signs{{"eps1_2", -1}};
    CHECK(parse_scalar("eps1_2 * p", vars, signs) == -var(0));
    CHECK(parse_scalar("p^-1*q", vars) == var(0, -1) * var(1));
    CHECK_THROWS_AS((void)parse_scalar("r", vars), Error);
}

TEST_CASE("spec text") {
    const char* text = R"(
# two generators and their commutator
[meta]
name = tiny
variables = q
[basis]
a 1
b 1
c 2 C   # display name
[sym]
a b -> q
[bracket]
a b -> c
[pseudo]
)";
    const TLieSpec s = load_spec_text(text);
    CHECK(s.name() == "tiny");
    CHECK(s.dimension() == 3);
    CHECK(s.element(2).display == "C");
    CHECK(s.q(0, 1) == q);
    CHECK(s.bracket(0, 1) == TensorPoly::letter(2));
    CHECK(s.bracket(1, 0) == TensorPoly::letter(2, -q.pow(-1)));

    CHECK(spec_error("[basis]\na 1\na 1\n") == ErrorCode::DuplicateId);
    CHECK(spec_error("[basis]\na 1\n[bracket]\na z -> a\n") == ErrorCode::UnknownIdInTable);
    CHECK(spec_error("[basis]\na x\n") == ErrorCode::BadSpecFile);
    CHECK(spec_error("[nonsense]\n") == ErrorCode::BadSpecFile);
    CHECK(spec_error("[meta]\nvariables = q\n[basis]\na 1\nb 1\n[sym]\nb a -> q\n") == ErrorCode::MisorderedEntry);
    try {
        (void)load_spec_text("[basis]\na 1\nb 1\n[bracket]\na b -> a +\n");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SyntaxError);
        CHECK(e.detail().find("line 5") != std::string::npos);
    }
}

TEST_CASE("dump and reload reproduce every catalog entry") {
    for (const char* key : {"sl_plus_q:1", "sl_plus_q:3", "sl_plus_q:5", "sl_minus_q:3", "tilde_sl4", "Lpq:2x2",
                            "Lpq:3x3:neg=1-2,2-3", "Lpq:2x3", "classical:sl3plus", "classical:sl2",
                            "classical:abelian:3", "color:z2z2", "super_demo"}) {
        INFO(std::string(key));
        const TLieSpec s = from_catalog_key(key);
        const std::string text = dump_spec(s);
        const TLieSpec back = load_spec_text(text);
        CHECK(same_structure(s, back));
        CHECK(back.name() == s.name());
        CHECK(dump_spec(back) == text);
    }
}

TEST_CASE("specs resolve from files or keys") {
    const std::string path = "tlie_test_spec.txt";
    {
        std::ofstream f(path);
        f << dump_spec(make_sl_plus_q(2));
    }
    CHECK(same_structure(resolve_spec(path), make_sl_plus_q(2)));
    const Run r = run({"normalize", path, "e23.e12"});
    CHECK(r.status == kExitOk);
    CHECK(r.out == "-q * e13 + q * e12.e23\n");
    std::remove(path.c_str());
    CHECK(same_structure(resolve_spec("tilde_sl4"), make_tilde_sl4()));
}

TEST_CASE("cli: verify") {
    const Run all = run({"verify", "sl_plus_q:4", "--checks", "all", "--r-max", "24"});
    CHECK(all.status == kExitOk);
    CHECK(all.out.find("result: pass") != std::string::npos);

    const Run fail = run({"verify", "tilde_sl4", "--checks", "diamond"});
    CHECK(fail.status == kExitMathFailure);
    CHECK(fail.out.find("result: fail") != std::string::npos);

    const Run json = run({"verify", "tilde_sl4", "--checks", "all,diamond", "--json"});
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["all_passed"] == false);
    CHECK(j["spec"] == "tilde_sl4");
    CHECK(without_timing(j) == without_timing(nlohmann::json::parse(run({"verify", "tilde_sl4", "--checks", "all,diamond",
                                                                          "--json"})
                                                                         .out)));

    CHECK(run({"verify", "sl_plus_q:2", "--checks", "bogus"}).status == kExitUsage);
}

TEST_CASE("cli: normalize, pbw, act") {
    const Run n = run({"normalize", "sl_plus_q:2", "e23.e12", "--trace"});
    CHECK(n.status == kExitOk);
    CHECK(n.out == "1. swap at 0: 1 * e23.e12 -> -q * e13 + q * e12.e23\n-q * e13 + q * e12.e23\n");

    const auto j = nlohmann::json::parse(run({"normalize", "super_demo", "x.x", "--json"}).out);
    CHECK(j["normal_form"] == "1/2 * y");

    const Run p = run({"pbw", "sl_plus_q:2", "--max-len", "2"});
    CHECK(p.status == kExitOk);
    CHECK(p.out.find("count: 10") != std::string::npos);

    const Run a = run({"act", "sl_plus_q:2", "e23.e12"});
    CHECK(a.out == "-q * e13 + q * e12.e23\n");
}

TEST_CASE("cli: counterexample commands") {
    const Run m = run({"member", "tilde_sl4", "e23.e14", "--max-len", "3", "--max-delta", "8"});
    CHECK(m.status == kExitOk);
    CHECK(m.out.rfind("member", 0) == 0);

    const Run nm = run({"member", "sl_plus_q:3", "e23.e14", "--max-len", "3", "--max-delta", "8"});
    CHECK(nm.status == kExitMathFailure);
    CHECK(nm.out.find("not-member-within-bounds") != std::string::npos);

    const Run c = run({"certify", "tilde_sl4", "--max-len", "2"});
    CHECK(c.status == kExitMathFailure);
    CHECK(c.out.find("refuted") != std::string::npos);
    CHECK(run({"certify", "sl_plus_q:3", "--max-len", "2"}).status == kExitOk);

    const Run d = run({"diamond", "tilde_sl4", "--max-delta", "12"});
    CHECK(d.status == kExitMathFailure);
    CHECK(d.out.find("witness (e24, e13, e12)") != std::string::npos);
}

TEST_CASE("cli: specialize and catalog") {
    const Run s = run({"specialize", "sl_plus_q:3", "q=1"});
    CHECK(s.status == kExitOk);
    const TLieSpec back = load_spec_text(s.out);
    CHECK(back.variables().empty());
    CHECK_FALSE(back.has_pseudobracket());

    CHECK(run({"specialize", "sl_plus_q:3", "q=0"}).status == kExitUsage);

    const Run list = run({"catalog", "list"});
    CHECK(list.out.find("tilde_sl4") != std::string::npos);
    const Run dump = run({"catalog", "dump", "Lpq:2x2:neg=1-2"});
    CHECK(same_structure(load_spec_text(dump.out), from_catalog_key("Lpq:2x2:neg=1-2")));
}

TEST_CASE("cli: exit codes") {
    CHECK(run({}).status == kExitUsage);
    CHECK(run({"normalize", "sl_plus_q:2", "e99"}).status == kExitUsage);
    CHECK(run({"normalize", "sl_plus_q:2", "e12 +"}).status == kExitUsage);
    CHECK(run({"normalize", "no_such_key", "e12"}).status == kExitUsage);
    const Run bounds = run({"member", "sl_plus_q:3", "e24.e13.e12", "--max-len", "2", "--max-delta", "20"});
    CHECK(bounds.status == kExitBounds);
    CHECK_FALSE(bounds.err.empty());
}
