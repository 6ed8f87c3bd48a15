#include "tlie/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <variant>

#include "tlie/axioms.hpp"
#include "tlie/catalog.hpp"
#include "tlie/enveloping.hpp"
#include "tlie/error.hpp"
#include "tlie/symrep.hpp"
#include "tlie/text.hpp"

namespace tlie {

namespace {

using nlohmann::json;

struct Options {
    bool json = false;
    std::string spec;
    std::string expression;
    std::vector<std::string> checks{"all"};
    std::optional<int> r_max;
    std::string method = "auto";
    std::optional<int> diamond_delta;
    std::optional<int> lemma_c_bound;
    bool trace = false;
    std::size_t max_len = 0;
    int max_delta = 0;
    std::vector<std::string> assignments;
    std::string key;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::BoundsTooSmall:
        case ErrorCode::RecursionBoundExceeded:
        case ErrorCode::Inconclusive:
            return kExitBounds;
        default:
            return kExitUsage;
    }
}

json terms_json(const TLieSpec& spec, const TensorPoly& t) {
    json out = json::array();
    for (const auto& [w, c] : t.terms()) {
        out.push_back({{"word", format_word(spec, w)}, {"coefficient", format_scalar(c, spec.variables())}});
    }
    return out;
}

AdequacyMethod parse_method(const std::string& name) {
    if (name == "rewrite") return AdequacyMethod::Rewrite;
    if (name == "linear") return AdequacyMethod::Linear;
    return AdequacyMethod::Auto;
}

std::string rule_name(RewriteRule rule) { return rule == RewriteRule::Swap ? "swap" : "diagonal"; }

int cmd_verify(const Options& o, std::ostream& out) {
    const TLieSpec spec = resolve_spec(o.spec);
    VerifyOptions options;
    options.r_max = o.r_max;
    options.method = parse_method(o.method);
    options.diamond_delta = o.diamond_delta;
    options.lemma_c_bound = o.lemma_c_bound;
    const VerificationReport report = verify(spec, o.checks, options);
    if (o.json) {
        out << report_json(spec, report).dump(2) << "\n";
    } else {
        out << report_table(spec, report);
        out << (report.all_passed() ? "result: pass\n" : "result: fail\n");
    }
    return report.all_passed() ? kExitOk : kExitMathFailure;
}

int cmd_normalize(const Options& o, std::ostream& out) {
    const TLieSpec spec = resolve_spec(o.spec);
    const TensorPoly input = parse_expression(o.expression, spec);
    RewriteTrace trace;
    const PBWPoly nf = normalize(spec, input, o.trace ? &trace : nullptr);
    if (o.json) {
        json doc{{"spec", spec.name()},
                 {"input", format_poly(spec, input)},
                 {"normal_form", format_poly(spec, nf.poly())},
                 {"terms", terms_json(spec, nf.poly())}};
        if (o.trace) {
            json steps = json::array();
            for (const auto& s : trace.steps) {
                steps.push_back({{"rule", rule_name(s.rule)},
                                 {"position", s.position},
                                 {"word", format_word(spec, s.before)},
                                 {"coefficient", format_scalar(s.coefficient, spec.variables())},
                                 {"replacement", format_poly(spec, s.after)}});
            }
            doc["trace"] = steps;
        }
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    if (o.trace) {
        std::size_t k = 0;
        for (const auto& s : trace.steps) {
            out << ++k << ". " << rule_name(s.rule) << " at " << s.position << ": "
                << format_scalar_factor(s.coefficient, spec.variables()) << " * " << format_word(spec, s.before)
                << " -> " << format_poly(spec, s.after) << "\n";
        }
    }
    out << format_poly(spec, nf.poly()) << "\n";
    return kExitOk;
}

int cmd_pbw(const Options& o, std::ostream& out) {
    const TLieSpec spec = resolve_spec(o.spec);
    const auto monomials = enumerate_pbw(spec, o.max_len);
    if (o.json) {
        json list = json::array();
        for (const auto& m : monomials) list.push_back(format_word(spec, m));
        out << json{{"spec", spec.name()}, {"max_len", o.max_len}, {"count", monomials.size()}, {"monomials", list}}.dump(2)
            << "\n";
        return kExitOk;
    }
    for (const auto& m : monomials) out << format_word(spec, m) << "\n";
    out << "count: " << monomials.size() << "\n";
    return kExitOk;
}

int cmd_diamond(const Options& o, std::ostream& out) {
    const TLieSpec spec = resolve_spec(o.spec);
    VerificationReport report;
    report.spec_name = spec.name();
    report.checks.push_back(diamond_check(spec, o.max_delta));
    if (o.json) {
        out << report_json(spec, report).dump(2) << "\n";
    } else {
        out << report_table(spec, report);
    }
    return report.all_passed() ? kExitOk : kExitMathFailure;
}

int cmd_member(const Options& o, std::ostream& out) {
    const TLieSpec spec = resolve_spec(o.spec);
    const TensorPoly t = parse_expression(o.expression, spec);
    const MembershipResult r = ideal_member_truncated(spec, t, o.max_len, o.max_delta);
    const auto& names = spec.variables();
    if (o.json) {
        json doc{{"spec", spec.name()},
                 {"input", format_poly(spec, t)},
                 {"max_len", o.max_len},
                 {"max_delta", o.max_delta},
                 {"generators", r.generators},
                 {"result", r.member ? "member" : "not-member-within-bounds"}};
        if (r.member) {
            json cert = json::array();
            for (const auto& g : r.certificate) {
                cert.push_back({{"word", format_word(spec, g.word)},
                                {"position", g.position},
                                {"coefficient", format_scalar(g.coefficient, names)}});
            }
            doc["certificate"] = cert;
            doc["denominator"] = format_scalar(r.denominator, names);
            doc["laurent_coefficients"] = r.ring_verified;
        } else {
            doc["remainder"] = format_poly(spec, r.remainder);
        }
        out << doc.dump(2) << "\n";
        return r.member ? kExitOk : kExitMathFailure;
    }
    if (!r.member) {
        out << "not-member-within-bounds\n";
        out << "remainder: " << format_poly(spec, r.remainder) << "\n";
        out << "generators: " << r.generators << "\n";
        return kExitMathFailure;
    }
    out << "member\n";
    out << "denominator: " << format_scalar(r.denominator, names) << "\n";
    out << "certificate (denominator * input = sum of coefficient * R(word @ position)):\n";
    for (const auto& g : r.certificate) {
        out << "  " << format_scalar_factor(g.coefficient, names) << " * R(" << format_word(spec, g.word) << " @ "
            << g.position << ")\n";
    }
    out << "generators: " << r.generators << "\n";
    return kExitOk;
}

int cmd_act(const Options& o, std::ostream& out) {
    const TLieSpec spec = resolve_spec(o.spec);
    const TensorPoly t = parse_expression(o.expression, spec);
    SymmetricAction action(spec);
    const SymPoly value = action.act_tensor(t, SymPoly::scalar(1));
    if (o.json) {
        out << json{{"spec", spec.name()},
                    {"input", format_poly(spec, t)},
                    {"value", format_poly(spec, value)},
                    {"terms", terms_json(spec, value)}}
                   .dump(2)
            << "\n";
    } else {
        out << format_poly(spec, value) << "\n";
    }
    return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
    const TLieSpec spec = resolve_spec(o.spec);
    const IndependenceCertificate c = independence_certificate(spec, o.max_len);
    if (const auto* ok = std::get_if<Certified>(&c)) {
        if (o.json) {
            out << json{{"spec", spec.name()},
                        {"result", "certified"},
                        {"max_len", o.max_len},
                        {"monomials", ok->monomials},
                        {"lemma_c_bound", ok->lemma_c_bound}}
                       .dump(2)
                << "\n";
        } else {
            out << "certified: " << ok->monomials << " PBW monomials of length <= " << o.max_len
                << " are linearly independent (identity checked up to grade " << ok->lemma_c_bound << ")\n";
        }
        return kExitOk;
    }
    const auto& refuted = std::get<Refuted>(c);
    if (o.json) {
        out << json{{"spec", spec.name()},
                    {"result", "refuted"},
                    {"reason", refuted.reason},
                    {"evidence", check_json(spec, refuted.evidence)}}
                   .dump(2)
            << "\n";
    } else {
        VerificationReport report;
        report.spec_name = spec.name();
        report.checks.push_back(refuted.evidence);
        out << "refuted: " << refuted.reason << "\n" << report_table(spec, report);
    }
    return kExitMathFailure;
}

int cmd_specialize(const Options& o, std::ostream& out) {
    const TLieSpec spec = resolve_spec(o.spec);
    Assignment values;
    for (const auto& a : o.assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::SyntaxError, "expected name=value, got '" + a + "'");
        const std::string name = a.substr(0, eq);
        const auto& vars = spec.variables();
        const auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw Error(ErrorCode::UnknownId, "'" + name + "' is not a variable of " + spec.name());
        const LaurentScalar v = parse_scalar(a.substr(eq + 1), {});
        if (!v.is_constant()) throw Error(ErrorCode::SyntaxError, "value of '" + name + "' must be a number");
        values[static_cast<std::size_t>(it - vars.begin())] = *v.constant_value();
    }
    const TLieSpec result = specialize(spec, values);
    if (o.json) {
        out << json{{"spec", result.name()}, {"document", dump_spec(result)}}.dump(2) << "\n";
    } else {
        out << dump_spec(result);
    }
    return kExitOk;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
    const auto keys = catalog_keys();
    if (o.json) {
        out << json{{"keys", keys}}.dump(2) << "\n";
    } else {
        for (const auto& k : keys) out << k << "\n";
    }
    return kExitOk;
}

int cmd_catalog_dump(const Options& o, std::ostream& out) {
    const TLieSpec spec = from_catalog_key(o.key);
    if (o.json) {
        out << json{{"spec", spec.name()}, {"document", dump_spec(spec)}}.dump(2) << "\n";
    } else {
        out << dump_spec(spec);
    }
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Basic T-Lie algebras: axiom checks, PBW normal forms and certificates", "tlie"};
    app.require_subcommand(1);

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("spec", o.spec, "catalog key or spec file")->required();
        sub->add_flag("--json", o.json, "emit a JSON document");
    };

    auto* verify_cmd = app.add_subcommand("verify", "run axiom checks");
    add_spec(verify_cmd);
    verify_cmd->add_option("--checks", o.checks, "comma separated check names, or all")->delimiter(',');
    verify_cmd->add_option("--r-max", o.r_max, "largest triple grade for adequacy");
    verify_cmd->add_option("--method", o.method, "adequacy method")
        ->check(CLI::IsMember({"auto", "rewrite", "linear"}));
    verify_cmd->add_option("--diamond-delta", o.diamond_delta, "grade bound for diamond");
    verify_cmd->add_option("--lemma-c-bound", o.lemma_c_bound, "grade bound for lemma-c");

    auto* normalize_cmd = app.add_subcommand("normalize", "PBW normal form of an expression");
    add_spec(normalize_cmd);
    normalize_cmd->add_option("expr", o.expression, "expression")->required();
    normalize_cmd->add_flag("--trace", o.trace, "print each rewriting step");

    auto* pbw_cmd = app.add_subcommand("pbw", "list PBW monomials");
    add_spec(pbw_cmd);
    pbw_cmd->add_option("--max-len", o.max_len, "largest monomial length")->required();

    auto* diamond_cmd = app.add_subcommand("diamond", "confluence check on overlaps x.y.z");
    add_spec(diamond_cmd);
    diamond_cmd->add_option("--max-delta", o.max_delta, "largest total grade")->required();

    auto* member_cmd = app.add_subcommand("member", "decide membership in the defining ideal within bounds");
    add_spec(member_cmd);
    member_cmd->add_option("expr", o.expression, "expression")->required();
    member_cmd->add_option("--max-len", o.max_len, "largest word length")->required();
    member_cmd->add_option("--max-delta", o.max_delta, "largest total grade")->required();

    auto* act_cmd = app.add_subcommand("act", "act on 1 in the q-symmetric algebra");
    add_spec(act_cmd);
    act_cmd->add_option("expr", o.expression, "expression")->required();

    auto* certify_cmd = app.add_subcommand("certify", "certify linear independence of PBW monomials");
    add_spec(certify_cmd);
    certify_cmd->add_option("--max-len", o.max_len, "largest monomial length")->required();

    auto* specialize_cmd = app.add_subcommand("specialize", "substitute values for variables");
    add_spec(specialize_cmd);
    specialize_cmd->add_option("assignments", o.assignments, "name=value pairs")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "built-in algebras");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog keys");
    list_cmd->add_flag("--json", o.json, "emit a JSON document");
    auto* dump_cmd = catalog_cmd->add_subcommand("dump", "print the spec file of a catalog entry");
    dump_cmd->add_option("key", o.key, "catalog key")->required();
    dump_cmd->add_flag("--json", o.json, "emit a JSON document");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        if (normalize_cmd->parsed()) return cmd_normalize(o, out);
        if (pbw_cmd->parsed()) return cmd_pbw(o, out);
        if (diamond_cmd->parsed()) return cmd_diamond(o, out);
        if (member_cmd->parsed()) return cmd_member(o, out);
        if (act_cmd->parsed()) return cmd_act(o, out);
        if (certify_cmd->parsed()) return cmd_certify(o, out);
        if (specialize_cmd->parsed()) return cmd_specialize(o, out);
        if (list_cmd->parsed()) return cmd_catalog_list(o, out);
        if (dump_cmd->parsed()) return cmd_catalog_dump(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return kExitUsage;
}

}  // namespace tlie
