#include "tlie/axioms.hpp"

#include <algorithm>

#include "tlie/enveloping.hpp"
#include "tlie/error.hpp"
#include "tlie/symrep.hpp"

namespace tlie {

namespace {

TensorPoly word3(Letter x, Letter y, Letter z) { return TensorPoly::word(Word{x, y, z}); }

Letter size_of(const TLieSpec& spec) { return static_cast<Letter>(spec.dimension()); }

}  // namespace

CheckRecord check_involution(const TLieSpec& spec) {
    Stopwatch clock;
    CheckRecord record;
    record.check = "involution";
    const Letter n = size_of(spec);
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = 0; y < n; ++y) {
            ++record.cases;
            TensorPoly t = TensorPoly::word(Word{x, y});
            TensorPoly d = apply_S(spec, apply_S(spec, t, 0), 0) - t;
            if (!d.is_zero()) record.record_failure({Word{x, y}, d, "S^2 = Id"});
        }
    }
    record.wall_time_ms = clock.elapsed_ms();
    return record;
}

namespace {

TensorPoly multiplicativity_a(const TLieSpec& spec, Letter x, Letter y, Letter z) {
    TensorPoly t = word3(x, y, z);
    return apply_S(spec, apply_bracket(spec, t, 1), 0) -
           apply_bracket(spec, apply_S(spec, apply_S(spec, t, 0), 1), 0);
}

TensorPoly multiplicativity_b(const TLieSpec& spec, Letter x, Letter y, Letter z) {
    TensorPoly t = word3(x, y, z);
    return apply_S(spec, apply_bracket(spec, t, 0), 0) -
           apply_bracket(spec, apply_S(spec, apply_S(spec, t, 1), 0), 1);
}

TensorPoly jacobi_value(const TLieSpec& spec, Letter x, Letter y, Letter z) {
    TensorPoly t = word3(x, y, z);
    TensorPoly s23s12 = apply_S(spec, apply_S(spec, t, 0), 1);
    TensorPoly s12s23 = apply_S(spec, apply_S(spec, t, 1), 0);
    TensorPoly inner = apply_bracket(spec, s12s23, 1) - apply_bracket(spec, s23s12, 0) + apply_bracket(spec, s23s12, 1);
    return apply_bracket(spec, inner, 0);
}

TensorPoly braid_value(const TLieSpec& spec, BraidMap which, const Word& w) {
    auto map = [&](const TensorPoly& t, std::size_t position) {
        return which == BraidMap::S ? apply_S(spec, t, position) : apply_T(spec, t, position);
    };
    TensorPoly t = TensorPoly::word(w);
    return map(map(map(t, 0), 1), 0) - map(map(map(t, 1), 0), 1);
}

// Bracket-grade violations of the pair: summands above eta(x) + eta(y) - 1.
TensorPoly stability_excess(const TLieSpec& spec, Letter x, Letter y) {
    const int bound = spec.grade(x) + spec.grade(y) - 1;
    TensorPoly out;
    for (const auto& [w, c] : spec.bracket(x, y).terms()) {
        if (word_grade(spec, w) > bound) out.add(w, c);
    }
    for (const auto& [w, c] : spec.pseudo(x, y).terms()) {
        if (word_grade(spec, w) > bound) out.add(w, c);
    }
    return out;
}

TensorPoly beta(const TLieSpec& spec, const TensorPoly& a, const TensorPoly& b) { return bracket_of(spec, a, b); }

TensorPoly balanced_first(const TLieSpec& spec, Letter x, Letter y, Letter z) {
    auto X = TensorPoly::letter(x), Y = TensorPoly::letter(y), Z = TensorPoly::letter(z);
    return beta(spec, beta(spec, X, Y), Z) - beta(spec, X, beta(spec, Y, Z)) + spec.q(x, y) * beta(spec, Y, beta(spec, X, Z));
}

TensorPoly balanced_second(const TLieSpec& spec, Letter x, Letter y, Letter z) {
    auto X = TensorPoly::letter(x), Y = TensorPoly::letter(y), Z = TensorPoly::letter(z);
    return beta(spec, Z, beta(spec, X, Y)) - beta(spec, beta(spec, Z, X), Y) + spec.q(x, y) * beta(spec, beta(spec, Z, Y), X);
}

}  // namespace

CheckRecord check_multiplicativity(const TLieSpec& spec) {
    Stopwatch clock;
    CheckRecord record;
    record.check = "multiplicativity";
    const Letter n = size_of(spec);
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = x + 1; y < n; ++y) {
            for (Letter z = y + 1; z < n; ++z) {
                ++record.cases;
                TensorPoly a = multiplicativity_a(spec, x, y, z);
                if (!a.is_zero()) record.record_failure({Word{x, y, z}, a, "a"});
                TensorPoly b = multiplicativity_b(spec, x, y, z);
                if (!b.is_zero()) record.record_failure({Word{x, y, z}, b, "b"});
            }
        }
    }
    record.wall_time_ms = clock.elapsed_ms();
    return record;
}

CheckRecord check_stability(const TLieSpec& spec) {
    Stopwatch clock;
    CheckRecord record;
    record.check = "stability";
    const Letter n = size_of(spec);
    bool exact = true;
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = x; y < n; ++y) {
            ++record.cases;
            TensorPoly excess = stability_excess(spec, x, y);
            if (!excess.is_zero()) record.record_failure({Word{x, y}, excess, "grade bound"});
            const int target = spec.grade(x) + spec.grade(y) - 1;
            for (const auto& [w, c] : spec.bracket(x, y).terms()) {
                if (word_grade(spec, w) != target) exact = false;
            }
        }
    }
    record.notes.push_back(exact ? "bracket is homogeneous: eta([x,y]) = eta(x) + eta(y) - 1 throughout"
                                 : "bracket only satisfies the filtration inequality, not the homogeneous equality");
    record.parameters["homogeneous_bracket"] = exact;
    record.wall_time_ms = clock.elapsed_ms();
    return record;
}

CheckRecord check_antisymmetry(const TLieSpec& spec) {
    Stopwatch clock;
    CheckRecord record;
    record.check = "antisymmetry";
    const Letter n = size_of(spec);
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = 0; y < n; ++y) {
            ++record.cases;
            TensorPoly t = TensorPoly::word(Word{x, y});
            TensorPoly a = apply_bracket(spec, apply_T(spec, t, 0), 0) + apply_bracket(spec, t, 0);
            if (!a.is_zero()) record.record_failure({Word{x, y}, a, "[,]T = -[,]"});
            TensorPoly b = apply_pseudobracket(spec, apply_S(spec, t, 0), 0) + apply_pseudobracket(spec, t, 0);
            if (!b.is_zero()) record.record_failure({Word{x, y}, b, "<,>S = -<,>"});
            TensorPoly c = apply_bracket(spec, apply_pseudobracket(spec, t, 0), 0);
            if (!c.is_zero()) record.record_failure({Word{x, y}, c, "[,]<,> = 0"});
        }
    }
    record.wall_time_ms = clock.elapsed_ms();
    return record;
}

CheckRecord check_jacobi(const TLieSpec& spec) {
    Stopwatch clock;
    CheckRecord record;
    record.check = "jacobi";
    const Letter n = size_of(spec);
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = 0; y < x; ++y) {
            for (Letter z = 0; z < y; ++z) {
                ++record.cases;
                TensorPoly j = jacobi_value(spec, x, y, z);
                if (!j.is_zero()) record.record_failure({Word{x, y, z}, j, ""});
            }
        }
    }
    record.wall_time_ms = clock.elapsed_ms();
    return record;
}

CheckRecord check_braid(const TLieSpec& spec, BraidMap which) {
    Stopwatch clock;
    CheckRecord record;
    record.check = which == BraidMap::S ? "braid-S" : "braid-T";
    const Letter n = size_of(spec);
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = 0; y < n; ++y) {
            for (Letter z = 0; z < n; ++z) {
                if (which == BraidMap::T && !(x > y && y > z)) continue;
                ++record.cases;
                Word w{x, y, z};
                TensorPoly d = braid_value(spec, which, w);
                if (!d.is_zero()) record.record_failure({w, d, ""});
            }
        }
    }
    record.parameters["triples"] = which == BraidMap::S ? "all" : "strictly decreasing";
    record.wall_time_ms = clock.elapsed_ms();
    return record;
}

CheckRecord check_balanced(const TLieSpec& spec) {
    if (spec.has_pseudobracket()) {
        throw Error(ErrorCode::PreconditionViolated, "balanced identities are stated for specs without pseudobracket");
    }
    Stopwatch clock;
    CheckRecord record;
    record.check = "balanced";
    const Letter n = size_of(spec);
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = 0; y < n; ++y) {
            for (Letter z = 0; z < n; ++z) {
                ++record.cases;
                TensorPoly a = balanced_first(spec, x, y, z);
                if (!a.is_zero()) record.record_failure({Word{x, y, z}, a, "first"});
                TensorPoly b = balanced_second(spec, x, y, z);
                if (!b.is_zero()) record.record_failure({Word{x, y, z}, b, "second"});
            }
        }
    }
    record.wall_time_ms = clock.elapsed_ms();
    return record;
}

// ---------------------------------------------------------------- adequacy

int adequacy_grade_bound(const TLieSpec& spec) {
    const Letter n = size_of(spec);
    int best = 0;
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = 0; y < x; ++y) {
            for (Letter z = 0; z < y; ++z) best = std::max(best, spec.grade(x) + spec.grade(y) + spec.grade(z));
        }
    }
    return best;
}

TensorPoly adequacy_difference(const TLieSpec& spec, Letter lambda, Letter mu, Letter gamma) {
    const auto L = TensorPoly::letter(lambda);
    const auto M = TensorPoly::letter(mu);
    const auto G = TensorPoly::letter(gamma);
    const LaurentScalar& q_lm = spec.q(lambda, mu);
    const LaurentScalar& q_lg = spec.q(lambda, gamma);
    const LaurentScalar& q_mg = spec.q(mu, gamma);
    const TensorPoly p_lm = spec.pseudo(lambda, mu);
    const TensorPoly p_lg = spec.pseudo(lambda, gamma);
    const TensorPoly p_mg = spec.pseudo(mu, gamma);
    const TensorPoly b_lm = spec.bracket(lambda, mu);
    const TensorPoly b_lg = spec.bracket(lambda, gamma);
    const TensorPoly b_mg = spec.bracket(mu, gamma);

    TensorPoly lhs = tensor(p_lm, G) - q_lm * bracket_of(spec, M, b_lg);
    TensorPoly rhs = q_mg * q_lg * pseudo_of(spec, G, b_lm);
    rhs += q_mg * q_lg * tensor(G, p_lm);
    rhs += q_mg * tensor(p_lg, M);
    rhs -= q_lm * tensor(M, p_lg);
    rhs += q_mg * tensor(b_lg, M);
    rhs -= q_lm * tensor(M, b_lg);
    rhs += tensor(L, p_mg);
    rhs -= q_lm * q_lg * tensor(p_mg, L);
    rhs -= q_lg * q_lm * pseudo_of(spec, b_mg, L);
    return lhs - rhs;
}

CheckRecord check_adequacy(const TLieSpec& spec, std::optional<int> r_max, AdequacyMethod method) {
    Stopwatch clock;
    CheckRecord record;
    record.check = "adequacy";
    const int bound = adequacy_grade_bound(spec);
    const int r = r_max.value_or(bound);
    record.parameters["r_max"] = r;
    record.parameters["method"] = method == AdequacyMethod::Rewrite ? "rewrite"
                                  : method == AdequacyMethod::Linear ? "linear"
                                                                     : "auto";
    if (r < bound) record.notes.push_back("triples with total grade above r_max = " + std::to_string(r) + " were not examined");

    struct Triple {
        int s;
        Letter lambda, mu, gamma;
    };
    std::vector<Triple> triples;
    const Letter n = size_of(spec);
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = 0; y < x; ++y) {
            for (Letter z = 0; z < y; ++z) {
                int s = spec.grade(x) + spec.grade(y) + spec.grade(z);
                if (s <= r) triples.push_back({s, x, y, z});
            }
        }
    }
    std::stable_sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) { return a.s < b.s; });

    std::unique_ptr<TruncatedIdeal> ideal;
    std::size_t by_rewrite = 0;
    std::size_t by_linear = 0;
    for (const auto& t : triples) {
        ++record.cases;
        TensorPoly d = adequacy_difference(spec, t.lambda, t.mu, t.gamma);
        if (method != AdequacyMethod::Linear && normalize(spec, d).is_zero()) {
            ++by_rewrite;
            continue;
        }
        if (method == AdequacyMethod::Rewrite) {
            throw Error(ErrorCode::Inconclusive, "normal form of the congruence for (" + spec.id(t.lambda) + ", " +
                                                     spec.id(t.mu) + ", " + spec.id(t.gamma) +
                                                     ") does not vanish; the linear method decides it");
        }
        if (!ideal) ideal = std::make_unique<TruncatedIdeal>(spec, 3);
        ideal->extend_to(t.s - 1);
        ++by_linear;
        MembershipResult m = ideal->decide(d);
        if (!m.member) record.record_failure({Word{t.lambda, t.mu, t.gamma}, d, "congruence"});
    }
    record.parameters["triples"] = triples.size();
    record.parameters["decided_by_rewrite"] = by_rewrite;
    record.parameters["decided_by_linear"] = by_linear;
    if (ideal) record.parameters["ideal_generators"] = ideal->generator_count();

    const bool congruence_holds = record.failures == 0;
    CheckRecord diamond = diamond_check(spec, r);
    record.parameters["diamond_cases"] = diamond.cases;
    if (diamond.failures > 0) {
        record.notes.push_back(congruence_holds
                                   ? "congruence holds for every triple, but the diamond check fails; adequacy not established"
                                   : "the diamond check fails as well");
        for (auto& w : diamond.witnesses) {
            w.label = "diamond";
            record.record_failure(std::move(w));
        }
    } else if (congruence_holds) {
        record.notes.push_back("adequate (via Lemma)");
    }
    record.wall_time_ms = clock.elapsed_ms();
    return record;
}

// ---------------------------------------------------------------- verify

std::vector<std::string> axiom_check_names() {
    return {"involution", "multiplicativity", "stability", "antisymmetry", "jacobi", "adequacy", "braid-S"};
}

std::vector<std::string> known_check_names() {
    auto names = axiom_check_names();
    names.push_back("braid-T");
    names.push_back("balanced");
    names.push_back("diamond");
    names.push_back("lemma-c");
    return names;
}

VerificationReport verify(const TLieSpec& spec, const std::vector<std::string>& checks, const VerifyOptions& options) {
    std::vector<std::string> expanded;
    for (const auto& c : checks) {
        if (c == "all") {
            for (const auto& a : axiom_check_names()) expanded.push_back(a);
        } else {
            auto known = known_check_names();
            if (std::find(known.begin(), known.end(), c) == known.end()) {
                throw Error(ErrorCode::UnknownId, "unknown check '" + c + "'");
            }
            expanded.push_back(c);
        }
    }
    VerificationReport report;
    report.spec_name = spec.name();
    for (const auto& c : expanded) {
        if (c == "involution") {
            report.checks.push_back(check_involution(spec));
        } else if (c == "multiplicativity") {
            report.checks.push_back(check_multiplicativity(spec));
        } else if (c == "stability") {
            report.checks.push_back(check_stability(spec));
        } else if (c == "antisymmetry") {
            report.checks.push_back(check_antisymmetry(spec));
        } else if (c == "jacobi") {
            report.checks.push_back(check_jacobi(spec));
        } else if (c == "braid-S") {
            report.checks.push_back(check_braid(spec, BraidMap::S));
        } else if (c == "braid-T") {
            report.checks.push_back(check_braid(spec, BraidMap::T));
        } else if (c == "adequacy" || c == "diamond" || c == "lemma-c") {
            if (!spec.stable()) {
                CheckRecord skipped;
                skipped.check = c;
                skipped.status = CheckStatus::Skipped;
                skipped.notes.push_back("spec is not stable, so rewriting is not well founded");
                report.checks.push_back(skipped);
            } else if (c == "adequacy") {
                report.checks.push_back(check_adequacy(spec, options.r_max, options.method));
            } else if (c == "diamond") {
                report.checks.push_back(diamond_check(spec, options.diamond_delta.value_or(adequacy_grade_bound(spec))));
            } else {
                report.checks.push_back(check_lemma_c(spec, options.lemma_c_bound.value_or(kDefaultLemmaCBound)));
            }
        } else if (c == "balanced") {
            if (spec.has_pseudobracket()) {
                CheckRecord skipped;
                skipped.check = c;
                skipped.status = CheckStatus::Skipped;
                skipped.notes.push_back("balanced identities apply only when the pseudobracket vanishes");
                report.checks.push_back(skipped);
            } else {
                report.checks.push_back(check_balanced(spec));
            }
        }
    }
    return report;
}

TensorPoly reevaluate_witness(const TLieSpec& spec, const std::string& check, const Witness& w) {
    const Word& in = w.inputs;
    auto need = [&](std::size_t k) {
        if (in.size() != k) throw Error(ErrorCode::PreconditionViolated, "witness has the wrong number of inputs");
    };
    if (check == "involution") {
        need(2);
        TensorPoly t = TensorPoly::word(in);
        return apply_S(spec, apply_S(spec, t, 0), 0) - t;
    }
    if (check == "multiplicativity") {
        need(3);
        return w.label == "a" ? multiplicativity_a(spec, in[0], in[1], in[2]) : multiplicativity_b(spec, in[0], in[1], in[2]);
    }
    if (check == "stability") {
        need(2);
        return stability_excess(spec, in[0], in[1]);
    }
    if (check == "antisymmetry") {
        need(2);
        TensorPoly t = TensorPoly::word(in);
        if (w.label == "[,]T = -[,]") return apply_bracket(spec, apply_T(spec, t, 0), 0) + apply_bracket(spec, t, 0);
        if (w.label == "<,>S = -<,>") return apply_pseudobracket(spec, apply_S(spec, t, 0), 0) + apply_pseudobracket(spec, t, 0);
        return apply_bracket(spec, apply_pseudobracket(spec, t, 0), 0);
    }
    if (check == "jacobi") {
        need(3);
        return jacobi_value(spec, in[0], in[1], in[2]);
    }
    if (check == "braid-S" || check == "braid-T") {
        need(3);
        return braid_value(spec, check == "braid-S" ? BraidMap::S : BraidMap::T, in);
    }
    if (check == "balanced") {
        need(3);
        return w.label == "first" ? balanced_first(spec, in[0], in[1], in[2]) : balanced_second(spec, in[0], in[1], in[2]);
    }
    if (check == "diamond" || (check == "adequacy" && w.label == "diamond")) {
        need(3);
        return diamond_discrepancy(spec, in);
    }
    if (check == "adequacy") {
        need(3);
        return adequacy_difference(spec, in[0], in[1], in[2]);
    }
    if (check == "lemma-c") {
        if (w.label == "B") {
            if (in.empty()) throw Error(ErrorCode::PreconditionViolated, "witness has the wrong number of inputs");
            return filtration_excess(spec, in[0], Word(in.begin() + 1, in.end()));
        }
        if (in.size() < 2) throw Error(ErrorCode::PreconditionViolated, "witness has the wrong number of inputs");
        return lemma_c_discrepancy(spec, in[0], in[1], Word(in.begin() + 2, in.end()));
    }
    throw Error(ErrorCode::UnknownId, "unknown check '" + check + "'");
}

}  // namespace tlie
