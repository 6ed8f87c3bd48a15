#include "tlie/symrep.hpp"

#include <algorithm>
#include <functional>

#include "tlie/enveloping.hpp"
#include "tlie/error.hpp"

namespace tlie {

namespace {

constexpr std::size_t kMaxDepth = 20000;

Word prepend(Letter x, const Word& w) {
    Word out;
    out.reserve(w.size() + 1);
    out.push_back(x);
    out.insert(out.end(), w.begin(), w.end());
    return out;
}

SymPoly excess_above(const TLieSpec& spec, const SymPoly& t, int bound) {
    SymPoly out;
    for (const auto& [w, c] : t.terms()) {
        if (word_grade(spec, w) > bound) out.add(w, c);
    }
    return out;
}

}  // namespace

bool is_sym_monomial(const TLieSpec& spec, const Word& w) {
    return is_pbw_monomial(spec, w);
}

SymPoly sym_normalize(const TLieSpec& spec, const TensorPoly& t) {
    SymPoly out;
    for (const auto& [w, c] : t.terms()) {
        LaurentScalar coefficient = c;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                if (w[i] > w[j]) coefficient *= spec.q(w[i], w[j]);
            }
        }
        Word sorted = w;
        std::sort(sorted.begin(), sorted.end());
        bool vanishes = false;
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            if (sorted[i] == sorted[i + 1] && !spec.q(sorted[i], sorted[i]).is_one()) vanishes = true;
        }
        if (!vanishes) out.add(sorted, coefficient);
    }
    return out;
}

std::vector<Word> enumerate_sym_monomials(const TLieSpec& spec, int max_grade) {
    std::vector<Word> out;
    Word current;
    const auto n = static_cast<Letter>(spec.dimension());
    std::function<void(int)> visit = [&](int grade) {
        out.push_back(current);
        Letter start = current.empty() ? 0 : current.back();
        for (Letter x = start; x < n; ++x) {
            if (!current.empty() && x == current.back() && !spec.q(x, x).is_one()) continue;
            int g = grade + spec.grade(x);
            if (g > max_grade) continue;
            current.push_back(x);
            visit(g);
            current.pop_back();
        }
    };
    visit(0);
    return out;
}

SymmetricAction::SymmetricAction(const TLieSpec& spec) : spec_(spec) {
    if (!spec.stable()) {
        throw Error(ErrorCode::PreconditionViolated, "the action is defined by recursion on grades and needs a stable spec");
    }
}

const SymPoly& SymmetricAction::act(Letter x, const Word& monomial) {
    auto key = std::make_pair(x, monomial);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    SymPoly value = compute(x, monomial);
    return cache_.emplace(std::move(key), std::move(value)).first->second;
}

SymPoly SymmetricAction::recompute(Letter x, const Word& monomial) {
    return compute(x, monomial);
}

SymPoly SymmetricAction::compute(Letter lambda, const Word& sigma) {
    if (!sigma.empty() && lambda == sigma.front() && !spec_.q(lambda, lambda).is_one()) {
        // z_x^2 = 0 here, and x.x acts as half of <x,x> + [x,x]
        const SymPoly rest = SymPoly::word(Word(sigma.begin() + 1, sigma.end()));
        const TensorPoly square = spec_.pseudo(lambda, lambda) + spec_.bracket(lambda, lambda);
        return LaurentScalar(Rational(1, 2)) * act_tensor(square, rest);
    }
    if (sigma.empty() || lambda <= sigma.front()) {
        return sym_normalize(spec_, TensorPoly::word(prepend(lambda, sigma)));
    }
    struct DepthGuard {
        std::size_t& depth;
        ~DepthGuard() { --depth; }
    } guard{++depth_};
    if (depth_ > kMaxDepth) {
        throw Error(ErrorCode::RecursionBoundExceeded, "action recursion deeper than " + std::to_string(kMaxDepth));
    }
    const Letter mu = sigma.front();
    const Word rest(sigma.begin() + 1, sigma.end());
    const LaurentScalar& q_lm = spec_.q(lambda, mu);

    SymPoly lambda_rest = sym_normalize(spec_, TensorPoly::word(prepend(lambda, rest)));
    SymPoly w = act(lambda, rest) - lambda_rest;

    SymPoly result = q_lm * sym_normalize(spec_, TensorPoly::word(prepend(mu, prepend(lambda, rest))));
    result += q_lm * act(mu, w);
    for (const auto& [ab, xi] : spec_.pseudo(lambda, mu).terms()) {
        SymPoly inner = act(ab[1], rest);
        result += xi * act(ab[0], inner);
    }
    for (const auto& [z, c] : spec_.bracket(lambda, mu).terms()) {
        result += c * act(z[0], rest);
    }

    const int bound = spec_.grade(lambda) + word_grade(spec_, sigma) - 1;
    SymPoly excess = excess_above(spec_, result - sym_normalize(spec_, TensorPoly::word(prepend(lambda, sigma))), bound);
    if (!excess.is_zero()) violations_.push_back({lambda, sigma, excess});
    return result;
}

SymPoly SymmetricAction::act(Letter x, const SymPoly& v) {
    SymPoly out;
    for (const auto& [m, c] : v.terms()) out += c * act(x, m);
    return out;
}

SymPoly SymmetricAction::act_word(const Word& w, const SymPoly& v) {
    SymPoly out = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = act(*it, out);
    return out;
}

SymPoly SymmetricAction::act_tensor(const TensorPoly& t, const SymPoly& v) {
    SymPoly out;
    for (const auto& [w, c] : t.terms()) out += c * act_word(w, v);
    return out;
}

SymPoly lemma_c_discrepancy(SymmetricAction& action, Letter lambda, Letter mu, const Word& monomial) {
    const TLieSpec& spec = action.spec();
    const SymPoly z = SymPoly::word(monomial);
    const SymPoly inner = action.act(mu, monomial);
    SymPoly lhs = action.act(lambda, inner);
    TensorPoly relation = apply_T(spec, TensorPoly::word(Word{lambda, mu}), 0) + spec.bracket(lambda, mu);
    return lhs - action.act_tensor(relation, z);
}

SymPoly lemma_c_discrepancy(const TLieSpec& spec, Letter lambda, Letter mu, const Word& monomial) {
    SymmetricAction action(spec);
    return lemma_c_discrepancy(action, lambda, mu, monomial);
}

SymPoly filtration_excess(const TLieSpec& spec, Letter x, const Word& monomial) {
    SymmetricAction action(spec);
    SymPoly value = action.act(x, monomial) - sym_normalize(spec, TensorPoly::word(prepend(x, monomial)));
    return excess_above(spec, value, spec.grade(x) + word_grade(spec, monomial) - 1);
}

CheckRecord check_lemma_c(const TLieSpec& spec, int max_total_grade) {
    Stopwatch clock;
    CheckRecord record;
    record.check = "lemma-c";
    record.parameters["max_total_grade"] = max_total_grade;
    SymmetricAction action(spec);
    const auto n = static_cast<Letter>(spec.dimension());
    int min_grade = spec.max_grade();
    for (const auto& b : spec.basis()) min_grade = std::min(min_grade, b.grade);
    const auto monomials = enumerate_sym_monomials(spec, max_total_grade - 2 * min_grade);
    for (Letter lambda = 0; lambda < n; ++lambda) {
        for (Letter mu = 0; mu < n; ++mu) {
            const int budget = max_total_grade - spec.grade(lambda) - spec.grade(mu);
            for (const auto& m : monomials) {
                if (word_grade(spec, m) > budget) continue;
                ++record.cases;
                SymPoly d = lemma_c_discrepancy(action, lambda, mu, m);
                if (!d.is_zero()) {
                    Word inputs{lambda, mu};
                    inputs.insert(inputs.end(), m.begin(), m.end());
                    record.record_failure({inputs, d, "C"});
                }
            }
        }
    }
    for (const auto& v : action.filtration_violations()) {
        record.record_failure({prepend(v.letter, v.monomial), v.excess, "B"});
    }
    record.parameters["memoized_values"] = action.cache_size();
    record.parameters["filtration_violations"] = action.filtration_violations().size();
    record.wall_time_ms = clock.elapsed_ms();
    return record;
}

IndependenceCertificate independence_certificate(const TLieSpec& spec, std::size_t max_len) {
    const int bound = static_cast<int>(max_len) * spec.max_grade();
    CheckRecord lemma = check_lemma_c(spec, bound);
    if (!lemma.passed()) {
        return Refuted{"the action on the q-symmetric algebra violates the defining relations", std::move(lemma)};
    }
    SymmetricAction action(spec);
    const SymPoly one = SymPoly::scalar(1);
    Certified out;
    out.lemma_c_bound = bound;
    for (const auto& sigma : enumerate_pbw(spec, max_len)) {
        ++out.monomials;
        SymPoly image = action.act_word(sigma, one);
        if (!(image == SymPoly::word(sigma))) {
            CheckRecord evidence;
            evidence.check = "pbw-image";
            evidence.record_failure({sigma, image - SymPoly::word(sigma), "x_Sigma . 1 = z_Sigma"});
            return Refuted{"a PBW monomial does not act as its symmetric monomial", std::move(evidence)};
        }
    }
    return out;
}

}  // namespace tlie
