#include "tlie/enveloping.hpp"

#include <algorithm>
#include <functional>

#include "tlie/error.hpp"

namespace tlie {

DegreeMeasure measure(const TLieSpec& spec, const Word& w) {
    return {word_grade(spec, w), disorder(w)};
}

bool is_pbw_monomial(const TLieSpec& spec, const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) return false;
        if (w[i] == w[i + 1] && !spec.q(w[i], w[i]).is_one()) return false;
    }
    return true;
}

bool reducible_at(const TLieSpec& spec, const Word& w, std::size_t position) {
    if (position + 1 >= w.size()) return false;
    const Letter x = w[position];
    const Letter y = w[position + 1];
    return x > y || (x == y && !spec.q(x, x).is_one());
}

std::optional<std::size_t> leftmost_reducible(const TLieSpec& spec, const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (reducible_at(spec, w, i)) return i;
    }
    return std::nullopt;
}

namespace {

void splice_into(TensorPoly& out, const Word& w, std::size_t position, const TensorPoly& value,
                 const LaurentScalar& coefficient) {
    for (const auto& [v, c] : value.terms()) {
        Word r;
        r.reserve(w.size() + v.size());
        r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(position));
        r.insert(r.end(), v.begin(), v.end());
        r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(position + 2), w.end());
        out.add(r, coefficient * c);
    }
}

void require_stable(const TLieSpec& spec) {
    if (!spec.stable()) {
        throw Error(ErrorCode::NotStable, "spec " + spec.name() + " violates the stability inequality; rewriting may not terminate");
    }
}

}  // namespace

TensorPoly relation_at(const TLieSpec& spec, const Word& w, std::size_t position) {
    if (position + 1 >= w.size()) throw Error(ErrorCode::WordTooShort, "no pair at this position");
    const Letter x = w[position];
    const Letter y = w[position + 1];
    TensorPoly out = TensorPoly::word(w);
    Word swapped = w;
    std::swap(swapped[position], swapped[position + 1]);
    out.add(swapped, -spec.q(x, y));
    splice_into(out, w, position, spec.pseudo(x, y), -1);
    splice_into(out, w, position, spec.bracket(x, y), -1);
    return out;
}

TensorPoly rewrite_at(const TLieSpec& spec, const Word& w, std::size_t position) {
    if (!reducible_at(spec, w, position)) {
        throw Error(ErrorCode::PreconditionViolated, "word is not reducible at position " + std::to_string(position));
    }
    const Letter x = w[position];
    const Letter y = w[position + 1];
    TensorPoly out;
    if (x > y) {
        Word swapped = w;
        std::swap(swapped[position], swapped[position + 1]);
        out.add(swapped, spec.q(x, y));
        splice_into(out, w, position, spec.pseudo(x, y), 1);
        splice_into(out, w, position, spec.bracket(x, y), 1);
    } else {
        // q_{x,x} = -1: the relation reads 2 x.x = <x,x> + [x,x].
        const LaurentScalar half(Rational(1, 2));
        splice_into(out, w, position, spec.pseudo(x, x), half);
        splice_into(out, w, position, spec.bracket(x, x), half);
    }
    return out;
}

PBWPoly PBWPoly::checked(const TLieSpec& spec, TensorPoly t) {
    for (const auto& [w, c] : t.terms()) {
        if (!is_pbw_monomial(spec, w)) {
            throw Error(ErrorCode::PreconditionViolated, format_word(spec, w) + " is not a PBW monomial");
        }
    }
    return PBWPoly(std::move(t));
}

namespace {

struct KeyedWord {
    DegreeMeasure measure;
    Word word;
    auto operator<=>(const KeyedWord&) const = default;
};

KeyedWord keyed(const TLieSpec& spec, const Word& w) {
    return {measure(spec, w), w};
}

using DescendingTerms = std::map<KeyedWord, LaurentScalar, std::greater<>>;

void accumulate(DescendingTerms& terms, KeyedWord key, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

PBWPoly normalize(const TLieSpec& spec, const TensorPoly& t, RewriteTrace* trace) {
    require_stable(spec);
    DescendingTerms pending;
    for (const auto& [w, c] : t.terms()) accumulate(pending, keyed(spec, w), c);
    TensorPoly result;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key().word;
        const LaurentScalar& c = node.mapped();
        auto position = leftmost_reducible(spec, w);
        if (!position) {
            result.add(w, c);
            continue;
        }
        TensorPoly replacement = rewrite_at(spec, w, *position);
        for (const auto& [v, d] : replacement.terms()) accumulate(pending, keyed(spec, v), c * d);
        if (trace) {
            RewriteRule rule = w[*position] == w[*position + 1] ? RewriteRule::Diagonal : RewriteRule::Swap;
            trace->steps.push_back({rule, *position, w, c, std::move(replacement)});
        }
    }
    return PBWPoly(std::move(result));
}

PBWPoly pbw_multiply(const TLieSpec& spec, const PBWPoly& a, const PBWPoly& b) {
    return normalize(spec, tensor(a.poly(), b.poly()));
}

std::vector<Word> enumerate_pbw(const TLieSpec& spec, std::size_t max_len) {
    std::vector<Word> out;
    Word current;
    const auto n = static_cast<Letter>(spec.dimension());
    std::function<void()> visit = [&]() {
        out.push_back(current);
        if (current.size() == max_len) return;
        Letter start = current.empty() ? 0 : current.back();
        for (Letter x = start; x < n; ++x) {
            if (!current.empty() && x == current.back() && !spec.q(x, x).is_one()) continue;
            current.push_back(x);
            visit();
            current.pop_back();
        }
    };
    visit();
    return out;
}

TensorPoly diamond_discrepancy(const TLieSpec& spec, const Word& w) {
    auto step = [&](std::size_t position) {
        if (reducible_at(spec, w, position)) return rewrite_at(spec, w, position);
        return TensorPoly::word(w);
    };
    return normalize(spec, step(0)).poly() - normalize(spec, step(1)).poly();
}

CheckRecord diamond_check(const TLieSpec& spec, int max_delta) {
    Stopwatch clock;
    CheckRecord record;
    record.check = "diamond";
    record.parameters = {{"max_delta", max_delta}};
    require_stable(spec);
    const auto n = static_cast<Letter>(spec.dimension());
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = 0; y <= x; ++y) {
            for (Letter z = 0; z <= y; ++z) {
                Word w{x, y, z};
                if (word_grade(spec, w) > max_delta) continue;
                if (!reducible_at(spec, w, 0) && !reducible_at(spec, w, 1)) continue;
                ++record.cases;
                TensorPoly d = diamond_discrepancy(spec, w);
                if (!d.is_zero()) record.record_failure({w, d, ""});
            }
        }
    }
    record.wall_time_ms = clock.elapsed_ms();
    return record;
}

// ---------------------------------------------------------------- truncated ideal

namespace {

struct Row {
    DescendingTerms terms;
    std::map<std::size_t, LaurentScalar> combination;
};

// r += m * p
void axpy(Row& r, const LaurentScalar& m, const Row& p) {
    if (m.is_zero()) return;
    for (const auto& [k, c] : p.terms) accumulate(r.terms, k, m * c);
    for (const auto& [id, c] : p.combination) {
        auto& slot = r.combination[id];
        slot += m * c;
        if (slot.is_zero()) r.combination.erase(id);
    }
}

void scale(Row& r, const LaurentScalar& a) {
    for (auto& [k, c] : r.terms) c *= a;
    for (auto& [id, c] : r.combination) c *= a;
}

}  // namespace

struct TruncatedIdeal::Impl {
    struct Generator {
        Word word;
        std::size_t position;
    };
    std::vector<Generator> generators;
    std::map<KeyedWord, Row, std::greater<>> pivots;

    // Eliminates the term at `key` from r using the pivot row; returns the
    // factor r was multiplied by (1 when the pivot is monic up to a unit).
    static LaurentScalar eliminate(Row& r, const KeyedWord& key, const Row& pivot) {
        const LaurentScalar b = r.terms.at(key);
        const LaurentScalar& a = pivot.terms.begin()->second;
        if (a.is_unit()) {
            axpy(r, -(b * a.inverse_unit()), pivot);
            return 1;
        }
        scale(r, a);
        axpy(r, -b, pivot);
        return a;
    }

    void insert(Row r) {
        while (!r.terms.empty()) {
            auto pivot = pivots.find(r.terms.begin()->first);
            if (pivot == pivots.end()) break;
            KeyedWord key = pivot->first;
            eliminate(r, key, pivot->second);
        }
        if (r.terms.empty()) return;
        const LaurentScalar& lead = r.terms.begin()->second;
        LaurentScalar unit = lead.is_unit() ? lead : LaurentScalar::monomial(lead.terms().back().coefficient,
                                                                             lead.terms().back().exponents);
        scale(r, unit.inverse_unit());
        KeyedWord key = r.terms.begin()->first;
        pivots.emplace(std::move(key), std::move(r));
    }
};

TruncatedIdeal::TruncatedIdeal(const TLieSpec& spec, std::size_t max_len)
    : spec_(spec), max_len_(max_len), max_delta_(0), impl_(std::make_unique<Impl>()) {
    require_stable(spec);
}

TruncatedIdeal::~TruncatedIdeal() = default;

std::size_t TruncatedIdeal::generator_count() const { return impl_->generators.size(); }
std::size_t TruncatedIdeal::rank() const { return impl_->pivots.size(); }

void TruncatedIdeal::extend_to(int max_delta) {
    if (max_delta <= max_delta_) return;
    struct Pending {
        KeyedWord key;
        std::size_t position;
    };
    std::vector<Pending> fresh;
    const auto n = static_cast<Letter>(spec_.dimension());
    Word current;
    std::function<void(int)> visit = [&](int grade) {
        if (current.size() >= 2 && grade > max_delta_) {
            for (std::size_t i = 0; i + 1 < current.size(); ++i) {
                if (reducible_at(spec_, current, i)) fresh.push_back({keyed(spec_, current), i});
            }
        }
        if (current.size() == max_len_) return;
        for (Letter x = 0; x < n; ++x) {
            int g = grade + spec_.grade(x);
            if (g > max_delta) continue;
            current.push_back(x);
            visit(g);
            current.pop_back();
        }
    };
    visit(0);
    std::sort(fresh.begin(), fresh.end(), [](const Pending& a, const Pending& b) {
        if (a.key != b.key) return a.key < b.key;
        return a.position < b.position;
    });
    for (const auto& p : fresh) {
        const std::size_t id = impl_->generators.size();
        impl_->generators.push_back({p.key.word, p.position});
        Row r;
        const TensorPoly relation = relation_at(spec_, p.key.word, p.position);
        for (const auto& [w, c] : relation.terms()) {
            accumulate(r.terms, keyed(spec_, w), c);
        }
        r.combination[id] = 1;
        impl_->insert(std::move(r));
    }
    max_delta_ = max_delta;
}

MembershipResult TruncatedIdeal::decide(const TensorPoly& t) const {
    MembershipResult result;
    result.generators = impl_->generators.size();
    Row r;
    for (const auto& [w, c] : t.terms()) accumulate(r.terms, keyed(spec_, w), c);
    // Invariant: r.terms = scale * t + sum combination_i * generator_i.
    LaurentScalar total_scale = 1;
    auto it = r.terms.begin();
    while (it != r.terms.end()) {
        auto pivot = impl_->pivots.find(it->first);
        if (pivot == impl_->pivots.end()) {
            ++it;
            continue;
        }
        KeyedWord key = it->first;
        total_scale *= Impl::eliminate(r, key, pivot->second);
        it = r.terms.upper_bound(key);
    }
    if (!r.terms.empty()) {
        for (const auto& [k, c] : r.terms) result.remainder.add(k.word, c);
        return result;
    }
    result.member = true;
    bool ring = true;
    std::vector<GeneratorUse> divided;
    for (const auto& [id, c] : r.combination) {
        const auto& g = impl_->generators[id];
        auto q = exact_divide(-c, total_scale);
        if (!q) {
            ring = false;
        } else {
            divided.push_back({g.word, g.position, *q});
        }
        result.certificate.push_back({g.word, g.position, -c});
    }
    if (ring) {
        result.certificate = std::move(divided);
        result.denominator = 1;
    } else {
        result.denominator = total_scale;
    }
    result.ring_verified = ring;
    return result;
}

MembershipResult ideal_member_truncated(const TLieSpec& spec, const TensorPoly& t, std::size_t max_len, int max_delta) {
    for (const auto& [w, c] : t.terms()) {
        if (w.size() > max_len || word_grade(spec, w) > max_delta) {
            throw Error(ErrorCode::BoundsTooSmall, format_word(spec, w) + " exceeds max_len " + std::to_string(max_len) +
                                                       " / max_delta " + std::to_string(max_delta));
        }
    }
    TruncatedIdeal ideal(spec, max_len);
    ideal.extend_to(max_delta);
    return ideal.decide(t);
}

TensorPoly certificate_sum(const TLieSpec& spec, const std::vector<GeneratorUse>& certificate) {
    TensorPoly out;
    for (const auto& g : certificate) out += relation_at(spec, g.word, g.position) * g.coefficient;
    return out;
}

}  // namespace tlie
