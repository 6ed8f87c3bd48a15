#include "tlie/core.hpp"

#include <algorithm>
#include <set>

#include "tlie/error.hpp"

namespace tlie {

// ---------------------------------------------------------------- TensorPoly

TensorPoly TensorPoly::word(Word w, const LaurentScalar& coefficient) {
    TensorPoly t;
    t.add(w, coefficient);
    return t;
}

TensorPoly TensorPoly::letter(Letter x, const LaurentScalar& coefficient) {
    return word(Word{x}, coefficient);
}

TensorPoly TensorPoly::scalar(const LaurentScalar& value) {
    return word(Word{}, value);
}

void TensorPoly::add(const Word& w, const LaurentScalar& coefficient) {
    if (coefficient.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentScalar TensorPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentScalar() : it->second;
}

std::size_t TensorPoly::max_length() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

std::size_t TensorPoly::min_length() const {
    return terms_.empty() ? 0 : terms_.begin()->first.size();
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& other) {
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& other) {
    for (const auto& [w, c] : other.terms_) add(w, -c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const LaurentScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

TensorPoly TensorPoly::substitute(const Assignment& values) const {
    TensorPoly out;
    for (const auto& [w, c] : terms_) out.add(w, c.substitute(values));
    return out;
}

TensorPoly tensor(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly out;
    for (const auto& [u, c] : a.terms()) {
        for (const auto& [v, d] : b.terms()) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add(w, c * d);
        }
    }
    return out;
}

// ---------------------------------------------------------------- build_spec

namespace {

std::string pair_name(const RawSpec& raw, Letter x, Letter y) {
    auto name = [&](Letter l) {
        return l < raw.basis.size() ? raw.basis[l].id : "#" + std::to_string(l);
    };
    return "(" + name(x) + ", " + name(y) + ")";
}

void check_letters(const RawSpec& raw, Letter x, Letter y, const char* table) {
    if (x >= raw.basis.size() || y >= raw.basis.size()) {
        throw Error(ErrorCode::UnknownIdInTable, std::string(table) + " entry " + pair_name(raw, x, y) +
                                                     " refers to a basis element that does not exist");
    }
    if (x > y) {
        throw Error(ErrorCode::MisorderedEntry, std::string(table) + " entry " + pair_name(raw, x, y) +
                                                    " must be given for the ordered pair");
    }
}

void check_value(const RawSpec& raw, const TableEntry& e, std::size_t length, const char* table) {
    for (const auto& [w, c] : e.value.terms()) {
        if (w.size() != length) {
            throw Error(ErrorCode::BadTableValue, std::string(table) + " value for " + pair_name(raw, e.x, e.y) +
                                                      " must have tensor degree " + std::to_string(length));
        }
        for (Letter l : w) {
            if (l >= raw.basis.size()) {
                throw Error(ErrorCode::UnknownIdInTable, std::string(table) + " value for " +
                                                             pair_name(raw, e.x, e.y) + " uses an unknown element");
            }
        }
    }
}

}  // namespace

TLieSpec build_spec(const RawSpec& raw) {
    if (raw.variables.size() > kMaxVariables) {
        throw Error(ErrorCode::TooManyVariables, "at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
    TLieSpec spec;
    spec.name_ = raw.name;
    spec.variables_ = raw.variables;
    spec.signs_ = raw.signs;
    spec.note_ = raw.note;
    spec.basis_ = raw.basis;
    const std::size_t n = raw.basis.size();
    if (n > 0xFFFF) throw Error(ErrorCode::InvalidGrade, "basis too large");
    for (std::size_t i = 0; i < n; ++i) {
        const auto& b = raw.basis[i];
        if (b.grade < 1) throw Error(ErrorCode::InvalidGrade, "grade of " + b.id + " must be a positive integer");
        if (!spec.ids_.emplace(b.id, static_cast<Letter>(i)).second) {
            throw Error(ErrorCode::DuplicateId, "basis id " + b.id + " appears twice");
        }
        if (spec.basis_[i].display.empty()) spec.basis_[i].display = b.id;
    }

    spec.q_.assign(n * n, LaurentScalar(1));
    spec.bracket_.assign(n * n, TensorPoly());
    spec.pseudo_.assign(n * n, TensorPoly());

    std::set<std::pair<Letter, Letter>> seen;
    for (const auto& e : raw.sym) {
        check_letters(raw, e.x, e.y, "symmetry");
        if (!seen.emplace(e.x, e.y).second) {
            throw Error(ErrorCode::DuplicateEntry, "symmetry entry " + pair_name(raw, e.x, e.y) + " given twice");
        }
        if (!e.value.is_unit()) {
            throw Error(ErrorCode::NonUnitSymCoefficient, "symmetry coefficient for " + pair_name(raw, e.x, e.y) +
                                                              " is not a unit");
        }
        if (e.x == e.y && !(e.value * e.value).is_one()) {
            throw Error(ErrorCode::BadDiagonal, "diagonal coefficient for " + raw.basis[e.x].id + " must be 1 or -1");
        }
        spec.q_[spec.index(e.x, e.y)] = e.value;
        if (e.x != e.y) spec.q_[spec.index(e.y, e.x)] = e.value.inverse_unit();
    }

    auto fill = [&](const std::vector<TableEntry>& entries, std::vector<TensorPoly>& table, std::size_t length,
                    const char* label) {
        std::set<std::pair<Letter, Letter>> used;
        for (const auto& e : entries) {
            check_letters(raw, e.x, e.y, label);
            check_value(raw, e, length, label);
            if (!used.emplace(e.x, e.y).second) {
                throw Error(ErrorCode::DuplicateEntry, std::string(label) + " entry " + pair_name(raw, e.x, e.y) +
                                                           " given twice");
            }
            if (e.x == e.y && !e.value.is_zero() && spec.q_[spec.index(e.x, e.x)].is_one()) {
                throw Error(ErrorCode::IllegalDiagonalBracket,
                            std::string(label) + " of " + raw.basis[e.x].id + " with itself requires q = -1");
            }
            table[spec.index(e.x, e.y)] = e.value;
            if (e.x != e.y) table[spec.index(e.y, e.x)] = -(spec.q_[spec.index(e.y, e.x)]) * e.value;
        }
    };
    fill(raw.bracket, spec.bracket_, 1, "bracket");
    fill(raw.pseudo, spec.pseudo_, 2, "pseudobracket");

    spec.stable_ = true;
    for (Letter x = 0; x < n && spec.stable_; ++x) {
        for (Letter y = 0; y < n && spec.stable_; ++y) {
            const int bound = spec.grade(x) + spec.grade(y) - 1;
            for (const auto& [w, c] : spec.bracket(x, y).terms()) {
                if (word_grade(spec, w) > bound) spec.stable_ = false;
            }
            for (const auto& [w, c] : spec.pseudo(x, y).terms()) {
                if (word_grade(spec, w) > bound) spec.stable_ = false;
            }
        }
    }
    return spec;
}

int TLieSpec::max_grade() const {
    int best = 0;
    for (const auto& b : basis_) best = std::max(best, b.grade);
    return best;
}

std::optional<Letter> TLieSpec::find(std::string_view id) const {
    auto it = ids_.find(id);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

Letter TLieSpec::letter(std::string_view id) const {
    auto l = find(id);
    if (!l) throw Error(ErrorCode::UnknownId, "no basis element named " + std::string(id));
    return *l;
}

bool TLieSpec::has_pseudobracket() const {
    return std::any_of(pseudo_.begin(), pseudo_.end(), [](const TensorPoly& t) { return !t.is_zero(); });
}

RawSpec TLieSpec::to_raw() const {
    RawSpec raw;
    raw.name = name_;
    raw.variables = variables_;
    raw.signs = signs_;
    raw.note = note_;
    raw.basis = basis_;
    const auto n = static_cast<Letter>(basis_.size());
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = x; y < n; ++y) {
            if (!q(x, y).is_one()) raw.sym.push_back({x, y, q(x, y)});
            if (!bracket(x, y).is_zero()) raw.bracket.push_back({x, y, bracket(x, y)});
            if (!pseudo(x, y).is_zero()) raw.pseudo.push_back({x, y, pseudo(x, y)});
        }
    }
    return raw;
}

bool same_structure(const TLieSpec& a, const TLieSpec& b) {
    if (a.variables_ != b.variables_ || a.basis_.size() != b.basis_.size()) return false;
    for (std::size_t i = 0; i < a.basis_.size(); ++i) {
        if (a.basis_[i].id != b.basis_[i].id || a.basis_[i].grade != b.basis_[i].grade) return false;
    }
    return a.q_ == b.q_ && a.bracket_ == b.bracket_ && a.pseudo_ == b.pseudo_;
}

// ---------------------------------------------------------------- words

int word_grade(const TLieSpec& spec, const Word& w) {
    int total = 0;
    for (Letter l : w) total += spec.grade(l);
    return total;
}

int disorder(const Word& w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] > w[j]) ++count;
        }
    }
    return count;
}

// ---------------------------------------------------------------- structure maps

namespace {

void require_length(const Word& w, std::size_t position) {
    if (w.size() < position + 2) {
        throw Error(ErrorCode::WordTooShort, "word of length " + std::to_string(w.size()) +
                                                 " has no letters at positions " + std::to_string(position) + ", " +
                                                 std::to_string(position + 1));
    }
}

// Replaces the two letters at `position` by each word of `value`.
void splice(TensorPoly& out, const Word& w, std::size_t position, const TensorPoly& value,
            const LaurentScalar& coefficient) {
    for (const auto& [v, c] : value.terms()) {
        Word r;
        r.reserve(w.size() + v.size() - 2);
        r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(position));
        r.insert(r.end(), v.begin(), v.end());
        r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(position + 2), w.end());
        out.add(r, coefficient * c);
    }
}

}  // namespace

TensorPoly apply_S(const TLieSpec& spec, const TensorPoly& t, std::size_t position) {
    TensorPoly out;
    for (const auto& [w, c] : t.terms()) {
        require_length(w, position);
        Word r = w;
        std::swap(r[position], r[position + 1]);
        out.add(r, c * spec.q(w[position], w[position + 1]));
    }
    return out;
}

TensorPoly apply_pseudobracket(const TLieSpec& spec, const TensorPoly& t, std::size_t position) {
    TensorPoly out;
    for (const auto& [w, c] : t.terms()) {
        require_length(w, position);
        splice(out, w, position, spec.pseudo(w[position], w[position + 1]), c);
    }
    return out;
}

TensorPoly apply_T(const TLieSpec& spec, const TensorPoly& t, std::size_t position) {
    return apply_S(spec, t, position) + apply_pseudobracket(spec, t, position);
}

TensorPoly apply_bracket(const TLieSpec& spec, const TensorPoly& t, std::size_t position) {
    TensorPoly out;
    for (const auto& [w, c] : t.terms()) {
        require_length(w, position);
        splice(out, w, position, spec.bracket(w[position], w[position + 1]), c);
    }
    return out;
}

TensorPoly bracket_of(const TLieSpec& spec, const TensorPoly& a, const TensorPoly& b) {
    return apply_bracket(spec, tensor(a, b), 0);
}

TensorPoly pseudo_of(const TLieSpec& spec, const TensorPoly& a, const TensorPoly& b) {
    return apply_pseudobracket(spec, tensor(a, b), 0);
}

// ---------------------------------------------------------------- restrict / specialize

TLieSpec restrict(const TLieSpec& spec, const std::vector<std::string>& ids) {
    std::vector<Letter> kept;
    for (const auto& id : ids) kept.push_back(spec.letter(id));
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    std::vector<int> position(spec.dimension(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) position[kept[i]] = static_cast<int>(i);

    auto remap = [&](const TensorPoly& t, Letter x, Letter y) {
        TensorPoly out;
        for (const auto& [w, c] : t.terms()) {
            Word r;
            for (Letter l : w) {
                if (position[l] < 0) {
                    throw Error(ErrorCode::NotClosed, "the value at (" + spec.id(x) + ", " + spec.id(y) +
                                                          ") involves " + spec.id(l) + ", outside the subset");
                }
                r.push_back(static_cast<Letter>(position[l]));
            }
            out.add(r, c);
        }
        return out;
    };

    RawSpec raw;
    raw.name = spec.name() + "|restricted";
    raw.variables = spec.variables();
    raw.signs = spec.signs();
    raw.note = spec.note();
    for (Letter l : kept) raw.basis.push_back(spec.element(l));
    for (std::size_t i = 0; i < kept.size(); ++i) {
        for (std::size_t j = i; j < kept.size(); ++j) {
            Letter x = kept[i];
            Letter y = kept[j];
            auto a = static_cast<Letter>(i);
            auto b = static_cast<Letter>(j);
            if (!spec.q(x, y).is_one()) raw.sym.push_back({a, b, spec.q(x, y)});
            if (!spec.bracket(x, y).is_zero()) raw.bracket.push_back({a, b, remap(spec.bracket(x, y), x, y)});
            if (!spec.pseudo(x, y).is_zero()) raw.pseudo.push_back({a, b, remap(spec.pseudo(x, y), x, y)});
        }
    }
    return build_spec(raw);
}

TLieSpec specialize(const TLieSpec& spec, const Assignment& values) {
    std::array<int, kMaxVariables> target{};
    target.fill(-1);
    RawSpec raw = spec.to_raw();
    std::vector<std::string> remaining;
    std::string suffix;
    for (std::size_t i = 0; i < spec.variables().size(); ++i) {
        if (values[i]) {
            suffix += (suffix.empty() ? "" : ",") + spec.variables()[i] + "=" + values[i]->get_str();
        } else {
            target[i] = static_cast<int>(remaining.size());
            remaining.push_back(spec.variables()[i]);
        }
    }
    for (std::size_t i = spec.variables().size(); i < kMaxVariables; ++i) target[i] = static_cast<int>(i);
    auto scalar = [&](const LaurentScalar& s) { return remap_variables(s.substitute(values), target); };
    auto poly = [&](const TensorPoly& t) {
        TensorPoly out;
        for (const auto& [w, c] : t.terms()) out.add(w, scalar(c));
        return out;
    };
    for (auto& e : raw.sym) e.value = scalar(e.value);
    for (auto& e : raw.bracket) e.value = poly(e.value);
    for (auto& e : raw.pseudo) e.value = poly(e.value);
    raw.variables = remaining;
    if (!suffix.empty()) raw.name += "@" + suffix;
    return build_spec(raw);
}

// ---------------------------------------------------------------- formatting

std::string format_word(const TLieSpec& spec, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ".";
        out += spec.id(w[i]);
    }
    return out;
}

std::string format_poly(const TLieSpec& spec, const TensorPoly& t) {
    if (t.is_zero()) return "0";
    std::string out;
    const auto& names = spec.variables();
    for (const auto& [w, c] : t.terms()) {
        LaurentScalar coefficient = c;
        bool negative = false;
        if (c.is_unit() && c.terms()[0].coefficient < 0) {
            negative = true;
            coefficient = -c;
        }
        std::string body;
        if (w.empty()) {
            body = format_scalar_factor(coefficient, names);
        } else if (coefficient.is_one()) {
            body = format_word(spec, w);
        } else {
            body = format_scalar_factor(coefficient, names) + " * " + format_word(spec, w);
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

}  // namespace tlie
