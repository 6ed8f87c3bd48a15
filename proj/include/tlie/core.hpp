#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlie/scalar.hpp"

namespace tlie {

// Basis elements are addressed by their position in the ordered basis, so
// comparing letters compares basis elements.
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Finite linear combination of words with Laurent coefficients. Words of
// length 1 represent elements of L itself, the empty word is the unit.
class TensorPoly {
public:
    using Terms = std::map<Word, LaurentScalar, ShortLex>;

    TensorPoly() = default;
    static TensorPoly word(Word w, const LaurentScalar& coefficient = 1);
    static TensorPoly letter(Letter x, const LaurentScalar& coefficient = 1);
    static TensorPoly scalar(const LaurentScalar& value);

    void add(const Word& w, const LaurentScalar& coefficient);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    LaurentScalar coefficient(const Word& w) const;
    std::size_t max_length() const;
    std::size_t min_length() const;

    TensorPoly& operator+=(const TensorPoly& other);
    TensorPoly& operator-=(const TensorPoly& other);
    TensorPoly& operator*=(const LaurentScalar& c);

    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator-(TensorPoly a) { return a *= LaurentScalar(-1); }
    friend TensorPoly operator*(TensorPoly a, const LaurentScalar& c) { return a *= c; }
    friend TensorPoly operator*(const LaurentScalar& c, TensorPoly a) { return a *= c; }
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.terms_ == b.terms_; }

    TensorPoly substitute(const Assignment& values) const;

private:
    Terms terms_;
};

// Concatenation product of the tensor algebra.
TensorPoly tensor(const TensorPoly& a, const TensorPoly& b);

struct BasisElement {
    std::string id;
    int grade = 1;
    std::string display;
};

struct SignConstant {
    std::string name;
    int value = 1;
};

struct SymEntry {
    Letter x = 0;
    Letter y = 0;
    LaurentScalar value;
};

struct TableEntry {
    Letter x = 0;
    Letter y = 0;
    TensorPoly value;
};

// Unvalidated description of a basic T-Lie algebra. Tables are given for
// pairs x <= y in the basis order; missing symmetry entries default to 1 and
// missing bracket entries to 0.
struct RawSpec {
    std::string name;
    std::vector<std::string> variables;
    std::vector<SignConstant> signs;
    std::string note;
    std::vector<BasisElement> basis;
    std::vector<SymEntry> sym;
    std::vector<TableEntry> bracket;
    std::vector<TableEntry> pseudo;
};

class TLieSpec;
TLieSpec build_spec(const RawSpec& raw);

// Validated basic T-Lie algebra. The stored tables are completed to all
// ordered pairs: q_{y,x} = q_{x,y}^{-1}, <y,x> = -q_{y,x} <x,y>,
// [y,x] = -q_{y,x} [x,y].
class TLieSpec {
public:
    const std::string& name() const { return name_; }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<SignConstant>& signs() const { return signs_; }
    const std::string& note() const { return note_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& element(Letter x) const { return basis_.at(x); }
    const std::string& id(Letter x) const { return basis_.at(x).id; }
    int grade(Letter x) const { return basis_[x].grade; }
    int max_grade() const;

    std::optional<Letter> find(std::string_view id) const;
    Letter letter(std::string_view id) const;  // throws UnknownId

    const LaurentScalar& q(Letter x, Letter y) const { return q_[index(x, y)]; }
    const TensorPoly& bracket(Letter x, Letter y) const { return bracket_[index(x, y)]; }
    const TensorPoly& pseudo(Letter x, Letter y) const { return pseudo_[index(x, y)]; }

    bool has_pseudobracket() const;
    // True when every bracket summand and pseudobracket word drops the grade
    // by at least one; required before any rewriting terminates.
    bool stable() const { return stable_; }

    // Tables restricted to x <= y, in canonical order.
    RawSpec to_raw() const;

    void set_name(std::string name) { name_ = std::move(name); }
    void set_note(std::string note) { note_ = std::move(note); }

    // Same basis, grades, variables and tables; names and notes are ignored.
    friend bool same_structure(const TLieSpec& a, const TLieSpec& b);

private:
    friend TLieSpec build_spec(const RawSpec& raw);
    std::size_t index(Letter x, Letter y) const { return static_cast<std::size_t>(x) * basis_.size() + y; }

    std::string name_;
    std::vector<std::string> variables_;
    std::vector<SignConstant> signs_;
    std::string note_;
    std::vector<BasisElement> basis_;
    std::map<std::string, Letter, std::less<>> ids_;
    std::vector<LaurentScalar> q_;
    std::vector<TensorPoly> bracket_;
    std::vector<TensorPoly> pseudo_;
    bool stable_ = false;
};

int word_grade(const TLieSpec& spec, const Word& w);
int disorder(const Word& w);

// Structure maps acting on the letters at `position`, `position + 1`
// (0-based) of every word. Words that are too short raise WordTooShort.
TensorPoly apply_S(const TLieSpec& spec, const TensorPoly& t, std::size_t position);
TensorPoly apply_pseudobracket(const TLieSpec& spec, const TensorPoly& t, std::size_t position);
TensorPoly apply_T(const TLieSpec& spec, const TensorPoly& t, std::size_t position);
TensorPoly apply_bracket(const TLieSpec& spec, const TensorPoly& t, std::size_t position);

// Bilinear extensions to elements of L (length-1 polynomials).
TensorPoly bracket_of(const TLieSpec& spec, const TensorPoly& a, const TensorPoly& b);
TensorPoly pseudo_of(const TLieSpec& spec, const TensorPoly& a, const TensorPoly& b);

// Sub-T-Lie algebra spanned by `ids`, inheriting order and grades.
TLieSpec restrict(const TLieSpec& spec, const std::vector<std::string>& ids);

// Substitutes values for some variables; substituted variables are removed.
TLieSpec specialize(const TLieSpec& spec, const Assignment& values);

std::string format_word(const TLieSpec& spec, const Word& w);
std::string format_poly(const TLieSpec& spec, const TensorPoly& t);

}  // namespace tlie
