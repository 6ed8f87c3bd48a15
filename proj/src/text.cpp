#include "tlie/text.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "tlie/catalog.hpp"
#include "tlie/error.hpp"

namespace tlie {

namespace {

using IdLookup = std::function<std::optional<Letter>(std::string_view)>;

bool is_identifier_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_identifier_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_scalar(const TensorPoly& t) { return t.max_length() == 0; }

LaurentScalar scalar_part(const TensorPoly& t) { return t.coefficient(Word{}); }

class Parser {
public:
    Parser(std::string_view src, IdLookup ids, std::span<const std::string> variables,
           std::span<const SignConstant> signs)
        : src_(src), ids_(std::move(ids)), variables_(variables), signs_(signs) {}

    TensorPoly parse() {
        skip_space();
        if (at_end()) fail(pos_, "empty expression");
        TensorPoly value = sum();
        skip_space();
        if (!at_end()) fail(pos_, std::string("unexpected '") + src_[pos_] + "'");
        return value;
    }

private:
    [[noreturn]] void fail(std::size_t at, const std::string& what) const {
        throw Error(ErrorCode::SyntaxError, "column " + std::to_string(at + 1) + ": " + what);
    }

    bool at_end() const { return pos_ >= src_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    TensorPoly sum() {
        TensorPoly value = product();
        for (;;) {
            if (accept('+')) {
                value += product();
            } else if (accept('-')) {
                value -= product();
            } else {
                return value;
            }
        }
    }

    TensorPoly product() {
        TensorPoly value = unary();
        for (;;) {
            skip_space();
            const std::size_t op_pos = pos_;
            if (accept('*')) {
                TensorPoly rhs = unary();
                if (is_scalar(value)) {
                    value = scalar_part(value) * rhs;
                } else if (is_scalar(rhs)) {
                    value *= scalar_part(rhs);
                } else {
                    fail(op_pos, "'*' needs a scalar operand; use '.' for tensor products");
                }
            } else if (accept('/')) {
                TensorPoly rhs = unary();
                if (!is_scalar(rhs)) fail(op_pos, "divisor must be a scalar");
                value *= scalar_part(rhs).inverse_unit();
            } else if (accept('.')) {
                value = tensor(value, unary());
            } else {
                return value;
            }
        }
    }

    TensorPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    TensorPoly power() {
        TensorPoly base = atom();
        skip_space();
        const std::size_t op_pos = pos_;
        if (!accept('^')) return base;
        const int exponent = exponent_literal();
        if (is_scalar(base)) return TensorPoly::scalar(scalar_part(base).pow(exponent));
        if (exponent < 0) fail(op_pos, "negative power of a non-scalar");
        TensorPoly out = TensorPoly::scalar(1);
        for (int i = 0; i < exponent; ++i) out = tensor(out, base);
        return out;
    }

    int exponent_literal() {
        const bool parenthesized = accept('(');
        int sign = 1;
        if (accept('-')) {
            sign = -1;
        } else {
            accept('+');
        }
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail(start, "expected an integer exponent");
        int value = 0;
        auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec != std::errc()) fail(start, "exponent out of range");
        if (parenthesized && !accept(')')) fail(pos_, "expected ')'");
        return sign * value;
    }

    TensorPoly atom() {
        skip_space();
        if (at_end()) fail(pos_, "unexpected end of input");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            TensorPoly inner = sum();
            if (!accept(')')) fail(pos_, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return TensorPoly::scalar(Rational(std::string(src_.substr(start, pos_ - start))));
        }
        if (is_identifier_start(c)) {
            const std::size_t start = pos_;
            while (!at_end() && is_identifier_char(src_[pos_])) ++pos_;
            return identifier(src_.substr(start, pos_ - start));
        }
        fail(pos_, std::string("unexpected '") + c + "'");
    }

    TensorPoly identifier(std::string_view name) {
        if (ids_) {
            if (auto x = ids_(name)) return TensorPoly::letter(*x);
        }
        for (std::size_t i = 0; i < variables_.size(); ++i) {
            if (variables_[i] == name) return TensorPoly::scalar(LaurentScalar::variable(i));
        }
        for (const auto& s : signs_) {
            if (s.name == name) return TensorPoly::scalar(s.value);
        }
        throw Error(ErrorCode::UnknownId, "'" + std::string(name) + "' is not a basis id, variable or sign");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    IdLookup ids_;
    std::span<const std::string> variables_;
    std::span<const SignConstant> signs_;
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !is_identifier_start(s[0])) return false;
    for (char c : s) {
        if (!is_identifier_char(c)) return false;
    }
    return true;
}

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::BadSpecFile, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

TensorPoly parse_expression(std::string_view src, const TLieSpec& spec) {
    Parser parser(src, [&spec](std::string_view id) { return spec.find(id); }, spec.variables(), spec.signs());
    return parser.parse();
}

LaurentScalar parse_scalar(std::string_view src, std::span<const std::string> variables,
                           std::span<const SignConstant> signs) {
    Parser parser(src, nullptr, variables, signs);
    return scalar_part(parser.parse());
}

RawSpec parse_spec_text(std::string_view text) {
    RawSpec raw;
    enum class Section { None, Meta, Basis, Sym, Bracket, Pseudo };
    Section section = Section::None;
    std::map<std::string, Letter, std::less<>> ids;
    struct Pending {
        std::size_t line;
        Section section;
        std::string x, y, expression;
    };
    std::vector<Pending> entries;

    std::istringstream in{std::string(text)};
    std::string raw_line;
    std::size_t line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        const auto hash = raw_line.find('#');
        std::string line = trim(hash == std::string::npos ? raw_line : raw_line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') bad_line(line_no, "unterminated section header");
            const std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
            if (name == "meta") {
                section = Section::Meta;
            } else if (name == "basis") {
                section = Section::Basis;
            } else if (name == "sym") {
                section = Section::Sym;
            } else if (name == "bracket") {
                section = Section::Bracket;
            } else if (name == "pseudo") {
                section = Section::Pseudo;
            } else {
                bad_line(line_no, "unknown section [" + name + "]");
            }
            continue;
        }
        switch (section) {
            case Section::None:
                bad_line(line_no, "content before the first section");
            case Section::Meta: {
                const auto eq = line.find('=');
                if (eq == std::string::npos) bad_line(line_no, "expected key = value");
                const std::string key = trim(std::string_view(line).substr(0, eq));
                const std::string value = trim(std::string_view(line).substr(eq + 1));
                if (key == "name") {
                    raw.name = value;
                } else if (key == "note") {
                    raw.note = value;
                } else if (key == "variables") {
                    raw.variables = split_list(value);
                    for (const auto& v : raw.variables) {
                        if (!is_identifier(v)) bad_line(line_no, "bad variable name '" + v + "'");
                    }
                } else if (key == "signs") {
                    for (const auto& item : split_list(value)) {
                        const auto e = item.find('=');
                        if (e == std::string::npos) bad_line(line_no, "expected name=value in signs");
                        const std::string sname = item.substr(0, e);
                        const std::string svalue = item.substr(e + 1);
                        if (!is_identifier(sname)) bad_line(line_no, "bad sign name '" + sname + "'");
                        if (svalue != "1" && svalue != "-1" && svalue != "+1") {
                            bad_line(line_no, "sign '" + sname + "' must be 1 or -1");
                        }
                        raw.signs.push_back({sname, svalue == "-1" ? -1 : 1});
                    }
                } else {
                    bad_line(line_no, "unknown meta key '" + key + "'");
                }
                break;
            }
            case Section::Basis: {
                std::istringstream fields(line);
                std::string id, grade_text;
                fields >> id >> grade_text;
                if (!is_identifier(id)) bad_line(line_no, "bad basis id '" + id + "'");
                int grade = 0;
                auto [ptr, ec] = std::from_chars(grade_text.data(), grade_text.data() + grade_text.size(), grade);
                if (grade_text.empty() || ec != std::errc() || ptr != grade_text.data() + grade_text.size()) {
                    bad_line(line_no, "expected an integer grade after '" + id + "'");
                }
                std::string display;
                std::getline(fields, display);
                display = trim(display);
                if (ids.count(id)) throw Error(ErrorCode::DuplicateId, "line " + std::to_string(line_no) + ": '" + id + "'");
                ids.emplace(id, static_cast<Letter>(raw.basis.size()));
                raw.basis.push_back({id, grade, display.empty() ? id : display});
                break;
            }
            case Section::Sym:
            case Section::Bracket:
            case Section::Pseudo: {
                const auto arrow = line.find("->");
                if (arrow == std::string::npos) bad_line(line_no, "expected 'x y -> expression'");
                std::istringstream lhs(line.substr(0, arrow));
                Pending p{line_no, section, {}, {}, trim(std::string_view(line).substr(arrow + 2))};
                std::string extra;
                lhs >> p.x >> p.y;
                if (p.y.empty() || (lhs >> extra)) bad_line(line_no, "expected exactly two ids before '->'");
                entries.push_back(std::move(p));
                break;
            }
        }
    }

    for (const auto& v : raw.variables) {
        if (ids.count(v)) throw Error(ErrorCode::DuplicateId, "'" + v + "' is both a basis id and a variable");
    }
    for (const auto& s : raw.signs) {
        if (ids.count(s.name)) throw Error(ErrorCode::DuplicateId, "'" + s.name + "' is both a basis id and a sign");
    }
    auto lookup = [&ids](std::string_view id) -> std::optional<Letter> {
        auto it = ids.find(id);
        if (it == ids.end()) return std::nullopt;
        return it->second;
    };
    for (const auto& p : entries) {
        const auto x = lookup(p.x);
        const auto y = lookup(p.y);
        if (!x || !y) {
            throw Error(ErrorCode::UnknownIdInTable,
                        "line " + std::to_string(p.line) + ": '" + (x ? p.y : p.x) + "' is not in [basis]");
        }
        TensorPoly value;
        try {
            Parser parser(p.expression, lookup, raw.variables, raw.signs);
            value = parser.parse();
        } catch (const Error& e) {
            throw Error(e.code(), "line " + std::to_string(p.line) + ": " + e.detail());
        }
        if (p.section == Section::Sym) {
            if (!is_scalar(value)) bad_line(p.line, "symmetry entries are scalars");
            raw.sym.push_back({*x, *y, scalar_part(value)});
        } else if (p.section == Section::Bracket) {
            raw.bracket.push_back({*x, *y, value});
        } else {
            raw.pseudo.push_back({*x, *y, value});
        }
    }
    return raw;
}

TLieSpec load_spec_text(std::string_view text) { return build_spec(parse_spec_text(text)); }

TLieSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BadSpecFile, "cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_spec_text(buffer.str());
}

std::string dump_spec(const TLieSpec& spec) {
    const RawSpec raw = spec.to_raw();
    std::ostringstream out;
    out << "[meta]\n";
    out << "name = " << raw.name << "\n";
    if (!raw.variables.empty()) {
        out << "variables =";
        for (std::size_t i = 0; i < raw.variables.size(); ++i) out << (i ? ", " : " ") << raw.variables[i];
        out << "\n";
    }
    if (!raw.signs.empty()) {
        out << "signs =";
        for (std::size_t i = 0; i < raw.signs.size(); ++i) {
            out << (i ? ", " : " ") << raw.signs[i].name << "=" << raw.signs[i].value;
        }
        out << "\n";
    }
    if (!raw.note.empty()) out << "note = " << raw.note << "\n";
    out << "\n[basis]\n";
    for (const auto& b : raw.basis) {
        out << b.id << " " << b.grade;
        if (b.display != b.id) out << " " << b.display;
        out << "\n";
    }
    auto pair = [&](Letter x, Letter y) { return raw.basis[x].id + " " + raw.basis[y].id + " -> "; };
    out << "\n[sym]\n";
    for (const auto& e : raw.sym) out << pair(e.x, e.y) << format_scalar(e.value, raw.variables) << "\n";
    out << "\n[bracket]\n";
    for (const auto& e : raw.bracket) out << pair(e.x, e.y) << format_poly(spec, e.value) << "\n";
    out << "\n[pseudo]\n";
    for (const auto& e : raw.pseudo) out << pair(e.x, e.y) << format_poly(spec, e.value) << "\n";
    return out.str();
}

TLieSpec resolve_spec(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return load_spec_file(arg);
    return from_catalog_key(arg);
}

}  // namespace tlie
