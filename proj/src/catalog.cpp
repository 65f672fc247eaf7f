#include "algaudit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "algaudit/errors.hpp"

namespace algaudit {

namespace {

// ---------------------------------------------------------------------------
// Expressions

struct Token {
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
    std::size_t offset;  // 0-based within the parsed text
};

std::vector<Token> lex(std::string_view s, std::size_t line, std::size_t column) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Number, std::string(s.substr(start, i - start)), start});
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Token::Ident, std::string(s.substr(start, i - start)), start});
        } else if (std::string_view("+-*/^()=,").find(c) != std::string_view::npos) {
            out.push_back({Token::Op, std::string(1, c), start});
            ++i;
        } else {
            throw ParseError(line, column + start, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

using IdentLookup = std::function<Scalar(const Token&)>;

class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t line, std::size_t column, IdentLookup lookup)
        : toks_(lex(text, line, column)), line_(line), column_(column), lookup_(std::move(lookup)) {}

    Scalar parse_all() {
        if (peek().kind == Token::End) fail(peek(), "empty expression");
        Scalar v = expr();
        if (peek().kind != Token::End) fail(peek(), "unexpected '" + peek().text + "'");
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool accept(const char* op) {
        if (peek().kind == Token::Op && peek().text == op) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const Token& t, const std::string& msg) const {
        throw ParseError(line_, column_ + t.offset, msg);
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (accept("+")) v += term();
            else if (accept("-")) v -= term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (accept("*")) {
                v *= unary();
            } else if (peek().kind == Token::Op && peek().text == "/") {
                const Token& at = next();
                Scalar d = unary();
                if (d.is_zero()) fail(at, "division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (peek().kind == Token::Op && peek().text == "^") {
            next();
            const Token& e = next();
            if (e.kind != Token::Number) fail(e, "exponent must be a nonnegative integer");
            if (e.text.size() > 3 || std::stoul(e.text) > 255) fail(e, "exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
            if (peek().kind == Token::Op && peek().text == "^") fail(peek(), "chained exponent; use parentheses");
        }
        return base;
    }

    Scalar atom() {
        const Token& t = next();
        switch (t.kind) {
            case Token::Number: return Scalar(Rational::parse(t.text));
            case Token::Ident:
                if (peek().kind == Token::Op && peek().text == "(") fail(t, "unsupported function '" + t.text + "'");
                return lookup_(t);
            case Token::Op:
                if (t.text == "(") {
                    Scalar v = expr();
                    if (!accept(")")) fail(peek(), "expected ')'");
                    return v;
                }
                fail(t, "unexpected '" + t.text + "'");
            case Token::End: fail(t, "unexpected end of expression");
        }
        fail(t, "malformed expression");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_, column_;
    IdentLookup lookup_;
};

IdentLookup space_lookup(const Space& space, std::size_t line, std::size_t column) {
    return [space, line, column](const Token& t) -> Scalar {
        auto idx = space ? space->index_of(t.text) : std::nullopt;
        if (!idx) throw ParseError(line, column + t.offset, "unknown symbol '" + t.text + "'");
        return Scalar(MultiPoly::variable(space, *idx));
    };
}

void collect_identifiers(std::string_view text, std::size_t line, std::size_t column, std::set<std::string>& out) {
    for (const auto& t : lex(text, line, column))
        if (t.kind == Token::Ident) out.insert(t.text);
}

const Space& alpha_space() {
    static const Space s = make_space({kAlpha});
    return s;
}

// Drops every variable the value does not use; constants lose their space.
Scalar restrict_to_alpha(const Scalar& x) {
    if (x.is_constant()) return Scalar(x.constant_value());
    return x.lift(alpha_space());
}

// ---------------------------------------------------------------------------
// Lines and blocks

struct Line {
    std::size_t number;   // 1-based
    std::size_t column;   // 1-based column of `text[0]` in the raw line
    std::string text;     // comment stripped, trimmed
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0, start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::size_t a = 0;
        while (a < raw.size() && std::isspace(static_cast<unsigned char>(raw[a]))) ++a;
        std::size_t b = raw.size();
        while (b > a && std::isspace(static_cast<unsigned char>(raw[b - 1]))) --b;
        if (b > a) out.push_back({number, a + 1, std::string(raw.substr(a, b - a))});
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

struct Word {
    std::string text;
    std::size_t column;
};

std::vector<Word> words(const Line& l) {
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < l.text.size()) {
        while (i < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[i]))) ++i;
        const std::size_t s = i;
        while (i < l.text.size() && !std::isspace(static_cast<unsigned char>(l.text[i]))) ++i;
        if (i > s) out.push_back({l.text.substr(s, i - s), l.column + s});
    }
    return out;
}

std::size_t parse_count(const Word& w, const Line& l, std::size_t lo, std::size_t hi, const char* what) {
    if (w.text.empty() || w.text.size() > 4 ||
        !std::all_of(w.text.begin(), w.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(l.number, w.column, std::string("expected ") + what);
    const std::size_t v = std::stoul(w.text);
    if (v < lo || v > hi)
        throw ParseError(l.number, w.column,
                         std::string(what) + " must be between " + std::to_string(lo) + " and " + std::to_string(hi));
    return v;
}

struct Header {
    std::string kind;  // algebra | pattern | family
    std::string name;
    std::size_t n = 0;
    std::size_t branch = 1;
    Line line;
};

bool is_header(const Line& l) {
    const auto w = words(l);
    return !w.empty() && (w[0].text == "algebra" || w[0].text == "pattern" || w[0].text == "family");
}

Header parse_header(const Line& l) {
    const auto w = words(l);
    Header h;
    h.kind = w[0].text;
    h.line = l;
    const std::size_t end_col = l.column + l.text.size();
    if (w.size() < 2) throw ParseError(l.number, end_col, "expected a name after '" + h.kind + "'");
    h.name = w[1].text;
    if (w.size() < 3 || w[2].text != "dim")
        throw ParseError(l.number, w.size() < 3 ? end_col : w[2].column, "expected 'dim <n>' after the name");
    if (w.size() < 4) throw ParseError(l.number, end_col, "expected a dimension");
    h.n = parse_count(w[3], l, 1, kMaxDim, "dimension");
    std::size_t i = 4;
    if (h.kind == "family" && i < w.size() && w[i].text == "branch") {
        if (i + 1 >= w.size()) throw ParseError(l.number, end_col, "expected a branch number");
        h.branch = parse_count(w[i + 1], l, 1, 99, "branch number");
        i += 2;
    }
    if (i < w.size()) throw ParseError(l.number, w[i].column, "unexpected '" + w[i].text + "' in header");
    return h;
}

// "key: value" lines. Returns the key and the column where the value starts.
std::optional<std::pair<std::string, std::size_t>> directive(const Line& l) {
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string key = l.text.substr(0, colon);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    std::size_t v = colon + 1;
    while (v < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[v]))) ++v;
    return std::make_pair(key, v);
}

struct Cell {
    std::string text;
    std::size_t column;
};

std::vector<Cell> split_cells(const Line& l, std::size_t from) {
    std::vector<Cell> out;
    std::size_t start = from;
    int depth = 0;
    for (std::size_t i = from; i <= l.text.size(); ++i) {
        const char c = i < l.text.size() ? l.text[i] : ',';
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth <= 0) {
            std::size_t a = start, b = i;
            while (a < b && std::isspace(static_cast<unsigned char>(l.text[a]))) ++a;
            while (b > a && std::isspace(static_cast<unsigned char>(l.text[b - 1]))) --b;
            if (a == b) throw ParseError(l.number, l.column + a, "empty matrix entry");
            out.push_back({l.text.substr(a, b - a), l.column + a});
            start = i + 1;
        }
    }
    return out;
}

struct RowLines {
    std::vector<std::pair<Line, std::vector<Cell>>> rows;

    void add(const Line& l, std::size_t value_col, std::size_t n) {
        auto cells = split_cells(l, value_col);
        if (cells.size() != n)
            throw ParseError(l.number, l.column + value_col,
                             "row has " + std::to_string(cells.size()) + " entries, expected " + std::to_string(n));
        if (rows.size() == n) throw ParseError(l.number, l.column, "too many rows for dimension " + std::to_string(n));
        rows.emplace_back(l, std::move(cells));
    }
    void require_complete(const Header& h) const {
        if (rows.size() != h.n)
            throw ParseError(h.line.number, h.line.column,
                             h.kind + " " + h.name + " has " + std::to_string(rows.size()) + " rows, expected " +
                                 std::to_string(h.n));
    }
};

Space space_of(const std::set<std::string>& names) {
    if (names.empty()) return nullptr;
    return make_space(std::vector<std::string>(names.begin(), names.end()));
}

// --- algebra blocks

std::optional<std::size_t> basis_index(const std::string& s) {
    static const std::regex re("e([0-9]+)");
    std::smatch m;
    if (!std::regex_match(s, m, re) || m[1].length() > 3) return std::nullopt;
    return std::stoul(m[1]);
}

AlgebraTable parse_table_block(const Header& h, const std::vector<Line>& body) {
    AlgebraTable a(h.n, h.name);
    std::vector<std::string> names{kAlpha};
    for (std::size_t k = 1; k <= h.n; ++k) names.push_back("e" + std::to_string(k));
    const Space rhs_space = make_space(names);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;

    for (const Line& l : body) {
        const auto eq = l.text.find('=');
        if (eq == std::string::npos) throw ParseError(l.number, l.column, "expected 'e<i>*e<j> = ...'");
        const auto lhs_toks = lex(std::string_view(l.text).substr(0, eq), l.number, l.column);
        auto index_at = [&](const Token& t) {
            auto k = t.kind == Token::Ident ? basis_index(t.text) : std::nullopt;
            if (!k) throw ParseError(l.number, l.column + t.offset, "expected a basis element e<k>");
            if (*k < 1 || *k > h.n)
                throw ParseError(l.number, l.column + t.offset,
                                 "index " + std::to_string(*k) + " out of range 1.." + std::to_string(h.n));
            return *k - 1;
        };
        if (lhs_toks.size() != 4 || lhs_toks[1].kind != Token::Op || lhs_toks[1].text != "*")
            throw ParseError(l.number, l.column, "left side must be e<i>*e<j>");
        const std::size_t i = index_at(lhs_toks[0]);
        const std::size_t j = index_at(lhs_toks[2]);
        if (auto it = seen.find({i, j}); it != seen.end())
            throw ParseError(l.number, l.column,
                             "duplicate product e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) +
                                 " (first given on line " + std::to_string(it->second) + ")");
        seen[{i, j}] = l.number;

        const std::size_t rhs_col = l.column + eq + 1;
        const std::string rhs = l.text.substr(eq + 1);
        IdentLookup lookup = [&](const Token& t) -> Scalar {
            if (t.text == kAlpha) return Scalar(MultiPoly::variable(rhs_space, 0));
            if (auto k = basis_index(t.text)) {
                if (*k < 1 || *k > h.n)
                    throw ParseError(l.number, rhs_col + t.offset,
                                     "index " + std::to_string(*k) + " out of range 1.." + std::to_string(h.n));
                return Scalar(MultiPoly::variable(rhs_space, *k));
            }
            throw ParseError(l.number, rhs_col + t.offset,
                             "unknown symbol '" + t.text + "' (tables may only use alpha)");
        };
        const Scalar v = ExprParser(rhs, l.number, rhs_col, lookup).parse_all().lift(rhs_space);
        const std::size_t value_col = rhs_col + std::min(rhs.find_first_not_of(" \t"), rhs.size());
        for (std::size_t k = 1; k <= h.n; ++k)
            if (v.den().uses(k)) throw ParseError(l.number, value_col, "basis element in a denominator");
        for (const auto& [exps, c] : v.num().terms()) {
            unsigned deg = 0;
            for (std::size_t k = 1; k <= h.n; ++k) deg += exps[k];
            if (deg != 1) throw ParseError(l.number, value_col, "right side must be linear in e1..e" + std::to_string(h.n));
        }
        Element prod = zero_element(h.n);
        for (std::size_t k = 1; k <= h.n; ++k) {
            auto coeffs = v.num().coefficients_in(k);
            auto it = coeffs.find(1);
            if (it == coeffs.end()) continue;
            prod[k - 1] = restrict_to_alpha(Scalar(it->second, v.den()));
        }
        a.set_product(i, j, prod);
    }
    return a;
}

// --- pattern blocks

SymbolicPattern parse_pattern_block(const Header& h, const std::vector<Line>& body) {
    RowLines rows;
    for (const Line& l : body) {
        auto d = directive(l);
        if (!d || d->first != "row") throw ParseError(l.number, l.column, "expected 'row:' in pattern " + h.name);
        rows.add(l, d->second, h.n);
    }
    rows.require_complete(h);
    std::set<std::string> names;
    for (const auto& [l, cells] : rows.rows)
        for (const auto& c : cells) collect_identifiers(c.text, l.number, c.column, names);
    SymbolicPattern p;
    p.name = h.name;
    p.n = h.n;
    p.space = space_of(names);
    p.entries = ScalarMatrix(h.n, h.n);
    for (std::size_t r = 0; r < h.n; ++r) {
        const auto& [l, cells] = rows.rows[r];
        for (std::size_t c = 0; c < h.n; ++c)
            p.entries(r, c) = ExprParser(cells[c].text, l.number, cells[c].column, space_lookup(p.space, l.number, cells[c].column))
                                  .parse_all();
    }
    return p;
}

// --- family blocks

MultiPoly polynomial_of(const Scalar& v, const Line& l, std::size_t col, const char* what) {
    if (!v.is_polynomial()) throw ParseError(l.number, col, std::string(what) + " must be a polynomial");
    return v.num().scaled(v.den().constant_value().inverse());
}

ParametricMatrixFamily parse_family_block(const Header& h, const std::vector<Line>& body) {
    ParametricMatrixFamily f;
    f.name = h.name;
    f.branch = h.branch;
    f.n = h.n;
    RowLines rows;
    std::vector<std::pair<Line, std::size_t>> nonzero, require;
    for (const Line& l : body) {
        auto d = directive(l);
        if (!d) throw ParseError(l.number, l.column, "expected 'key: value' in family " + h.name);
        const auto& [key, vcol] = *d;
        const std::string value = l.text.substr(vcol);
        if (key == "row") {
            rows.add(l, vcol, h.n);
        } else if (key == "nonzero") {
            if (value.empty()) throw ParseError(l.number, l.column + vcol, "empty condition");
            nonzero.emplace_back(l, vcol);
        } else if (key == "require") {
            if (value.empty()) throw ParseError(l.number, l.column + vcol, "empty condition");
            require.emplace_back(l, vcol);
        } else if (key == "unverifiable") {
            if (value.empty()) throw ParseError(l.number, l.column + vcol, "expected a reason");
            f.unverifiable = value;
        } else if (key == "note") {
            f.notes.push_back(value);
        } else {
            throw ParseError(l.number, l.column, "unknown key '" + key + "'");
        }
    }
    rows.require_complete(h);
    for (const auto& [l, cells] : rows.rows) {
        std::string raw;
        for (const auto& c : cells) raw += (raw.empty() ? "" : ", ") + c.text;
        f.raw_rows.push_back(raw);
    }

    std::set<std::string> names;
    if (!f.unverifiable)
        for (const auto& [l, cells] : rows.rows)
            for (const auto& c : cells) collect_identifiers(c.text, l.number, c.column, names);
    for (const auto& [l, vcol] : nonzero) collect_identifiers(l.text.substr(vcol), l.number, l.column + vcol, names);
    for (const auto& [l, vcol] : require) collect_identifiers(l.text.substr(vcol), l.number, l.column + vcol, names);
    f.space = space_of(names);

    auto parse_at = [&](const std::string& text, const Line& l, std::size_t col) {
        return ExprParser(text, l.number, col, space_lookup(f.space, l.number, col)).parse_all();
    };
    if (!f.unverifiable) {
        f.entries = ScalarMatrix(h.n, h.n);
        for (std::size_t r = 0; r < h.n; ++r) {
            const auto& [l, cells] = rows.rows[r];
            for (std::size_t c = 0; c < h.n; ++c) f.entries(r, c) = parse_at(cells[c].text, l, cells[c].column);
        }
    }
    for (const auto& [l, vcol] : nonzero) {
        const std::size_t col = l.column + vcol;
        const Scalar v = parse_at(l.text.substr(vcol), l, col);
        if (v.is_zero()) throw ParseError(l.number, col, "condition is identically zero");
        f.nonvanishing.push_back(polynomial_of(v, l, col, "nonzero condition"));
    }
    for (const auto& [l, vcol] : require) {
        const std::string value = l.text.substr(vcol);
        const auto eq = value.find('=');
        const std::size_t col = l.column + vcol;
        if (eq == std::string::npos) throw ParseError(l.number, col, "expected '<poly> = <poly>'");
        const Scalar lhs = parse_at(value.substr(0, eq), l, col);
        const Scalar rhs = parse_at(value.substr(eq + 1), l, col + eq + 1);
        f.equations.push_back(polynomial_of(lhs - rhs, l, col, "relation"));
    }
    if (f.has_entries()) {
        try {
            check_family_well_formed(f);
        } catch (const InvalidInput& e) {
            throw ParseError(h.line.number, h.line.column, e.what());
        }
    }
    return f;
}

template <class Fn>
void for_each_block(std::string_view text, Fn&& fn) {
    const auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size()) {
        if (!is_header(lines[i]))
            throw ParseError(lines[i].number, lines[i].column, "expected 'algebra', 'pattern' or 'family' header");
        Header h = parse_header(lines[i]);
        std::vector<Line> body;
        ++i;
        while (i < lines.size() && !is_header(lines[i])) body.push_back(lines[i++]);
        fn(h, body);
    }
}

std::string coefficient_text(const Scalar& c) {
    if (c.is_constant()) return c.constant_value().str();
    return "(" + c.str() + ")";
}

std::string symbol_entry_text(const Scalar& x) { return x.str(); }

}  // namespace

// ---------------------------------------------------------------------------

Scalar parse_scalar(std::string_view text, const Space& space, std::size_t line, std::size_t column) {
    return ExprParser(text, line, column, space_lookup(space, line, column)).parse_all();
}

CatalogText parse_catalog_text(std::string_view text) {
    CatalogText out;
    for_each_block(text, [&](const Header& h, const std::vector<Line>& body) {
        if (h.kind == "algebra") out.tables.push_back(parse_table_block(h, body));
        else if (h.kind == "pattern") out.patterns.push_back(parse_pattern_block(h, body));
        else out.families.push_back(parse_family_block(h, body));
    });
    return out;
}

AlgebraTable parse_table(std::string_view text) {
    std::optional<AlgebraTable> out;
    bool any = false;
    for_each_block(text, [&](const Header& h, const std::vector<Line>& body) {
        any = true;
        if (h.kind != "algebra") throw ParseError(h.line.number, h.line.column, "expected an 'algebra' header");
        if (out) throw ParseError(h.line.number, h.line.column, "more than one algebra in the input");
        out = parse_table_block(h, body);
    });
    if (!any) throw ParseError(1, 1, "empty input; expected 'algebra <name> dim <n>'");
    return *out;
}

std::vector<SymbolicPattern> parse_patterns(std::string_view text) {
    std::vector<SymbolicPattern> out;
    for_each_block(text, [&](const Header& h, const std::vector<Line>& body) {
        if (h.kind != "pattern") throw ParseError(h.line.number, h.line.column, "expected a 'pattern' header");
        out.push_back(parse_pattern_block(h, body));
    });
    if (out.empty()) throw ParseError(1, 1, "empty input; expected 'pattern <name> dim <n>'");
    return out;
}

std::vector<ParametricMatrixFamily> parse_families(std::string_view text) {
    std::vector<ParametricMatrixFamily> out;
    for_each_block(text, [&](const Header& h, const std::vector<Line>& body) {
        if (h.kind != "family") throw ParseError(h.line.number, h.line.column, "expected a 'family' header");
        out.push_back(parse_family_block(h, body));
    });
    if (out.empty()) throw ParseError(1, 1, "empty input; expected 'family <name> dim <n>'");
    return out;
}

std::string serialize_table(const AlgebraTable& a) {
    std::ostringstream os;
    os << "algebra " << a.name() << " dim " << a.dim() << "\n";
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a.product_is_zero(i, j)) continue;
            os << "e" << i + 1 << "*e" << j + 1 << " =";
            bool first = true;
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& g = a.gamma(i, j, k);
                if (g.is_zero()) continue;
                os << (first ? " " : " + ");
                if (!g.is_one()) os << coefficient_text(g) << "*";
                os << "e" << k + 1;
                first = false;
            }
            os << "\n";
        }
    return os.str();
}

std::string serialize_pattern(const SymbolicPattern& p) {
    std::ostringstream os;
    os << "pattern " << p.name << " dim " << p.n << "\n";
    for (std::size_t r = 0; r < p.n; ++r) {
        os << "row:";
        for (std::size_t c = 0; c < p.n; ++c) os << (c ? ", " : " ") << symbol_entry_text(p.entries(r, c));
        os << "\n";
    }
    return os.str();
}

std::string serialize_family(const ParametricMatrixFamily& f) {
    std::ostringstream os;
    os << "family " << f.name << " dim " << f.n;
    if (f.branch != 1) os << " branch " << f.branch;
    os << "\n";
    if (f.has_entries()) {
        for (std::size_t r = 0; r < f.n; ++r) {
            os << "row:";
            for (std::size_t c = 0; c < f.n; ++c) os << (c ? ", " : " ") << f.entries(r, c).str();
            os << "\n";
        }
    } else {
        for (const auto& raw : f.raw_rows) os << "row: " << raw << "\n";
    }
    for (const auto& p : f.nonvanishing) os << "nonzero: " << p.str() << "\n";
    for (const auto& p : f.equations) os << "require: " << p.str() << " = 0\n";
    if (f.unverifiable) os << "unverifiable: " << *f.unverifiable << "\n";
    for (const auto& note : f.notes) os << "note: " << note << "\n";
    return os.str();
}

std::string serialize_entry(const CatalogEntry& e) {
    std::string out = "# " + e.name + "\n";
    if (e.table) out += serialize_table(*e.table);
    if (e.expected_der) out += serialize_pattern(*e.expected_der);
    if (e.expected_aut)
        for (const auto& f : *e.expected_aut) out += serialize_family(f);
    return out;
}

std::vector<std::string> SymbolicPattern::symbols() const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < space_size(space); ++v)
        if (space->name(v) != kAlpha) out.push_back(space->name(v));
    return out;
}

ScalarSubspace pattern_to_subspace(const SymbolicPattern& p) {
    const std::size_t n = p.n;
    std::vector<std::size_t> sym;
    for (std::size_t v = 0; v < space_size(p.space); ++v)
        if (p.space->name(v) != kAlpha) sym.push_back(v);

    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Scalar& x = p.entries(r, c);
            auto bad = [&](const std::string& why) {
                throw InvalidInput("pattern " + p.name + " entry (" + std::to_string(r + 1) + "," +
                                   std::to_string(c + 1) + ") " + x.str() + ": " + why);
            };
            for (std::size_t v : sym)
                if (x.den().uses(v)) bad("symbol in a denominator");
            for (const auto& [exps, coef] : x.num().terms()) {
                unsigned deg = 0;
                for (std::size_t v : sym) deg += exps[v];
                if (deg != 1) bad(deg == 0 ? "constant term" : "nonlinear term");
            }
        }

    std::vector<std::vector<Scalar>> vectors;
    for (std::size_t v : sym) {
        std::vector<Scalar> vec(n * n, Scalar(0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const Scalar& x = p.entries(r, c);
                auto coeffs = x.num().coefficients_in(v);
                auto it = coeffs.find(1);
                if (it == coeffs.end()) continue;
                vec[c * n + r] = restrict_to_alpha(Scalar(it->second, x.den()));
            }
        vectors.push_back(std::move(vec));
    }
    return ScalarSubspace::span(n * n, vectors);
}

std::vector<std::string> pattern_anomalies(const SymbolicPattern& p) {
    std::vector<std::string> out;
    static const std::regex re("[a-z]+([1-9])([1-9])");
    for (std::size_t v = 0; v < space_size(p.space); ++v) {
        const std::string& name = p.space->name(v);
        std::smatch m;
        if (!std::regex_match(name, m, re)) continue;
        const std::size_t hr = std::stoul(m[1]) - 1, hc = std::stoul(m[2]) - 1;
        bool home = hr < p.n && hc < p.n && p.entries(hr, hc).num().uses(v);
        if (!home) out.push_back(name + " never occurs at (" + m[1].str() + "," + m[2].str() + ")");
        for (std::size_t r = 0; r < p.n; ++r) {
            // Bare occurrences c*name; equal coefficients twice in one row.
            std::map<std::string, std::size_t> seen;
            for (std::size_t c = 0; c < p.n; ++c) {
                const Scalar& x = p.entries(r, c);
                if (!x.is_polynomial() || x.num().term_count() != 1 || x.num().variables_used() != std::vector<std::size_t>{v})
                    continue;
                if (++seen[x.str()] == 2)
                    out.push_back(name + " repeated as " + x.str() + " in row " + std::to_string(r + 1));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    const std::pair<int, int> counts[] = {{2, 5}, {3, 12}, {4, 46}};
    for (auto [n, k] : counts)
        for (int i = 1; i <= k; ++i) out.push_back("As_" + std::to_string(n) + "^" + std::to_string(i));
    return out;
}

std::string describe(const CatalogEntry& e) {
    std::vector<std::string> parts;
    if (e.table) parts.push_back("table stated in a worked example");
    if (e.expected_der) parts.push_back("printed derivation pattern");
    if (e.expected_aut) parts.push_back("printed automorphism family");
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

}  // namespace

void merge_catalog(std::vector<CatalogEntry>& entries, const CatalogText& text, const std::string& provenance) {
    auto slot = [&](const std::string& name) -> CatalogEntry& {
        for (auto& e : entries)
            if (e.name == name) return e;
        entries.push_back(CatalogEntry{name, {}, {}, {}, {}});
        return entries.back();
    };
    std::set<std::string> touched, fams_reset;
    for (const auto& t : text.tables) {
        CatalogEntry& e = slot(t.name());
        e.table = t;
        touched.insert(e.name);
    }
    for (const auto& p : text.patterns) {
        CatalogEntry& e = slot(p.name);
        e.expected_der = p;
        touched.insert(e.name);
    }
    for (const auto& f : text.families) {
        CatalogEntry& e = slot(f.name);
        if (fams_reset.insert(f.name).second) e.expected_aut.emplace();
        e.expected_aut->push_back(f);
        touched.insert(e.name);
    }
    for (auto& e : entries)
        if (touched.count(e.name)) e.provenance = provenance.empty() ? describe(e) : provenance;
}

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        std::vector<CatalogEntry> entries;
        for (const auto& name : builtin_names()) entries.push_back(CatalogEntry{name, {}, {}, {}, {}});
        merge_catalog(entries, parse_catalog_text(embedded_catalog_text()), "");
        return entries;
    }();
    return catalog;
}

std::vector<CatalogEntry> load_catalog(const std::optional<std::filesystem::path>& extra_dir) {
    std::vector<CatalogEntry> entries = builtin_catalog();
    if (!extra_dir) return entries;
    namespace fs = std::filesystem;
    if (!fs::is_directory(*extra_dir)) throw InvalidInput("extra catalog directory not found: " + extra_dir->string());
    std::vector<fs::path> files;
    for (const auto& de : fs::directory_iterator(*extra_dir)) {
        const auto ext = de.path().extension().string();
        if (de.is_regular_file() && (ext == ".alg" || ext == ".pat" || ext == ".fam")) files.push_back(de.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        CatalogText text;
        try {
            text = parse_catalog_text(ss.str());
        } catch (const ParseError& e) {
            throw ParseError(e.line(), e.column(), path.filename().string() + ": " + e.message());
        }
        merge_catalog(entries, text, "user file " + path.filename().string());
    }
    return entries;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, std::string_view name) {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace algaudit
