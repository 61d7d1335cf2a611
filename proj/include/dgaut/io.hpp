#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dgaut/element.hpp"
#include "dgaut/errors.hpp"
#include "dgaut/graph.hpp"
#include "dgaut/group_table.hpp"
#include "dgaut/presentation.hpp"

// ---------------------------------------------------------------------------
// Text formats. All three are line-oriented; '#' starts a comment and blank
// lines are ignored. Serializers emit a canonical form that parses back to
// the same value bit-for-bit.
//
//   graph (.edges):   "vertex <tok>" declarations, then "<u> <v>" edge lines
//   group (.gtab):    order n, then n rows of n indices; identity is 0
//   algebra (.dga):   "generator <name> <degree>" lines in symbol order,
//                     then "d <name> = <polynomial>" (omitted means zero)
//
// Polynomial syntax: signed terms "c * g1^e1 g2^e2 ...", with c a rational
// "p" or "p/q"; "^1" may be dropped, and a bare monomial means c = 1.
// ---------------------------------------------------------------------------

namespace dgaut {

namespace detail {

inline std::vector<std::string> content_tokens(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

inline ParseError at_line(int lineno, const std::string& what) {
    return ParseError("line " + std::to_string(lineno) + ": " + what);
}

// --- polynomial scanner ---------------------------------------------------

class PolyScanner {
  public:
    explicit PolyScanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    BigInt integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::string name() {
        skip_ws();
        size_t start = pos_;
        auto ok = [&](char c, bool first) {
            unsigned char u = static_cast<unsigned char>(c);
            if (first) return std::isalpha(u) != 0 || c == '_';
            return std::isalnum(u) != 0 || c == '_' || c == ':' || c == '.';
        };
        while (pos_ < text_.size() && ok(text_[pos_], pos_ == start)) ++pos_;
        if (pos_ == start) fail("expected a generator name");
        return std::string(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in polynomial '" +
                         std::string(text_) + "'");
    }

  private:
    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial against a fixed generator table. Factors may appear
/// in any order and repeat; the result is in canonical form.
inline Element<Rational> parse_element(const TablePtr& table, std::string_view text) {
    detail::PolyScanner s(text);
    auto out = Element<Rational>::zero(table);
    if (s.done()) s.fail("empty polynomial");
    bool first = true;
    while (!s.done()) {
        int sign = 1;
        if (s.accept('-'))
            sign = -1;
        else if (s.accept('+')) {
            if (first) s.fail("unexpected leading '+'");
        } else if (!first) {
            s.fail("expected '+' or '-' between terms");
        }
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
            BigInt num = s.integer();
            BigInt den = 1;
            if (s.accept('/')) {
                den = s.integer();
                if (den == 0) s.fail("zero denominator");
            }
            coeff = Rational(num, den);
            have_coeff = true;
        }
        std::vector<Monomial::Factor> factors;
        bool saw_star = s.accept('*');
        if (saw_star && !have_coeff) s.fail("'*' without a coefficient");
        while (std::isalpha(static_cast<unsigned char>(s.peek())) || s.peek() == '_') {
            if (have_coeff && !saw_star) s.fail("expected '*' between coefficient and monomial");
            std::string n = s.name();
            auto g = table->find(n);
            if (!g) s.fail("unknown generator '" + n + "'");
            BigInt e = s.accept('^') ? s.integer() : 1;
            if (e > 1000000) s.fail("exponent too large");
            factors.emplace_back(*g, static_cast<int>(e));
        }
        if (saw_star && factors.empty()) s.fail("'*' without a monomial");
        if (!have_coeff && factors.empty()) s.fail("expected a term");
        auto [ns, mono] = normalize_product(*table, factors);
        out.add_term(std::move(mono), coeff * sign * ns);
        first = false;
    }
    return out;
}

inline std::string serialize_element(const Element<Rational>& e) { return e.str(); }

// --- graphs ----------------------------------------------------------------

inline Graph parse_graph(std::istream& in) {
    Graph g;
    std::string line;
    int lineno = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::content_tokens(line);
        if (toks.empty()) continue;
        try {
            if (toks[0] == "vertex") {
                if (toks.size() != 2) throw detail::at_line(lineno, "expected 'vertex <token>'");
                g.add_vertex(toks[1]);
            } else if (toks.size() == 2) {
                g.add_edge(toks[0], toks[1]);
            } else {
                throw detail::at_line(lineno, "expected '<u> <v>' or 'vertex <token>'");
            }
        } catch (const ValidationError& e) {
            throw detail::at_line(lineno, e.what());
        }
        saw_data = true;
    }
    if (!saw_data) throw ParseError("no graph data in input");
    return g;
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline std::string serialize_graph(const Graph& g) {
    std::string out;
    for (const auto& t : g.tokens()) out += "vertex " + t + "\n";
    for (auto [u, v] : g.edges()) {
        // a leading token "vertex" would read back as a declaration
        if (g.token(u) == "vertex") std::swap(u, v);
        out += g.token(u) + " " + g.token(v) + "\n";
    }
    return out;
}

// --- group tables ----------------------------------------------------------

inline GroupTable parse_group(std::istream& in) {
    std::vector<long long> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (const auto& t : detail::content_tokens(line)) {
            try {
                size_t used = 0;
                long long v = std::stoll(t, &used);
                if (used != t.size()) throw std::invalid_argument(t);
                values.push_back(v);
            } catch (const std::exception&) {
                throw detail::at_line(lineno, "expected an integer, got '" + t + "'");
            }
        }
    }
    if (values.empty()) throw ParseError("no group data in input");
    long long n = values[0];
    if (n < 1) throw ParseError("group order must be at least 1");
    if (static_cast<long long>(values.size()) != 1 + n * n)
        throw ParseError("expected " + std::to_string(n * n) + " table entries, got " +
                         std::to_string(values.size() - 1));
    std::vector<int> entries;
    entries.reserve(n * n);
    for (size_t i = 1; i < values.size(); ++i) {
        if (values[i] < 0 || values[i] >= n)
            throw ParseError("table entry " + std::to_string(values[i]) + " out of range");
        entries.push_back(static_cast<int>(values[i]));
    }
    return GroupTable(static_cast<int>(n), std::move(entries));
}

inline GroupTable parse_group(const std::string& text) {
    std::istringstream in(text);
    return parse_group(in);
}

inline std::string serialize_group(const GroupTable& g) {
    std::string out = std::to_string(g.n) + "\n";
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
            if (j) out += ' ';
            out += std::to_string(g.at(i, j));
        }
        out += '\n';
    }
    return out;
}

// --- presentations ---------------------------------------------------------

inline Presentation parse_presentation(std::istream& in) {
    std::vector<GeneratorInfo> gens;
    std::vector<std::pair<std::string, std::string>> d_lines;  // name, polynomial
    std::string line;
    int lineno = 0;
    std::vector<int> d_linenos;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::content_tokens(line);
        if (toks.empty()) continue;
        if (toks[0] == "generator") {
            if (!d_lines.empty())
                throw detail::at_line(lineno, "generator line after differential lines");
            if (toks.size() != 3)
                throw detail::at_line(lineno, "expected 'generator <name> <degree>'");
            int degree = 0;
            try {
                size_t used = 0;
                degree = std::stoi(toks[2], &used);
                if (used != toks[2].size()) throw std::invalid_argument(toks[2]);
            } catch (const std::exception&) {
                throw detail::at_line(lineno, "bad degree '" + toks[2] + "'");
            }
            gens.push_back({toks[1], degree});
        } else if (toks[0] == "d") {
            // re-split on '=' so polynomials keep their internal spacing
            std::string body = line.substr(0, line.find('#'));
            auto eq = body.find('=');
            if (eq == std::string::npos) throw detail::at_line(lineno, "expected '='");
            std::istringstream head(body.substr(0, eq));
            std::string kw, name, extra;
            head >> kw >> name;
            if (head >> extra || name.empty())
                throw detail::at_line(lineno, "expected 'd <name> = <polynomial>'");
            d_lines.emplace_back(name, body.substr(eq + 1));
            d_linenos.push_back(lineno);
        } else {
            throw detail::at_line(lineno, "expected a 'generator' or 'd' line");
        }
    }
    if (gens.empty()) throw ParseError("no generators in input");

    TablePtr table;
    try {
        table = make_table(std::move(gens));
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    std::vector<Element<Rational>> images(table->size(), Element<Rational>::zero(table));
    std::vector<char> seen(table->size(), 0);
    for (size_t i = 0; i < d_lines.size(); ++i) {
        const auto& [name, poly] = d_lines[i];
        auto g = table->find(name);
        if (!g) throw detail::at_line(d_linenos[i], "unknown generator '" + name + "'");
        if (seen[*g])
            throw detail::at_line(d_linenos[i], "second differential for '" + name + "'");
        seen[*g] = 1;
        try {
            images[*g] = parse_element(table, poly);
        } catch (const ParseError& e) {
            throw detail::at_line(d_linenos[i], e.what());
        }
    }
    return Presentation(table, Derivation(table, std::move(images)));
}

inline Presentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    return parse_presentation(in);
}

inline std::string serialize_presentation(const Presentation& p) {
    std::string out;
    for (int g = 0; g < p.table->size(); ++g)
        out += "generator " + p.table->name(g) + " " + std::to_string(p.table->degree(g)) +
               "\n";
    for (int g = 0; g < p.table->size(); ++g) {
        const auto& img = p.d.image(g);
        if (!img.is_zero()) out += "d " + p.table->name(g) + " = " + img.str() + "\n";
    }
    return out;
}

// --- files -------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IOError("failed writing '" + path + "'");
}

inline Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }
inline GroupTable load_group(const std::string& path) { return parse_group(read_file(path)); }
inline Presentation load_presentation(const std::string& path) {
    return parse_presentation(read_file(path));
}

}  // namespace dgaut
