#include "lattice_forge/dsl.hpp"

#include <cctype>

namespace lattice_forge {

Lattice hyperbolic_plane() {
    return Lattice(IntMat{{0, 1}, {1, 0}}, "U");
}

Lattice rank_one(const Int& k) {
    IntMat g(1, 1);
    g.at(0, 0) = k;
    return Lattice(g, "<" + k.get_str() + ">");
}

Lattice ade_lattice(char series, int n) {
    auto chain_gram = [](int m, const std::vector<std::pair<int, int>>& extra) {
        IntMat g(m, m);
        for (int i = 0; i < m; ++i) g.at(i, i) = -2;
        for (const auto& [a, b] : extra) {
            g.at(a, b) = 1;
            g.at(b, a) = 1;
        }
        return g;
    };
    std::vector<std::pair<int, int>> edges;
    switch (series) {
        case 'A':
            if (n < 1) throw domain_error("A_n requires n >= 1");
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            return Lattice(chain_gram(n, edges), "A" + std::to_string(n));
        case 'D':
            // Nodes d1..dn with chain d2-d3-...-dn and d1 attached to d3.
            if (n < 2) throw domain_error("D_n requires n >= 2");
            for (int i = 1; i + 1 < n; ++i) edges.push_back({i, i + 1});
            if (n >= 3) edges.push_back({0, 2});
            return Lattice(chain_gram(n, edges), "D" + std::to_string(n));
        case 'E':
            // Nodes e1..en with chain e2-e3-...-en and e1 attached to e4.
            if (n < 6 || n > 8) throw domain_error("E_n requires n in {6,7,8}");
            for (int i = 1; i + 1 < n; ++i) edges.push_back({i, i + 1});
            edges.push_back({0, 3});
            return Lattice(chain_gram(n, edges), "E" + std::to_string(n));
        default:
            throw domain_error("unknown root lattice series");
    }
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Lattice parse() {
        Lattice l = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return l;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Int integer(bool allow_sign) {
        skip_ws();
        std::size_t start = pos_;
        std::string digits;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            if (s_[pos_] == '-') digits += '-';
            ++pos_;
        }
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits += s_[pos_];
            ++pos_;
        }
        if (digits.empty() || digits == "-") {
            pos_ = start;
            fail("expected integer");
        }
        return Int(digits);
    }

    Lattice expr() {
        std::vector<Lattice> parts{term()};
        while (eat('+')) parts.push_back(term());
        return parts.size() == 1 ? parts[0] : direct_sum(parts);
    }

    Lattice term() {
        Lattice l = atom();
        if (eat('^')) {
            Int n = integer(false);
            if (n < 1) fail("exponent must be >= 1");
            if (n > 64) fail("exponent too large");
            std::vector<Lattice> copies(n.get_ui(), l);
            l = copies.size() == 1 ? l : direct_sum(copies).with_label(
                    l.label() + "^" + n.get_str());
        }
        if (eat('(')) {
            Int k = integer(true);
            if (!eat(')')) fail("expected ')'");
            if (k == 0) fail("rescale factor must be nonzero");
            l = rescale(l, k);
        }
        return l;
    }

    Lattice atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected lattice atom");
        char c = s_[pos_];
        try {
            if (c == 'U') {
                ++pos_;
                return hyperbolic_plane();
            }
            if (c == 'A' || c == 'D' || c == 'E') {
                ++pos_;
                Int n = integer(false);
                if (n > 64) fail("root lattice rank too large");
                return ade_lattice(c, static_cast<int>(n.get_si()));
            }
            if (c == '<') {
                ++pos_;
                Int k = integer(true);
                if (!eat('>')) fail("expected '>'");
                return rank_one(k);
            }
            if (c == '[') {
                ++pos_;
                return bracket_gram();
            }
        } catch (const domain_error& e) {
            fail(e.what());
        }
        fail("expected lattice atom");
    }

    Lattice bracket_gram() {
        std::vector<IVec> rows;
        for (;;) {
            IVec row;
            row.push_back(integer(true));
            while (eat(',')) row.push_back(integer(true));
            rows.push_back(std::move(row));
            if (eat(';')) continue;
            if (eat(']')) break;
            fail("expected ',', ';' or ']'");
        }
        const std::size_t n = rows.size();
        IntMat g(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) fail("Gram matrix must be square");
            for (std::size_t j = 0; j < n; ++j) g.at(i, j) = rows[i][j];
        }
        try {
            return Lattice(g);
        } catch (const domain_error& e) {
            fail(e.what());
        }
    }
};

}  // namespace

Lattice parse_lattice_expr(const std::string& text) {
    Parser p(text);
    Lattice l = p.parse();
    return l.label().empty() ? l.with_label(text) : l;
}

}  // namespace lattice_forge
