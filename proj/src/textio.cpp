#include "calex/textio.hpp"

#include <cctype>
#include <sstream>

#include "calex/errors.hpp"

namespace calex {

// ----------------------------------------------------------- poly printing

std::string poly_to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Int c = p.coeff(k);
        if (c == 0) continue;
        bool first = out.empty();
        if (!first) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Int a = abs(c);
        if (a != 1 || k == 0) out += a.get_str();
        if (k > 0) {
            if (a != 1) out += "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::string ratpoly_to_string(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(k);
        if (c == 0) continue;
        bool first = out.empty();
        if (!first) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Rat a = abs(c);
        if (a != 1 || k == 0) out += a.get_str();
        if (k > 0) {
            if (a != 1) out += "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::string laurent_to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.highest_exp(); k >= p.lowest_exp(); --k) {
        Int c = p.coeff(k);
        if (c == 0) continue;
        bool first = out.empty();
        if (!first) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Int a = abs(c);
        if (a != 1 || k == 0) out += a.get_str();
        if (k != 0) {
            if (a != 1) out += "*";
            out += "t";
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

// ------------------------------------------------------------ poly parsing

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    IntPoly run() {
        IntPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("polynomial: " + msg, 1, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool starts_factor() {
        char c = peek();
        return c == '(' || c == 't' || std::isdigit(static_cast<unsigned char>(c));
    }

    IntPoly expr() {
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            ++pos_;
            sign = c == '-' ? -1 : 1;
        }
        IntPoly acc = term().scaled(sign);
        for (;;) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                IntPoly t = term();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    IntPoly term() {
        IntPoly acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    IntPoly factor() {
        IntPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("exponent must be a nonnegative integer");
            unsigned long e = std::stoul(number());
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    IntPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            IntPoly p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == 't') {
            ++pos_;
            return IntPoly::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return IntPoly::constant(Int(number(), 10));
        fail("expected '(', 't' or an integer");
    }

    std::string number() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return s_.substr(start, pos_ - start);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(const std::string& text) { return PolyParser(text).run(); }

// ------------------------------------------------------------ words

std::string word_to_string(const Word& w) {
    std::string out;
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out += " ";
        out += "x" + std::to_string(l.gen);
        if (l.exp != 1) out += "^" + std::to_string(l.exp);
    }
    return out;
}

std::string relation_to_string(const ConjRelation& r) {
    std::string out = "x" + std::to_string(r.left) + " =";
    // Emit the sandwich w^-1 xj w token by token, without merging across the
    // boundaries; the parser recovers the exact conjugator this way.
    auto emit = [&out](const Word& w) {
        for (const Letter& l : w.letters()) {
            out += " x" + std::to_string(l.gen);
            if (l.exp != 1) out += "^" + std::to_string(l.exp);
        }
    };
    emit(r.conjugator.inverse());
    out += " x" + std::to_string(r.right);
    emit(r.conjugator);
    return out;
}

std::string presentation_to_string(const CPresentation& g) {
    std::string out = "cgroup m=" + std::to_string(g.num_generators());
    for (const ConjRelation& r : g.relations()) out += "\n" + relation_to_string(r);
    return out;
}

// ------------------------------------------------- presentation parsing

namespace {

struct Tok {
    std::string text;
    int column;
};

std::vector<Tok> split_tokens(const std::string& line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

Letter parse_letter_token(const Tok& tok, int line_no, int m) {
    const std::string& s = tok.text;
    if (s.size() < 2 || s[0] != 'x')
        throw ParseError("expected a generator token like x2 or x1^-1", line_no, tok.column);
    size_t i = 1;
    size_t gen_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == gen_start) throw ParseError("missing generator index", line_no, tok.column);
    int gen = std::stoi(s.substr(gen_start, i - gen_start));
    int exp = 1;
    if (i < s.size()) {
        if (s[i] != '^') throw ParseError("malformed generator token", line_no, tok.column);
        ++i;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        size_t e_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (e_start == i || i != s.size())
            throw ParseError("malformed exponent", line_no, tok.column);
        exp = std::stoi(s.substr(e_start, i - e_start));
        if (neg) exp = -exp;
        if (exp == 0) throw ParseError("zero exponent is not allowed", line_no, tok.column);
    }
    if (gen < 1 || gen > m)
        throw ParseError("generator index out of range 1..m", line_no, tok.column);
    return {gen, exp};
}

/// Splits an atom list as w^-1 xj w; requires |atoms| odd, a positive middle
/// letter and mirrored halves.
std::optional<ConjRelation> conjugation_shape(const std::vector<Letter>& atoms, int left) {
    if (atoms.size() % 2 == 0) return std::nullopt;
    size_t p = atoms.size() / 2;
    const Letter& mid = atoms[p];
    if (mid.exp != 1) return std::nullopt;
    for (size_t a = 0; a < p; ++a) {
        const Letter& x = atoms[a];
        const Letter& y = atoms[atoms.size() - 1 - a];
        if (x.gen != y.gen || x.exp != -y.exp) return std::nullopt;
    }
    Word w;
    for (size_t a = p + 1; a < atoms.size(); ++a) w.append(atoms[a].gen, atoms[a].exp);
    return ConjRelation{left, mid.gen, w};
}

}  // namespace

CPresentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int m = -1;
    std::vector<ConjRelation> rels;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::vector<Tok> toks = split_tokens(line);
        if (toks.empty()) continue;
        if (m < 0) {
            // header: cgroup m=<int>
            if (toks.size() == 2 && toks[0].text == "cgroup" && toks[1].text.rfind("m=", 0) == 0) {
                try {
                    m = std::stoi(toks[1].text.substr(2));
                } catch (...) {
                    throw ParseError("bad generator count", line_no, toks[1].column);
                }
                if (m < 1) throw ParseError("m must be at least 1", line_no, toks[1].column);
                continue;
            }
            throw ParseError("expected header 'cgroup m=<count>'", line_no, toks[0].column);
        }

        int eq = -1;
        for (size_t i = 0; i < toks.size(); ++i)
            if (toks[i].text == "=") {
                eq = static_cast<int>(i);
                break;
            }
        if (eq != 1)
            throw ParseError("relation must have the form 'xi = <word>'", line_no,
                             toks.empty() ? 1 : toks[0].column);
        Letter lhs = parse_letter_token(toks[0], line_no, m);
        if (lhs.exp != 1)
            throw ParseError("left-hand side must be a bare generator", line_no, toks[0].column);
        if (static_cast<size_t>(eq + 1) >= toks.size())
            throw ParseError("missing right-hand side", line_no, toks[eq].column);

        std::vector<Letter> atoms;
        for (size_t i = static_cast<size_t>(eq) + 1; i < toks.size(); ++i) {
            Letter l = parse_letter_token(toks[i], line_no, m);
            int sgn = l.exp > 0 ? 1 : -1;
            for (int rep = 0; rep < std::abs(l.exp); ++rep) atoms.push_back({l.gen, sgn});
        }

        auto rel = conjugation_shape(atoms, lhs.gen);
        if (!rel) rel = conjugation_shape(Word::from_atoms(atoms).atoms(), lhs.gen);
        if (!rel)
            throw ParseError("right-hand side is not a conjugate w^-1 xj w of a single generator",
                             line_no, toks[static_cast<size_t>(eq) + 1].column);
        rels.push_back(*rel);
    }
    if (m < 0) throw ParseError("empty presentation: missing 'cgroup m=<count>' header", 1, 1);
    try {
        return CPresentation(m, std::move(rels));
    } catch (const Error& e) {
        throw ParseError(e.what(), line_no, 1);
    }
}

// ----------------------------------------------------------------- matrices

IntMatrix parse_square_matrix(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == '[' || c == ']' || c == ',' || c == ';') c = ' ';
    std::istringstream in(cleaned);
    std::vector<Int> vals;
    std::string tok;
    while (in >> tok) {
        try {
            vals.emplace_back(tok, 10);
        } catch (...) {
            throw ParseError("matrix entry '" + tok + "' is not an integer");
        }
    }
    if (vals.empty()) throw ParseError("empty matrix input");

    auto is_square = [](size_t k, int& side) {
        for (int s = 0; static_cast<size_t>(s) * s <= k; ++s)
            if (static_cast<size_t>(s) * s == k) {
                side = s;
                return true;
            }
        return false;
    };

    int side = 0;
    if (is_square(vals.size(), side))
        return IntMatrix(side, side, std::move(vals));

    if (vals[0].fits_sint_p()) {
        int n = static_cast<int>(vals[0].get_si());
        if (n >= 0 && vals.size() == static_cast<size_t>(n) * n + 1) {
            std::vector<Int> rest(vals.begin() + 1, vals.end());
            return IntMatrix(n, n, std::move(rest));
        }
    }
    throw ParseError("matrix input must be n^2 entries or a dimension followed by n^2 entries");
}

std::string matrix_to_string(const IntMatrix& m) {
    std::string out = "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m.at(i, j).get_str();
        }
        out += "]";
    }
    out += "]";
    return out;
}

}  // namespace calex
