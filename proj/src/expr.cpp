#include "taut/expr.hpp"

#include <json.hpp>

#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

namespace taut {

ParseError::ParseError(int line, int col, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
      line_(line),
      col_(col) {}

namespace {

enum class Tok { Number, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, End };

struct Token {
    Tok kind;
    std::string text;  // digits for Number, "p3"/"w7" for Var
    int line;
    int col;
};

class Lexer {
public:
    Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            int line = line_, col = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", line, col});
                return out;
            }
            char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    digits.push_back(take());
                out.push_back({Tok::Number, digits, line, col});
                continue;
            }
            if (c == 'p' || c == 'w') {
                std::string name(1, take());
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    throw ParseError(line, col, "expected variable index after '" + name + "'");
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    name.push_back(take());
                out.push_back({Tok::Var, name, line, col});
                continue;
            }
            Tok kind;
            switch (c) {
                case '+': kind = Tok::Plus; break;
                case '-': kind = Tok::Minus; break;
                case '*': kind = Tok::Star; break;
                case '/': kind = Tok::Slash; break;
                case '^': kind = Tok::Caret; break;
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                case '[': kind = Tok::LBracket; break;
                case ']': kind = Tok::RBracket; break;
                default:
                    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
            }
            take();
            out.push_back({kind, std::string(1, c), line, col});
        }
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    char take() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) take();
    }
};

class Parser {
public:
    Parser(std::vector<Token> tokens, int cap, Alphabet alphabet)
        : toks_(std::move(tokens)), cap_(cap), alphabet_(alphabet) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        expect(Tok::End, "unexpected trailing input");
        return p;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int cap_;
    Alphabet alphabet_;

    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Tok k, const std::string& message) {
        if (!accept(k)) throw ParseError(peek().line, peek().col, message);
    }

    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(peek().line, peek().col, message);
    }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (true) {
            if (accept(Tok::Plus)) {
                acc += parse_term();
            } else if (peek().kind == Tok::Minus) {
                advance();
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_unary();
        while (true) {
            if (accept(Tok::Star)) {
                acc = acc * parse_unary();
            } else if (peek().kind == Tok::Slash) {
                Token slash = advance();
                Polynomial rhs = parse_unary();
                if (rhs.term_count() != 1 || !rhs.terms().begin()->first.is_one())
                    throw ParseError(slash.line, slash.col, "division by a non-constant");
                Rational c = rhs.terms().begin()->second;
                acc *= Rational(1) / c;
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_unary() {
        if (accept(Tok::Minus)) return -parse_unary();
        return parse_primary();
    }

    long parse_number_token(const char* what) {
        if (peek().kind != Tok::Number) fail(std::string("expected ") + what);
        const Token& t = advance();
        if (t.text.size() > 6) throw ParseError(t.line, t.col, "exponent too large");
        return std::stol(t.text);
    }

    Polynomial parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                advance();
                return Polynomial::constant(Rational(Integer(t.text)), cap_);
            }
            case Tok::Var: {
                advance();
                char letter = t.text[0];
                char want = alphabet_ == Alphabet::P ? 'p' : 'w';
                if (letter != want)
                    throw ParseError(t.line, t.col,
                                     "unknown variable '" + t.text + "' (expression uses the " +
                                         std::string(1, want) + "-alphabet)");
                int index = std::stoi(t.text.substr(1));
                if (index < 1 || index > 99)
                    throw ParseError(t.line, t.col, "variable index out of range 1..99");
                if (accept(Tok::Caret)) {
                    if (accept(Tok::LBracket)) {
                        if (index != 1)
                            throw ParseError(t.line, t.col,
                                             "divided powers are supported for " +
                                                 std::string(1, want) + "1 only");
                        long n = parse_number_token("integer inside divided power");
                        expect(Tok::RBracket, "expected ']' after divided power");
                        return x1_divided_power(static_cast<int>(n), cap_);
                    }
                    long e = parse_number_token("exponent after '^'");
                    return Polynomial::monomial(
                        Monomial::from_exponents([&] {
                            std::vector<int> v(static_cast<std::size_t>(index), 0);
                            v.back() = static_cast<int>(e);
                            return v;
                        }()),
                        Rational(1), cap_);
                }
                return Polynomial::variable(index, cap_);
            }
            case Tok::LParen: {
                advance();
                Polynomial inner = parse_expr();
                expect(Tok::RParen, "expected ')'");
                if (accept(Tok::Caret)) {
                    long e = parse_number_token("exponent after '^'");
                    return pow(inner, static_cast<int>(e));
                }
                return inner;
            }
            default:
                fail("expected a number, variable or '('");
        }
    }
};

char prefix_of(Alphabet a) { return a == Alphabet::P ? 'p' : 'w'; }

std::string coefficient_text(const Rational& c) {
    // absolute value; sign is carried by the separators
    Rational a = c.abs();
    if (a.is_integer()) return a.numerator().get_str();
    return "(" + a.str() + ")";
}

std::string monomial_text(const Monomial& m, char prefix) {
    std::ostringstream os;
    bool first = true;
    for (int i = 1; i <= m.max_index(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!first) os << "*";
        first = false;
        os << prefix << i;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace

Polynomial parse_expression(std::string_view src, int cap, Alphabet alphabet) {
    Lexer lexer(src);
    Parser parser(lexer.run(), cap, alphabet);
    return parser.run();
}

std::string to_text(const Polynomial& p, Alphabet alphabet) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.display_terms()) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = c.abs() == Rational(1);
        if (m.is_one()) {
            os << (unit ? "1" : c.abs().str());
        } else {
            if (!unit) os << coefficient_text(c) << "*";
            os << monomial_text(m, prefix_of(alphabet));
        }
    }
    return os.str();
}

std::string to_latex(const Polynomial& p, Alphabet alphabet) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.display_terms()) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        bool unit = a == Rational(1);
        if (!unit) {
            if (a.is_integer())
                os << a.numerator().get_str();
            else
                os << "\\frac{" << a.numerator().get_str() << "}{" << a.denominator().get_str()
                   << "}";
        }
        if (m.is_one()) {
            if (unit) os << "1";
        } else {
            if (!unit) os << "\\,";
            for (int i = 1; i <= m.max_index(); ++i) {
                int e = m.exponent(i);
                if (e == 0) continue;
                os << prefix_of(alphabet) << "_{" << i << "}";
                if (e > 1) os << "^{" << e << "}";
            }
        }
    }
    return os.str();
}

nlohmann::json to_json(const Polynomial& p, int genus) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.display_terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (int i = 1; i <= m.max_index(); ++i)
            if (m.exponent(i) > 0) exps[std::to_string(i)] = m.exponent(i);
        terms.push_back({{"num", c.numerator().get_str()},
                         {"den", c.denominator().get_str()},
                         {"exps", exps}});
    }
    return {{"genus", genus}, {"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& doc, int cap) {
    Polynomial p(cap);
    for (const auto& term : doc.at("terms")) {
        Rational c = Rational::from_strings(term.at("num").get<std::string>(),
                                            term.at("den").get<std::string>());
        std::vector<int> exps;
        for (const auto& [key, value] : term.at("exps").items()) {
            int index = std::stoi(key);
            if (static_cast<int>(exps.size()) < index) exps.resize(static_cast<std::size_t>(index), 0);
            exps[static_cast<std::size_t>(index) - 1] = value.get<int>();
        }
        p.add_term(Monomial::from_exponents(std::move(exps)), c);
    }
    return p;
}

std::string relation_text(const Polynomial& p, Alphabet alphabet) {
    if (p.is_zero()) return "0 = 0";
    Polynomial q = p;
    const Monomial pivot = q.pivot_monomial();
    if (q.coefficient(pivot).sign() < 0) q = -q;
    Rational lead = q.coefficient(pivot);
    Polynomial rest = q;
    rest.add_term(pivot, -lead);
    std::ostringstream os;
    if (lead != Rational(1)) os << coefficient_text(lead) << "*";
    os << monomial_text(pivot, prefix_of(alphabet)) << " = " << to_text(-rest, alphabet);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_text(p); }

}  // namespace taut
