#pragma once

#include "taut/polynomial.hpp"

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace taut {

enum class Alphabet { P, W };

// Syntax error with 1-based position. what() is "line:col: message".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& message);
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// Grammar (explicit '*', '^' tightest, '/' only by nonzero constants):
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | primary
//   primary := NUMBER | VAR ['^' exponent] | '(' expr ')' ['^' NUMBER]
//   exponent:= NUMBER | '[' NUMBER ']'        (divided power, p1 only)
//   VAR     := ('p'|'w') 1..99, matching the requested alphabet
Polynomial parse_expression(std::string_view src, int cap, Alphabet alphabet = Alphabet::P);

std::string to_text(const Polynomial& p, Alphabet alphabet = Alphabet::P);
std::string to_latex(const Polynomial& p, Alphabet alphabet = Alphabet::P);

// {"genus": g, "terms": [{"num": "...", "den": "...", "exps": {"1": 2, ...}}]}
// with coefficients as exact decimal strings and terms in emission order.
nlohmann::json to_json(const Polynomial& p, int genus);
Polynomial polynomial_from_json(const nlohmann::json& doc, int cap);

// Relation presentation: pivot term alone on the left, the negated remainder
// on the right ("p2^2 = -6*p1*p3"); "<term> = 0" for single-term relations.
std::string relation_text(const Polynomial& p, Alphabet alphabet = Alphabet::P);

}  // namespace taut
