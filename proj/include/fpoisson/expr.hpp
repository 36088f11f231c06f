#pragma once

#include "fpoisson/automorphism.hpp"
#include "fpoisson/cenv.hpp"
#include "fpoisson/e2.hpp"
#include "fpoisson/envelope.hpp"
#include "fpoisson/poisson.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fpoisson {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Syntax tree of a Poisson expression.  Power (`e^k`) is accepted on top of
/// sums, products, negation and brackets so that printed output parses back.
struct ExprAst {
    enum class Kind { Var, Rational, Sum, Product, Bracket, Negation, Power };

    Kind kind = Kind::Rational;
    char symbol = 'x';   // x for Poisson generators; m or h in envelope polynomials
    int var = 0;
    Scalar value;
    unsigned exponent = 0;
    std::vector<ExprAst> children;
    int line = 1;
    int column = 1;
};

/// Grammar (whitespace insignificant):
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)?
///   primary := x<k> | p | p/q | '(' expr ')' | '[' expr ',' expr ']'
/// With an arity, generators outside 1..arity are rejected.
ExprAst parse_expr(std::string_view text, std::optional<int> arity = std::nullopt);
PoissonElement elaborate(const ExprAst& ast, int arity);
/// parse_expr + elaborate
PoissonElement parse_element(std::string_view text, int arity);

/// Polynomial in m<k>, h<k> over the given generator labels.
CEnvElement parse_cenv(std::string_view text, const std::vector<int>& generators);
/// Sum of terms  [c*] [M[expr]] H[x<k>]...
EnvElement parse_env(std::string_view text, int arity);
/// One row per line: [e11, e12, ...]
CEnvMatrix parse_matrix(std::string_view text, const std::vector<int>& generators);
/// One mapping per line, `x<k> -> <expr>`, each k in 1..n exactly once; `#` starts a comment.
Endomorphism parse_endomorphism(std::string_view text);
/// `sigma(<i>, <alpha>, <expr>)`
ElementaryAut parse_elementary(std::string_view text, int arity);
/// One sigma(...) per line in written order (the bottom line acts first).
TameWord parse_tame_word(std::string_view text, int arity);

std::string to_text(const PoissonElement& e);
std::string to_text(const LyndonWord& w);
std::string to_text(const EnvElement& e);
std::string to_text(const CEnvElement& e);
std::string to_text(const CEnvMatrix& m);
std::string to_text(const Endomorphism& phi);
std::string to_text(const ElementaryAut& sigma);
std::string to_text(const TameWord& w);
std::string to_text(const E2Word& w);

} // namespace fpoisson
