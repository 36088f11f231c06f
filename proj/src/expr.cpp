#include "fpoisson/expr.hpp"

#include <cctype>
#include <limits>

namespace fpoisson {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

namespace {

struct Token {
    enum class Kind { Ident, Number, Symbol, Arrow, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view text, int line, int column = 1)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++column;
            continue;
        }
        const int start = column;
        std::size_t j = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (j < text.size() && (std::isalpha(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Kind::Ident, std::string(text.substr(i, j - i)), line, start});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Kind::Number, std::string(text.substr(i, j - i)), line, start});
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            j = i + 2;
            out.push_back({Token::Kind::Arrow, "->", line, start});
        } else if (std::string_view("+-*/^()[],").find(c) != std::string_view::npos) {
            j = i + 1;
            out.push_back({Token::Kind::Symbol, std::string(1, c), line, start});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, start);
        }
        column += static_cast<int>(j - i);
        i = j;
    }
    out.push_back({Token::Kind::End, "", line, column});
    return out;
}

std::string describe(const Token& t)
{
    return t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
}

/// Splits an identifier like "x12" into ("x", 12); index is -1 without digits.
std::pair<std::string, long> split_ident(const std::string& ident)
{
    std::size_t k = 0;
    while (k < ident.size() && !std::isdigit(static_cast<unsigned char>(ident[k]))) ++k;
    if (k == ident.size()) return {ident, -1};
    const std::string digits = ident.substr(k);
    long index = digits.size() > 6 ? std::numeric_limits<long>::max() : std::stol(digits);
    return {ident.substr(0, k), index};
}

struct AtomRules {
    std::string symbols = "x";       // admissible variable symbols
    bool brackets = true;
    std::optional<int> arity;        // bound on x<k>
    const std::vector<int>* labels = nullptr;  // admissible m/h labels
};

class Cursor {
public:
    explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool at_symbol(char c) const { return peek().kind == Token::Kind::Symbol && peek().text[0] == c; }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    bool accept(char c)
    {
        if (!at_symbol(c)) return false;
        next();
        return true;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "' but found " + describe(peek()));
    }

    void expect_end()
    {
        if (!at_end()) fail("unexpected " + describe(peek()));
    }

    [[noreturn]] void fail(const std::string& message) const { fail_at(peek(), message); }
    [[noreturn]] static void fail_at(const Token& t, const std::string& message)
    {
        throw ParseError(message, t.line, t.column);
    }

    unsigned unsigned_number(const char* what)
    {
        const Token& t = peek();
        if (t.kind != Token::Kind::Number) fail(std::string("expected ") + what + " but found " + describe(t));
        next();
        if (t.text.size() > 4) fail_at(t, std::string(what) + " too large");
        return static_cast<unsigned>(std::stoul(t.text));
    }

    Scalar rational()
    {
        const Token& t = next();
        Scalar value(mpz_class(t.text));
        if (accept('/')) {
            const Token& d = peek();
            if (d.kind != Token::Kind::Number) fail("expected denominator but found " + describe(d));
            next();
            mpz_class den(d.text);
            if (den == 0) fail_at(d, "zero denominator");
            value = Scalar(mpz_class(t.text), den);
            value.canonicalize();
        }
        return value;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

ExprAst node(ExprAst::Kind kind, const Token& at)
{
    ExprAst n;
    n.kind = kind;
    n.line = at.line;
    n.column = at.column;
    return n;
}

ExprAst binary(ExprAst::Kind kind, const Token& at, ExprAst a, ExprAst b)
{
    ExprAst n = node(kind, at);
    n.children.push_back(std::move(a));
    n.children.push_back(std::move(b));
    return n;
}

ExprAst parse_sum(Cursor& in, const AtomRules& rules);

ExprAst parse_variable(Cursor& in, const AtomRules& rules)
{
    const Token& t = in.peek();
    auto [symbol, index] = split_ident(t.text);
    if (symbol.size() != 1 || rules.symbols.find(symbol[0]) == std::string::npos || index < 0)
        in.fail("unknown identifier '" + t.text + "'");
    if (index == 0) in.fail("generator index must be positive");
    if (symbol == "x" && rules.arity && index > *rules.arity)
        in.fail("generator x" + std::to_string(index) + " exceeds arity " + std::to_string(*rules.arity));
    if (symbol != "x" && rules.labels) {
        bool known = false;
        for (int g : *rules.labels) known = known || g == index;
        if (!known) in.fail("variable " + t.text + " is not in this ring");
    }
    ExprAst v = node(ExprAst::Kind::Var, t);
    v.symbol = symbol[0];
    v.var = static_cast<int>(std::min<long>(index, std::numeric_limits<int>::max()));
    in.next();
    return v;
}

ExprAst parse_primary(Cursor& in, const AtomRules& rules)
{
    const Token t = in.peek();
    switch (t.kind) {
    case Token::Kind::Number: {
        ExprAst r = node(ExprAst::Kind::Rational, t);
        r.value = in.rational();
        return r;
    }
    case Token::Kind::Ident:
        return parse_variable(in, rules);
    case Token::Kind::Symbol:
        if (in.accept('(')) {
            ExprAst inner = parse_sum(in, rules);
            in.expect(')');
            return inner;
        }
        if (rules.brackets && in.accept('[')) {
            ExprAst a = parse_sum(in, rules);
            in.expect(',');
            ExprAst b = parse_sum(in, rules);
            in.expect(']');
            return binary(ExprAst::Kind::Bracket, t, std::move(a), std::move(b));
        }
        break;
    default:
        break;
    }
    in.fail("expected an operand but found " + describe(t));
}

ExprAst parse_power(Cursor& in, const AtomRules& rules)
{
    ExprAst base = parse_primary(in, rules);
    const Token t = in.peek();
    if (!in.accept('^')) return base;
    ExprAst p = node(ExprAst::Kind::Power, t);
    p.exponent = in.unsigned_number("exponent");
    p.children.push_back(std::move(base));
    return p;
}

ExprAst parse_unary(Cursor& in, const AtomRules& rules)
{
    const Token t = in.peek();
    if (!in.accept('-')) return parse_power(in, rules);
    ExprAst n = node(ExprAst::Kind::Negation, t);
    n.children.push_back(parse_unary(in, rules));
    return n;
}

ExprAst parse_product(Cursor& in, const AtomRules& rules)
{
    ExprAst left = parse_unary(in, rules);
    for (;;) {
        const Token t = in.peek();
        if (!in.accept('*')) return left;
        left = binary(ExprAst::Kind::Product, t, std::move(left), parse_unary(in, rules));
    }
}

// a - b is stored as Sum(a, Negation(b))
ExprAst parse_sum(Cursor& in, const AtomRules& rules)
{
    ExprAst left = parse_product(in, rules);
    for (;;) {
        const Token t = in.peek();
        if (in.accept('+')) {
            left = binary(ExprAst::Kind::Sum, t, std::move(left), parse_product(in, rules));
        } else if (in.accept('-')) {
            ExprAst neg = node(ExprAst::Kind::Negation, t);
            neg.children.push_back(parse_product(in, rules));
            left = binary(ExprAst::Kind::Sum, t, std::move(left), std::move(neg));
        } else {
            return left;
        }
    }
}

ExprAst parse_whole(std::string_view text, int line, const AtomRules& rules)
{
    Cursor in(tokenize(text, line));
    ExprAst ast = parse_sum(in, rules);
    in.expect_end();
    return ast;
}

CEnvElement elaborate_cenv(const ExprAst& ast, const std::vector<int>& gens)
{
    switch (ast.kind) {
    case ExprAst::Kind::Var:
        return ast.symbol == 'm' ? CEnvElement::m(gens, ast.var) : CEnvElement::h(gens, ast.var);
    case ExprAst::Kind::Rational:
        return CEnvElement::constant(gens, ast.value);
    case ExprAst::Kind::Sum:
        return elaborate_cenv(ast.children[0], gens) + elaborate_cenv(ast.children[1], gens);
    case ExprAst::Kind::Product:
        return elaborate_cenv(ast.children[0], gens) * elaborate_cenv(ast.children[1], gens);
    case ExprAst::Kind::Negation:
        return -elaborate_cenv(ast.children[0], gens);
    case ExprAst::Kind::Power:
        return elaborate_cenv(ast.children[0], gens).pow(ast.exponent);
    case ExprAst::Kind::Bracket:
        break;
    }
    throw ParseError("brackets are not allowed here", ast.line, ast.column);
}

/// Strips a `#` comment; returns the remaining text.
std::string_view strip_comment(std::string_view line)
{
    auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s)
{
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

/// Non-blank lines with their 1-based line numbers, comments removed.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text)
{
    std::vector<std::pair<int, std::string_view>> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        auto line = strip_comment(text.substr(start, end - start));
        if (!blank(line)) out.emplace_back(number, line);
        start = end + 1;
    }
    return out;
}

ElementaryAut parse_sigma(Cursor& in, int arity)
{
    const Token head = in.peek();
    if (head.kind != Token::Kind::Ident || head.text != "sigma")
        in.fail("expected 'sigma' but found " + describe(head));
    in.next();
    in.expect('(');
    const Token index_token = in.peek();
    const unsigned index = in.unsigned_number("factor index");
    if (index == 0 || static_cast<int>(index) > arity)
        Cursor::fail_at(index_token, "factor index out of range 1.." + std::to_string(arity));
    in.expect(',');
    const Token alpha_token = in.peek();
    AtomRules rules;
    rules.arity = arity;
    const PoissonElement alpha = elaborate(parse_sum(in, rules), arity);
    if (!alpha.is_constant() || alpha.is_zero())
        Cursor::fail_at(alpha_token, "alpha must be a nonzero rational");
    in.expect(',');
    const Token f_token = in.peek();
    PoissonElement f = elaborate(parse_sum(in, rules), arity);
    in.expect(')');
    if (f.involves(static_cast<int>(index)))
        Cursor::fail_at(f_token, "f must not involve x" + std::to_string(index));
    return ElementaryAut(static_cast<int>(index), alpha.constant_term(), std::move(f));
}

std::string coefficient_prefix(const Scalar& magnitude, const std::string& body)
{
    if (body.empty()) return to_string(magnitude);
    if (magnitude == 1) return body;
    return to_string(magnitude) + "*" + body;
}

/// Joins signed terms as "a + b - c"; each entry is (negative, magnitude text).
std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms)
{
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [negative, text] = terms[i];
        if (i == 0)
            out += negative ? "-" + text : text;
        else
            out += (negative ? " - " : " + ") + text;
    }
    return out;
}

std::string power_text(const std::string& base, unsigned exponent)
{
    return exponent == 1 ? base : base + "^" + std::to_string(exponent);
}

std::string monomial_text(const Monomial& m)
{
    std::string out;
    const auto& f = m.factors();
    for (std::size_t i = 0; i < f.size();) {
        std::size_t j = i;
        while (j < f.size() && f[j] == f[i]) ++j;
        if (!out.empty()) out += "*";
        out += power_text(to_text(f[i]), static_cast<unsigned>(j - i));
        i = j;
    }
    return out;
}

std::string hword_text(const HWord& w)
{
    std::string out;
    for (int g : w.letters()) out += "H[x" + std::to_string(g) + "]";
    return out;
}

} // namespace

ExprAst parse_expr(std::string_view text, std::optional<int> arity)
{
    AtomRules rules;
    rules.arity = arity;
    return parse_whole(text, 1, rules);
}

PoissonElement elaborate(const ExprAst& ast, int arity)
{
    switch (ast.kind) {
    case ExprAst::Kind::Var:
        if (ast.symbol != 'x') throw std::invalid_argument("not a Poisson generator");
        return PoissonElement::generator(arity, ast.var);
    case ExprAst::Kind::Rational:
        return PoissonElement::constant(arity, ast.value);
    case ExprAst::Kind::Sum:
        return elaborate(ast.children[0], arity) + elaborate(ast.children[1], arity);
    case ExprAst::Kind::Product:
        return elaborate(ast.children[0], arity) * elaborate(ast.children[1], arity);
    case ExprAst::Kind::Bracket:
        return bracket(elaborate(ast.children[0], arity), elaborate(ast.children[1], arity));
    case ExprAst::Kind::Negation:
        return -elaborate(ast.children[0], arity);
    case ExprAst::Kind::Power:
        return elaborate(ast.children[0], arity).pow(ast.exponent);
    }
    throw std::logic_error("unknown expression node");
}

PoissonElement parse_element(std::string_view text, int arity)
{
    return elaborate(parse_expr(text, arity), arity);
}

CEnvElement parse_cenv(std::string_view text, const std::vector<int>& generators)
{
    AtomRules rules;
    rules.symbols = "mh";
    rules.brackets = false;
    rules.labels = &generators;
    return elaborate_cenv(parse_whole(text, 1, rules), generators);
}

EnvElement parse_env(std::string_view text, int arity)
{
    Cursor in(tokenize(text, 1));
    AtomRules rules;
    rules.arity = arity;
    EnvElement out(arity);
    bool first = true;
    while (first || !in.at_end()) {
        bool negative = false;
        if (first) {
            negative = in.accept('-');
        } else if (in.accept('-')) {
            negative = true;
        } else if (!in.accept('+')) {
            in.fail("expected '+' or '-' but found " + describe(in.peek()));
        }
        first = false;

        Scalar c = 1;
        bool has_factor = false;
        if (in.peek().kind == Token::Kind::Number) {
            c = in.rational();
            has_factor = true;
            if (!in.accept('*')) {
                out.add_term(HWord(), PoissonElement::constant(arity, negative ? Scalar(-c) : c));
                continue;
            }
        }
        PoissonElement m = PoissonElement::constant(arity, 1);
        if (in.peek().kind == Token::Kind::Ident && in.peek().text == "M") {
            in.next();
            in.expect('[');
            m = elaborate(parse_sum(in, rules), arity);
            in.expect(']');
            has_factor = true;
        }
        std::vector<int> letters;
        while (in.peek().kind == Token::Kind::Ident && in.peek().text == "H") {
            in.next();
            in.expect('[');
            ExprAst v = parse_variable(in, rules);
            in.expect(']');
            letters.push_back(v.var);
            has_factor = true;
        }
        if (!has_factor) in.fail("expected a term but found " + describe(in.peek()));
        out.add_term(HWord(letters), (negative ? Scalar(-c) : c) * m);
    }
    return out;
}

CEnvMatrix parse_matrix(std::string_view text, const std::vector<int>& generators)
{
    AtomRules rules;
    rules.symbols = "mh";
    rules.brackets = false;
    rules.labels = &generators;
    std::vector<CEnvElement> entries;
    std::size_t cols = 0;
    std::size_t rows = 0;
    for (const auto& [number, line] : content_lines(text)) {
        Cursor in(tokenize(line, number));
        in.expect('[');
        std::size_t count = 0;
        do {
            entries.push_back(elaborate_cenv(parse_sum(in, rules), generators));
            ++count;
        } while (in.accept(','));
        in.expect(']');
        in.expect_end();
        if (rows == 0) cols = count;
        if (count != cols) throw ParseError("row has " + std::to_string(count) + " entries, expected " +
                                                std::to_string(cols), number, 1);
        ++rows;
    }
    if (rows == 0) throw ParseError("empty matrix", 1, 1);
    return CEnvMatrix(rows, cols, std::move(entries));
}

Endomorphism parse_endomorphism(std::string_view text)
{
    struct Mapping {
        int line;
        int column;
        std::string_view rhs;
    };
    std::map<int, Mapping> mappings;
    for (const auto& [number, line] : content_lines(text)) {
        auto arrow = line.find("->");
        Cursor head(tokenize(line.substr(0, arrow == std::string_view::npos ? line.size() : arrow), number));
        const Token target = head.peek();
        auto [symbol, index] = split_ident(target.text);
        if (target.kind != Token::Kind::Ident || symbol != "x" || index < 1)
            head.fail("expected a generator x<k> but found " + describe(target));
        head.next();
        head.expect_end();
        if (arrow == std::string_view::npos) throw ParseError("expected '->'", number, static_cast<int>(line.size()) + 1);
        if (index > 4096) Cursor::fail_at(target, "generator index too large");
        if (!mappings.emplace(static_cast<int>(index), Mapping{number, static_cast<int>(arrow) + 3, line.substr(arrow + 2)})
                 .second)
            Cursor::fail_at(target, "duplicate mapping for " + target.text);
    }
    if (mappings.empty()) throw ParseError("no mappings", 1, 1);
    const int n = static_cast<int>(mappings.size());
    if (mappings.rbegin()->first != n)
        throw ParseError("mappings must cover x1..x" + std::to_string(n) + " exactly once",
                         mappings.rbegin()->second.line, 1);
    std::vector<PoissonElement> images;
    AtomRules rules;
    rules.arity = n;
    for (const auto& [index, mapping] : mappings) {
        Cursor in(tokenize(mapping.rhs, mapping.line, mapping.column));
        ExprAst ast = parse_sum(in, rules);
        in.expect_end();
        images.push_back(elaborate(ast, n));
    }
    return Endomorphism(std::move(images));
}

ElementaryAut parse_elementary(std::string_view text, int arity)
{
    Cursor in(tokenize(text, 1));
    ElementaryAut sigma = parse_sigma(in, arity);
    in.expect_end();
    return sigma;
}

TameWord parse_tame_word(std::string_view text, int arity)
{
    std::vector<ElementaryAut> factors;
    for (const auto& [number, line] : content_lines(text)) {
        Cursor in(tokenize(line, number));
        factors.push_back(parse_sigma(in, arity));
        in.expect_end();
    }
    return TameWord(arity, std::move(factors));
}

std::string to_text(const LyndonWord& w)
{
    return w.is_letter() ? "x" + std::to_string(w.first()) : w.bracketing();
}

std::string to_text(const PoissonElement& e)
{
    std::vector<std::pair<bool, std::string>> terms;
    for (const auto& [m, c] : e.terms())
        terms.emplace_back(sgn(c) < 0, coefficient_prefix(abs(c), monomial_text(m)));
    return join_terms(terms);
}

std::string to_text(const CEnvElement& e)
{
    const auto& gens = e.generators();
    std::vector<std::pair<bool, std::string>> terms;
    for (const auto& [exps, c] : e.terms()) {
        std::string body;
        for (std::size_t k = 0; k < exps.size(); ++k) {
            if (exps[k] == 0) continue;
            const bool is_m = k < gens.size();
            const int g = gens[is_m ? k : k - gens.size()];
            if (!body.empty()) body += "*";
            body += power_text((is_m ? "m" : "h") + std::to_string(g), exps[k]);
        }
        terms.emplace_back(sgn(c) < 0, coefficient_prefix(abs(c), body));
    }
    return join_terms(terms);
}

std::string to_text(const EnvElement& e)
{
    std::vector<std::pair<bool, std::string>> terms;
    for (const auto& [w, a] : e.terms()) {
        if (a.is_constant()) {
            const Scalar c = a.constant_term();
            terms.emplace_back(sgn(c) < 0, coefficient_prefix(abs(c), hword_text(w)));
        } else {
            terms.emplace_back(false, "M[" + to_text(a) + "]" + hword_text(w));
        }
    }
    return join_terms(terms);
}

std::string to_text(const CEnvMatrix& m)
{
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r > 0) out += "\n";
        out += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ", ";
            out += to_text(m(r, c));
        }
        out += "]";
    }
    return out;
}

std::string to_text(const Endomorphism& phi)
{
    std::string out;
    for (int i = 1; i <= phi.arity(); ++i) {
        if (i > 1) out += "\n";
        out += "x" + std::to_string(i) + " -> " + to_text(phi.image(i));
    }
    return out;
}

std::string to_text(const ElementaryAut& sigma)
{
    return "sigma(" + std::to_string(sigma.index()) + ", " + to_string(sigma.alpha()) + ", " + to_text(sigma.f()) + ")";
}

std::string to_text(const TameWord& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += "\n";
        out += to_text(w.factors()[i]);
    }
    return out;
}

std::string to_text(const E2Word& w)
{
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& f = w.factors()[i];
        if (i > 0) out += ", ";
        out += (f.kind == E2Factor::Kind::Lower ? "Lower(" : "Upper(") + to_text(f.entry) + ")";
    }
    return out + "]";
}

} // namespace fpoisson
