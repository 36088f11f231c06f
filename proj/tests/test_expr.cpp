#include "helpers.hpp"

#include "fpoisson/document.hpp"
#include "fpoisson/fox.hpp"
#include "fpoisson/random.hpp"

#include <doctest.h>

#include <set>

using namespace fpoisson;
using test::p3;

TEST_CASE("syntax trees")
{
    const ExprAst w = parse_expr("x1*x3 - [x3,x2]");
    REQUIRE(w.kind == ExprAst::Kind::Sum);
    REQUIRE(w.children.size() == 2);
    CHECK(w.children[0].kind == ExprAst::Kind::Product);
    CHECK(w.children[1].kind == ExprAst::Kind::Negation);
    CHECK(w.children[1].children[0].kind == ExprAst::Kind::Bracket);

    const ExprAst one = parse_expr("1");
    CHECK(one.kind == ExprAst::Kind::Rational);
    CHECK(one.value == 1);

    const ExprAst nested = parse_expr("[x3,[x3,x2]]");
    REQUIRE(nested.kind == ExprAst::Kind::Bracket);
    CHECK(nested.children[0].var == 3);
    CHECK(nested.children[1].kind == ExprAst::Kind::Bracket);

    const ExprAst prec = parse_expr("x1 + x2*x3");
    REQUIRE(prec.kind == ExprAst::Kind::Sum);
    CHECK(prec.children[1].kind == ExprAst::Kind::Product);
}

TEST_CASE("elaboration")
{
    CHECK(p3("[x1,x1]").is_zero());
    CHECK(p3("x2 + x1*x3*x3").terms().size() == 2);
    CHECK(p3("[x3, x1*x3]") == -(p3("x3") * p3("[x1,x3]")));
    CHECK(p3("3/6*x1") == p3("1/2*x1"));
}

TEST_CASE("positioned errors")
{
    const auto error_at = [](const char* text, int line, int column) {
        try {
            parse_element(text, 3);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
            return;
        }
        FAIL("no error for " << text);
    };
    error_at("x1 +", 1, 5);
    error_at("x0", 1, 1);
    error_at("x1 + x4", 1, 6);
    error_at("[x1 x2]", 1, 5);
    error_at("1/0", 1, 3);
    error_at("(x1", 1, 4);
    error_at("x1 $ x2", 1, 4);
    CHECK_THROWS_AS(parse_endomorphism("x1 -> x1\nx1 -> x2\n"), ParseError);
    CHECK_THROWS_AS(parse_endomorphism("x1 -> x1\nx3 -> x2\n"), ParseError);
    CHECK_THROWS_AS(parse_elementary("sigma(1, 0, x2)", 3), ParseError);
    CHECK_THROWS_AS(parse_elementary("sigma(1, 1, x1)", 3), ParseError);
    CHECK_THROWS_AS(parse_elementary("sigma(1, x2, x3)", 3), ParseError);
    try {
        parse_endomorphism("x1 -> x1\nx2 -> x2 +\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("canonical printing")
{
    CHECK(to_text(PoissonElement(3)) == "0");
    CHECK(to_text(Endomorphism::identity(3)) == "x1 -> x1\nx2 -> x2\nx3 -> x3");
    CHECK(to_text(p3("[x3,x1]")) == "-[x1,x3]");
    CHECK(to_text(p3("x3*x1*x3")) == "x1*x3^2");
    CHECK(to_text(parse_matrix("[1 + m3*h3, -h3^2]\n[m3^2, 1 - m3*h3]", test::kX3)) ==
          "[1 + m3*h3, -h3^2]\n[m3^2, 1 - m3*h3]");
    CHECK(to_text(fox_derivative(p3("x3*[x3,x1]"), 1)) == "M[x3]H[x3]");
}

TEST_CASE("endomorphism files")
{
    const Endomorphism phi = parse_endomorphism("# delta\nx3 -> x3\nx1 -> x1 + [x3, x1*x3 - [x3,x2]]\n\nx2 -> x2 + (x1*x3 - [x3,x2])*x3\n");
    CHECK(phi == delta(3));
    const TameWord w = parse_tame_word("sigma(2, -1, x1)\nsigma(1, 1, -x2)\nsigma(2, 1, x1)\n", 3);
    CHECK(w == transposition_word(3, 1, 2));
    CHECK(parse_tame_word("", 3).empty());
}

TEST_CASE("property: round trips and injectivity")
{
    std::map<std::string, PoissonElement> seen;
    for (std::size_t k = 0; k < 300; ++k) {
        RandomSource rng(RandomSource::case_seed(41, k));
        const int n = rng.uniform(1, 4);
        const PoissonElement e = rng.element({n, {}, 0, 4, 4});
        const std::string text = to_text(e);
        CHECK(parse_element(text, n) == e);
        if (n == 3) {
            auto [it, inserted] = seen.try_emplace(text, e);
            if (!inserted) CHECK(it->second == e);
        }

        const Document docs[] = {
            Document::of(e),
            Document::of(rng.tame_word(n, 3, 2)),
            Document::of(rng.tame_word(n, 2, 2).evaluate()),
            Document::of(rng.env_element(n, 2, 2)),
            Document::of(project_pi_e(rng.env_element(n, 2, 2))),
            Document::of(jacobian(rng.elementary(n, 2).to_endo())),
        };
        const Ring ring{n, CEnvElement::labels(n)};
        for (const Document& d : docs) {
            CHECK(parse_document(d.kind, print_canonical(d), ring) == d);
            CHECK(from_json(to_json(d)) == d);
            CHECK(from_json(nlohmann::json::parse(print_structured(d))) == d);
        }
    }
    CHECK(seen.size() > 50);
}

TEST_CASE("report documents")
{
    const nlohmann::json j = {{"name", "x"}, {"passed", true}};
    const Document d = Document::report(j);
    CHECK(parse_document(DocumentKind::Report, print_canonical(d)) == d);
    CHECK(from_json(to_json(d)) == d);
    CHECK_THROWS_AS(parse_document(DocumentKind::Report, "{"), ParseError);
    CHECK(kind_from_name("tame-word") == DocumentKind::TameWord);
    CHECK_FALSE(kind_from_name("nothing").has_value());
}
