#include "helpers.hpp"

#include "fpoisson/automorphism.hpp"
#include "fpoisson/e2.hpp"
#include "fpoisson/random.hpp"
#include "fpoisson/witness.hpp"

#include <doctest.h>

using namespace fpoisson;
using test::c3;
using test::p3;
using test::p4;

TEST_CASE("elementary automorphisms")
{
    CHECK(ElementaryAut(2, 1, p4("x3*x4")).to_endo() == Endomorphism({p4("x1"), p4("x2 + x3*x4"), p4("x3"), p4("x4")}));
    CHECK(ElementaryAut(1, -1, PoissonElement(3)).to_endo() == Endomorphism({p3("-x1"), p3("x2"), p3("x3")}));
    CHECK(ElementaryAut(4, 1, p4("-[x3,x2]")).to_endo().image(4) == p4("x4 - [x3,x2]"));

    CHECK(ElementaryAut(1, 1, p3("x2")).inverse() == ElementaryAut(1, 1, p3("-x2")));
    CHECK(ElementaryAut(1, 2, p3("x2")).inverse() == ElementaryAut(1, Scalar(1, 2), p3("-1/2*x2")));
    CHECK(ElementaryAut(3, -1, PoissonElement(3)).inverse() == ElementaryAut(3, -1, PoissonElement(3)));

    CHECK_THROWS_AS(ElementaryAut(1, 0, p3("x2")), std::invalid_argument);
    CHECK_THROWS_AS(ElementaryAut(1, 1, p3("[x1,x2]")), std::invalid_argument);
    CHECK_THROWS_AS(ElementaryAut(4, 1, p3("x2")), std::out_of_range);
}

TEST_CASE("tame words")
{
    CHECK(TameWord(3).evaluate() == Endomorphism::identity(3));
    const TameWord t = transposition_word(3, 1, 2);
    REQUIRE(t.size() == 3);
    CHECK(t.factors()[0] == ElementaryAut(2, -1, p3("x1")));
    CHECK(t.factors()[1] == ElementaryAut(1, 1, p3("-x2")));
    CHECK(t.factors()[2] == ElementaryAut(2, 1, p3("x1")));
    CHECK(t.evaluate() == swap_endo(3, 1, 2));
    CHECK(transposition_word_via_first(3, 3).evaluate() == swap_endo(3, 1, 3));
    CHECK(transposition_word(3, 1, 3).evaluate() == transposition_word_via_first(3, 3).evaluate());
    CHECK((t * t).evaluate() == Endomorphism::identity(3));
    CHECK_THROWS_AS(transposition_word(3, 2, 2), std::invalid_argument);

    const auto factors = stable_tameness_factors();
    std::vector<ElementaryAut> written(factors.rbegin(), factors.rend());
    CHECK(word_to_endo(TameWord(4, written)) == delta(4));
}

TEST_CASE("delta")
{
    CHECK(delta(3).image(3) == p3("x3"));
    CHECK(apply_endo(delta(3), delta_fixed_element(3)) == delta_fixed_element(3));
    CHECK(compose(delta(3), delta_inverse(3)) == Endomorphism::identity(3));
    CHECK(compose(delta_inverse(4), delta(4)) == Endomorphism::identity(4));
}

TEST_CASE("normalizing to restricted factors")
{
    const TameWord restricted(3, {ElementaryAut(1, 2, p3("x2*x3")), ElementaryAut(3, 1, p3("-x1"))});
    CHECK(is_restricted(restricted));
    CHECK(normalize_generators(restricted) == restricted);

    const TameWord w(3, {ElementaryAut(2, 1, p3("x3^2"))});
    const TameWord nw = normalize_generators(w);
    CHECK(is_restricted(nw));
    CHECK(nw.size() == 9);
    CHECK(nw.evaluate() == w.evaluate());

    const TameWord v(3, {ElementaryAut(3, -1, p3("x1*x2"))});
    CHECK(is_restricted(normalize_generators(v)));
    CHECK(normalize_generators(v).evaluate() == v.evaluate());
}

TEST_CASE("relations")
{
    CHECK(check_relation_product(1, 1, p3("x2"), 1, p3("x2")).equal);
    CHECK(check_relation_conjugation(1, 1, p3("x3"), 2, 1, p3("x1*x3 + [x1,x3]")).equal);
    CHECK(check_relation_transposition(1, 2, ElementaryAut(1, 2, p3("x3"))).equal);
    CHECK_THROWS_AS(check_relation_conjugation(1, 1, p3("x2"), 2, 1, p3("x3")), std::invalid_argument);
}

TEST_CASE("E2 words")
{
    const E2Word empty(test::kX3);
    CHECK(e2_product(empty) == CEnvMatrix::identity(2, test::kX3));
    CHECK(e2_product(E2Word::upper(c3("m3*h3"))) == elementary_upper(c3("m3*h3")));
    CHECK(elementary_upper(c3("h3")) == parse_matrix("[1, h3]\n[0, 1]", test::kX3));
    E2Word w = E2Word::lower(c3("1")) + E2Word::upper(c3("-1")) + E2Word::lower(c3("1"));
    CHECK(e2_product(w) == parse_matrix("[0, -1]\n[1, 0]", test::kX3));
    w.push({E2Factor::Kind::Upper, c3("0")});
    CHECK(w.size() == 3);
    CHECK(e2_product(w.conjugated_by_diagonal(2)) == parse_matrix("[0, -1/2]\n[2, 0]", test::kX3));
}

TEST_CASE("property: inverses and normalization")
{
    for (std::size_t k = 0; k < 100; ++k) {
        RandomSource rng(RandomSource::case_seed(31, k));
        const int n = rng.uniform(2, 4);
        const ElementaryAut s = rng.elementary(n, 3);
        const Endomorphism id = Endomorphism::identity(n);
        CHECK(compose(s.to_endo(), s.inverse().to_endo()) == id);
        CHECK(compose(s.inverse().to_endo(), s.to_endo()) == id);

        const TameWord w = rng.tame_word(n, 3, 2);
        CHECK(compose(w.evaluate(), w.inverse().evaluate()) == id);
        if (n == 3) {
            const TameWord w3 = rng.tame_word(3, 4, 2);
            CHECK(normalize_generators(w3).evaluate() == w3.evaluate());
        }
    }
}
