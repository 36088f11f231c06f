#include "helpers.hpp"

#include "fpoisson/automorphism.hpp"
#include "fpoisson/endomorphism.hpp"
#include "fpoisson/random.hpp"

#include <doctest.h>

using namespace fpoisson;
using test::p3;

TEST_CASE("products")
{
    const PoissonElement x1x3 = p3("x1*x3");
    REQUIRE(x1x3.terms().size() == 1);
    CHECK(x1x3.terms().begin()->first ==
          Monomial({LyndonWord::letter(1), LyndonWord::letter(3)}));
    CHECK(x1x3.terms().begin()->second == 1);

    const PoissonElement f = p3("x2 - 3*[x1,x3]*x2 + 1/2");
    CHECK(PoissonElement::constant(3, 1) * f == f);
    CHECK(p3("(x1 + x2)*(x1 - x2)") == p3("x1^2 - x2^2"));
    CHECK((p3("x1") - p3("x1")).is_zero());
    CHECK(p3("x1 - x1").terms().empty());
    CHECK(p3("x1 + [x2,x3]").pow(0) == PoissonElement::constant(3, 1));
}

TEST_CASE("Poisson brackets")
{
    // [x3, x1 x3] = x3 [x3, x1] = -x3 <13>
    const PoissonElement expected = PoissonElement::monomial(
        3, Monomial({LyndonWord::letter(3), LyndonWord::from_indices({1, 3})}), -1);
    CHECK(bracket(p3("x3"), p3("x1*x3")) == expected);
    CHECK(bracket(p3("x2*[x1,x3] + x1"), PoissonElement::constant(3, 1)).is_zero());
    CHECK(bracket(p3("x1*x2"), p3("x3")) == p3("x1*[x2,x3] + x2*[x1,x3]"));
    CHECK(bracket(p3("x1"), p3("x1")).is_zero());
}

TEST_CASE("arity is checked")
{
    CHECK_THROWS_AS(p3("x1") + parse_element("x1", 4), std::invalid_argument);
    CHECK_THROWS_AS(bracket(p3("x1"), parse_element("x2", 2)), std::invalid_argument);
    CHECK_THROWS(PoissonElement::generator(3, 4));
    CHECK_THROWS(PoissonElement::generator(3, 0));
    CHECK_THROWS_AS(apply_endo(Endomorphism::identity(4), p3("x1")), std::invalid_argument);
    CHECK_THROWS_AS(compose(Endomorphism::identity(4), Endomorphism::identity(3)), std::invalid_argument);
}

TEST_CASE("endomorphisms")
{
    const PoissonElement w = p3("x1*x3 - [x3,x2]");
    CHECK(apply_endo(delta(3), w) == w);
    CHECK(delta(3).image(3) == p3("x3"));
    CHECK(delta(3).image(1) == p3("x1 + x3*[x3,x1] - [x3,[x3,x2]]"));
    CHECK(delta(3).image(2) == p3("x2 + x1*x3^2 - x3*[x3,x2]"));

    const PoissonElement f = p3("x2*[x1,[x1,x3]] - 7*x1^3");
    CHECK(apply_endo(Endomorphism::identity(3), f) == f);
    const Endomorphism psi({p3("x1"), p3("x2 - x1*x3^2"), p3("x3")});
    CHECK(apply_endo(psi, p3("x2 + x1*x3^2")) == p3("x2"));

    const Endomorphism id = Endomorphism::identity(3);
    CHECK(compose(delta(3), delta_inverse(3)) == id);
    CHECK(compose(delta_inverse(3), delta(3)) == id);
    CHECK(delta_inverse(3).image(1) == p3("x1 - [x3, x1*x3 - [x3,x2]]"));
    CHECK(compose(id, psi) == psi);
    const Endomorphism s = ElementaryAut(1, 1, p3("x2")).to_endo();
    CHECK(compose(s, s) == ElementaryAut(1, 1, p3("2*x2")).to_endo());
}

TEST_CASE("projection and kernel split")
{
    CHECK(project_pi(p3("x2 + x1*x3^2 - x3*[x3,x2]")) == p3("x2 + x1*x3^2"));
    CHECK(project_pi(p3("[x1,x2]")).is_zero());
    CHECK(project_pi(p3("x1^2*x2 - 4")) == p3("x1^2*x2 - 4"));

    auto [a0, a1] = split_kernel(p3("x1 + x3*[x3,x1]"));
    CHECK(a0 == p3("x1"));
    CHECK(a1 == p3("x3*[x3,x1]"));
    auto [b0, b1] = split_kernel(p3("x2*[x1,x3]"));
    CHECK(b0.is_zero());
    CHECK(b1 == p3("x2*[x1,x3]"));
    auto [d0, d1] = split_kernel(delta(3).image(2));
    CHECK(d0 == p3("x2 + x1*x3^2"));
    CHECK(d1 == p3("-x3*[x3,x2]"));
    CHECK(bar(delta(3)) == Endomorphism({p3("x1"), p3("x2 + x1*x3^2"), p3("x3")}));
}

TEST_CASE("arity one is commutative")
{
    const PoissonElement x = parse_element("x1", 1);
    CHECK(bracket(x, x.pow(3)).is_zero());
    CHECK(parse_element("[x1, x1^2 + 1]", 1).is_zero());
}

TEST_CASE("property: Poisson algebra identities on random elements")
{
    for (std::size_t k = 0; k < 150; ++k) {
        RandomSource rng(RandomSource::case_seed(3, k));
        const int n = rng.uniform(1, 4);
        const ElementShape shape{n, {}, 0, 3, 3};
        const PoissonElement a = rng.element(shape), b = rng.element(shape), c = rng.element(shape);
        CHECK(bracket(a, a).is_zero());
        CHECK(bracket(a, b) == -bracket(b, a));
        CHECK((bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)).is_zero());
        CHECK(bracket(a, b * c) == b * bracket(a, c) + c * bracket(a, b));
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("property: endomorphisms are Poisson homomorphisms")
{
    for (std::size_t k = 0; k < 100; ++k) {
        RandomSource rng(RandomSource::case_seed(5, k));
        const int n = rng.uniform(2, 4);
        const Endomorphism phi = rng.tame_word(n, 2, 2, 1).evaluate();
        const ElementShape shape{n, {}, 0, 2, 2};
        const PoissonElement a = rng.element(shape), b = rng.element(shape);
        CHECK(apply_endo(phi, a * b) == apply_endo(phi, a) * apply_endo(phi, b));
        CHECK(apply_endo(phi, bracket(a, b)) == bracket(apply_endo(phi, a), apply_endo(phi, b)));
        CHECK(project_pi(apply_endo(phi, a)) == apply_endo(bar(phi), project_pi(a)));
        auto [f0, f1] = split_kernel(a);
        CHECK(f0 + f1 == a);
        CHECK(project_pi(f1).is_zero());
    }
}
