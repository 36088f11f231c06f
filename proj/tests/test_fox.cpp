#include "helpers.hpp"

#include "fpoisson/automorphism.hpp"
#include "fpoisson/e2.hpp"
#include "fpoisson/fox.hpp"
#include "fpoisson/random.hpp"
#include "fpoisson/witness.hpp"

#include <doctest.h>

using namespace fpoisson;
using test::c123;
using test::c3;
using test::p3;

namespace {

EnvElement e3(const char* text) { return parse_env(text, 3); }

CEnvMatrix m3x3(const char* text) { return parse_matrix(text, test::kX3); }

} // namespace

TEST_CASE("Fox derivatives")
{
    CHECK(fox_derivative(p3("x1*x3"), 1) == e3("M[x3]"));
    CHECK(fox_derivative(p3("[x3,x2]"), 2) == e3("H[x3]"));
    CHECK(fox_derivative(p3("x3*[x3,x1]"), 1) == e3("M[x3]H[x3]"));
    CHECK(fox_derivative(p3("x2"), 2) == EnvElement::one(3));
    CHECK(fox_derivative(p3("x2"), 1).is_zero());
    CHECK(fox_derivative(p3("7"), 1).is_zero());
    CHECK_THROWS(fox_derivative(p3("x1"), 4));
    CHECK_THROWS(fox_derivative(p3("x1"), 0));
}

TEST_CASE("iterated brackets")
{
    const std::vector<PoissonElement> two{p3("x1*x2"), p3("x3 + x1")};
    const EnvElement expected = -(h_of(two[1]) * fox_derivative(two[0], 1)) + h_of(two[0]) * fox_derivative(two[1], 1);
    CHECK(iterated_bracket_derivative(two, 1) == expected);
    const std::vector<PoissonElement> one{p3("x1*[x2,x3]")};
    CHECK(iterated_bracket_derivative(one, 2) == fox_derivative(one[0], 2));
    const std::vector<PoissonElement> gens{p3("x1"), p3("x2"), p3("x3")};
    CHECK(left_nested_bracket(gens) == p3("[[x1,x2],x3]"));
    for (int r = 1; r <= 3; ++r)
        CHECK(iterated_bracket_derivative(gens, r) == fox_derivative(left_nested_bracket(gens), r));
}

TEST_CASE("Jacobians")
{
    CHECK(jacobian(Endomorphism::identity(3)) == CEnvMatrix::identity(3, {1, 2, 3}));
    CHECK(jacobian2(Endomorphism::identity(3)) == CEnvMatrix::identity(2, {1, 2, 3}));
    CHECK(eta_e(jacobian(delta(3))) == m3x3("[1 + m3*h3, -h3^2, 0]\n[m3^2, 1 - m3*h3, 0]\n[0, 0, 1]"));
    const Endomorphism psi({p3("x1"), p3("x2 - x1*x3^2"), p3("x3")});
    CHECK(eta_e(jacobian(psi)) == m3x3("[1, 0, 0]\n[-m3^2, 1, 0]\n[0, 0, 1]"));
    CHECK(eta_e(jacobian2(compose(delta(3), psi))) == elementary_lower(c3("-m3^2")) * cohn_block());
    CHECK(eta_e(jacobian2(ElementaryAut(1, 1, p3("[x2,x3]")).to_endo())) == m3x3("[1, -h3]\n[0, 1]"));
}

TEST_CASE("determinants")
{
    CHECK(det(CEnvMatrix::identity(3, {1, 2, 3})) == c123("1"));
    CHECK(det(jacobian(ElementaryAut(2, 1, p3("x1*[x1,x3]")).to_endo())) == c123("1"));
    CHECK(det(cohn_block()) == c3("1"));
    CHECK(det(m3x3("[m3, h3]\n[1, 2]")) == c3("2*m3 - h3"));
    CHECK_THROWS_AS(det(CEnvMatrix(2, 3, test::kX3)), std::invalid_argument);
}

TEST_CASE("chain rule examples")
{
    const Endomorphism id = Endomorphism::identity(3);
    const ChainRuleReport trivial = chain_rule_check(id, id, id);
    CHECK(trivial.holds);
    CHECK(trivial.lhs == CEnvMatrix::identity(3, {1, 2, 3}));
    CHECK(trivial.inverse_identity == true);

    const Endomorphism psi({p3("x1"), p3("x2 - x1*x3^2"), p3("x3")});
    const Endomorphism psi_inv({p3("x1"), p3("x2 + x1*x3^2"), p3("x3")});
    const ChainRuleReport r = chain_rule_check(delta(3), psi, psi_inv);
    CHECK(r.holds);
    CHECK(r.inverse_identity == true);
    CHECK(eta_e(r.lhs) == witness_left_factor() * witness_right_factor());
}

TEST_CASE("property: two Jacobian routes agree")
{
    for (std::size_t k = 0; k < 40; ++k) {
        RandomSource rng(RandomSource::case_seed(13, k));
        const Endomorphism phi = rng.tame_word(3, 2, 3, 1).evaluate();
        CHECK(jacobian(phi) == jacobian_via_envelope(phi));
    }
}

TEST_CASE("property: Fox derivative is linear and well defined")
{
    for (std::size_t k = 0; k < 80; ++k) {
        RandomSource rng(RandomSource::case_seed(17, k));
        const ElementShape shape{3, {}, 1, 3, 3};
        const PoissonElement a = rng.element(shape), b = rng.element(shape), c = rng.element(shape);
        const int j = rng.uniform(1, 3);
        const Scalar s = rng.scalar();
        CHECK(fox_derivative(s * a + b, j) == s * fox_derivative(a, j) + fox_derivative(b, j));
        // the same element assembled two ways
        CHECK(fox_derivative(a * (b * c), j) == fox_derivative((c * a) * b, j));
        CHECK(fox_derivative(bracket(a, b * c), j) == fox_derivative(b * bracket(a, c) + c * bracket(a, b), j));
        CHECK(projected_fox_derivative(a * b, j) == project_pi_e(fox_derivative(a * b, j)));
    }
}

TEST_CASE("property: iterated bracket formula")
{
    for (std::size_t k = 0; k < 60; ++k) {
        RandomSource rng(RandomSource::case_seed(19, k));
        const int t = rng.uniform(2, 5);
        std::vector<PoissonElement> args;
        for (int i = 0; i < t; ++i) args.push_back(rng.element({3, {}, 1, t > 3 ? 1 : 2, 2}));
        const int r = rng.uniform(1, 3);
        CHECK(iterated_bracket_derivative(args, r) == fox_derivative(left_nested_bracket(args), r));
    }
}

TEST_CASE("property: determinant is multiplicative")
{
    for (std::size_t k = 0; k < 40; ++k) {
        RandomSource rng(RandomSource::case_seed(23, k));
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto random_matrix = [&] {
            std::vector<CEnvElement> entries;
            for (std::size_t i = 0; i < n * n; ++i)
                entries.push_back(project_pi_e(rng.env_element(3, 1, 1)));
            return CEnvMatrix(n, n, entries);
        };
        const CEnvMatrix a = random_matrix(), b = random_matrix();
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("property: kernel elements have no eta x3-derivative")
{
    for (std::size_t k = 0; k < 100; ++k) {
        RandomSource rng(RandomSource::case_seed(29, k));
        const PoissonElement f = rng.kernel_element(3, all_generators(3), 4);
        CHECK(eta_e(project_pi_e(fox_derivative(f, 3))).is_zero());
    }
}
