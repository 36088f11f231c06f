#include "helpers.hpp"

#include "fpoisson/automorphism.hpp"
#include "fpoisson/envelope.hpp"
#include "fpoisson/random.hpp"

#include <doctest.h>

using namespace fpoisson;
using test::c123;
using test::c3;
using test::p3;

namespace {

EnvElement e3(const char* text) { return parse_env(text, 3); }

} // namespace

TEST_CASE("M and H generators")
{
    CHECK(m_of(PoissonElement::constant(3, 1)) == EnvElement::one(3));
    CHECK(m_of(PoissonElement(3)).is_zero());
    CHECK(m_of(p3("x1*x3")) == EnvElement::term(p3("x1*x3"), HWord()));
    CHECK(h_of(p3("x2")) == EnvElement::term(PoissonElement::constant(3, 1), HWord::letter(2)));
    CHECK(h_of(PoissonElement::constant(3, 5)).is_zero());
    CHECK(h_of(p3("x1*x2")) == e3("M[x2]H[x1] + M[x1]H[x2]"));
    const EnvElement hb = h_of(p3("[x1,x2]"));
    CHECK(hb.terms().size() == 2);
    CHECK(hb.coefficient(HWord({1, 2})) == PoissonElement::constant(3, 1));
    CHECK(hb.coefficient(HWord({2, 1})) == PoissonElement::constant(3, -1));
}

TEST_CASE("envelope products")
{
    CHECK(h_generator(3, 1) * m_of(p3("x2")) == e3("M[[x1,x2]] + M[x2]H[x1]"));
    CHECK(m_of(p3("x1 + x3")) * m_of(p3("x2*[x1,x3]")) == m_of(p3("(x1 + x3)*x2*[x1,x3]")));
    const EnvElement u = e3("2*M[x1]H[x3]H[x2] - H[x1]");
    CHECK(u * EnvElement::one(3) == u);
    CHECK(EnvElement::one(3) * u == u);
}

TEST_CASE("projections")
{
    CHECK(project_pi_e(e3("M[x3]H[x3]")) == c123("m3*h3"));
    CHECK(project_pi_e(e3("M[[x1,x2]]")).is_zero());
    CHECK(project_pi_e(e3("M[x1*x3]H[x2]H[x1]")) == c123("m1*m3*h1*h2"));
    CHECK(eta_e(c123("m3*h3 + m1")) == c3("m3*h3"));
    CHECK(eta_e(c123("h1*h2")).is_zero());
    CHECK(eta_e(c123("1 + m3*h3")) == c3("1 + m3*h3"));
}

TEST_CASE("induced maps")
{
    const Endomorphism psi_bar({p3("x1"), p3("x2 - x1*x3^2"), p3("x3")});
    CHECK(induced_endo_e(psi_bar, c123("h2")) == c123("h2 - m3^2*h1 - 2*m1*m3*h3"));
    CHECK(induced_endo_e(psi_bar, c123("m2")) == c123("m2 - m1*m3^2"));
    const CEnvElement u = c123("m1*h2 - 3*h3^2 + 1/2");
    CHECK(induced_endo_e(Endomorphism::identity(3), u) == u);
    const Endomorphism d_bar = bar(delta(3));
    CHECK(induced_endo_e(d_bar, c123("m3")) == c123("m3"));
    CHECK(induced_endo_e(d_bar, c123("h3")) == c123("h3"));
    CHECK_THROWS_AS(induced_endo_e(delta(3), c123("h1")), std::invalid_argument);
}

TEST_CASE("property: envelope algebra")
{
    for (std::size_t k = 0; k < 60; ++k) {
        RandomSource rng(RandomSource::case_seed(11, k));
        const int n = rng.uniform(2, 3);
        const EnvElement u = rng.env_element(n, 2, 2), v = rng.env_element(n, 2, 2), w = rng.env_element(n, 2, 2);
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * EnvElement::one(n) == u);
        CHECK(env_mul(u, v, ReductionOrder::RightmostFirst) == env_mul(u, v, ReductionOrder::LeftmostFirst));
        CHECK(project_pi_e(u * v) == project_pi_e(u) * project_pi_e(v));

        const ElementShape shape{n, {}, 1, 3, 2};
        const PoissonElement a = rng.element(shape), b = rng.element(shape);
        CHECK(h_of(bracket(a, b)) == h_of(a) * h_of(b) - h_of(b) * h_of(a));
        CHECK(h_of(a * b) == m_of(b) * h_of(a) + m_of(a) * h_of(b));

        const Endomorphism phi = rng.elementary(n, 2).to_endo();
        CHECK(induced_endo_e(bar(phi), project_pi_e(u)) == project_pi_e(endo_e(phi, u)));
        const CEnvElement pu = project_pi_e(u), pv = project_pi_e(v);
        CHECK(induced_endo_e(bar(phi), pu * pv) == induced_endo_e(bar(phi), pu) * induced_endo_e(bar(phi), pv));
        if (n == 3) CHECK(eta_e(pu * pv) == eta_e(pu) * eta_e(pv));
    }
}
