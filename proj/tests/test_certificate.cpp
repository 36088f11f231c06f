#include "helpers.hpp"

#include "fpoisson/certificate.hpp"
#include "fpoisson/e2.hpp"
#include "fpoisson/fox.hpp"
#include "fpoisson/random.hpp"

#include <doctest.h>

using namespace fpoisson;
using test::c3;
using test::p3;

namespace {

CEnvMatrix direct_target(const TameWord& psi, const ElementaryAut& phi)
{
    const Endomorphism theta = compose(compose(psi.evaluate(), phi.to_endo()), psi.inverse().evaluate());
    return eta_e(jacobian2(theta));
}

} // namespace

TEST_CASE("base certificates")
{
    const CertificateReport r3 = conjugation_certificate(TameWord(3), ElementaryAut(3, 1, p3("x1*[x1,x2]")));
    REQUIRE(r3.verified());
    CHECK(r3.word->empty());
    CHECK(r3.target == CEnvMatrix::identity(2, test::kX3));

    const CertificateReport r1 = conjugation_certificate(TameWord(3), ElementaryAut(1, 1, p3("[x2,x3]")));
    REQUIRE(r1.verified());
    CHECK(*r1.word == E2Word::upper(c3("-h3")));
    CHECK(e2_product(*r1.word) == r1.target);
}

TEST_CASE("one-factor conjugation")
{
    const TameWord psi(3, {ElementaryAut(2, 1, p3("-x1"))});
    const ElementaryAut phi(1, 1, p3("[x2,x3]"));
    const CertificateReport r = conjugation_certificate(psi, phi);
    REQUIRE(r.verified());
    CHECK(*r.word == E2Word::lower(c3("1")) + E2Word::upper(c3("-h3")) + E2Word::lower(c3("-1")));
    CHECK(r.target == direct_target(psi, phi));
    CHECK(e2_product(*r.word) == r.target);
}

TEST_CASE("precondition errors")
{
    CHECK_THROWS_AS(conjugation_certificate(TameWord(3, {ElementaryAut(2, 1, p3("x3"))}),
                                            ElementaryAut(1, 1, p3("[x2,x3]"))),
                    std::invalid_argument);
    CHECK_THROWS_AS(conjugation_certificate(TameWord(3), ElementaryAut(1, 1, p3("x2"))), std::invalid_argument);
    CHECK_THROWS_AS(conjugation_certificate(TameWord(3), ElementaryAut(1, 2, p3("[x2,x3]"))), std::invalid_argument);
}

TEST_CASE("an induced map that is not well defined is reported")
{
    const TameWord psi(3, {ElementaryAut(1, 1, p3("x3")), ElementaryAut(3, 1, p3("-x1")),
                           ElementaryAut(1, 2, p3("x2*x3"))});
    const ElementaryAut phi(1, 1, p3("[x2,x3]"));
    const CertificateReport r = conjugation_certificate(psi, phi);
    CHECK_FALSE(r.verified());
    CHECK(failed_on_induced_map(r));
    CHECK(r.failed_level == 3);
    CHECK(r.residual.has_value());
    CHECK(r.target == eta_e(jacobian2(r.conjugate)));
}

TEST_CASE("certificate products")
{
    const std::vector<CertificateReport> none;
    const CertificateReport empty = certificate_product(none);
    REQUIRE(empty.verified());
    CHECK(empty.word->empty());
    CHECK(empty.target == CEnvMatrix::identity(2, test::kX3));

    const ElementaryAut a(1, 1, p3("[x2,x3]")), b(2, 1, p3("x1*[x1,x3]"));
    const std::vector<CertificateReport> one{conjugation_certificate(TameWord(3), a)};
    const CertificateReport single = certificate_product(one);
    CHECK(single.word == one[0].word);
    CHECK(single.target == one[0].target);

    const std::vector<CertificateReport> two{one[0], conjugation_certificate(TameWord(3), b)};
    const CertificateReport both = certificate_product(two);
    REQUIRE(both.verified());
    // theta_2 theta_1 with theta_1 = a acting first
    CHECK(both.target == eta_e(jacobian2(compose(b.to_endo(), a.to_endo()))));
    CHECK(e2_product(*both.word) == both.target);

    CertificateReport failed = one[0];
    failed.status = CertificateReport::Status::StepFailed;
    const std::vector<CertificateReport> bad{failed};
    CHECK_THROWS_AS(certificate_product(bad), std::invalid_argument);
}

TEST_CASE("property: certificates agree with direct computation")
{
    std::size_t verified = 0;
    for (std::size_t k = 0; k < 30; ++k) {
        RandomSource rng(RandomSource::case_seed(37, k));
        const TameWord psi = rng.restricted_word(2, 2);
        const ElementaryAut phi = rng.kernel_elementary(3, 3);
        const CertificateReport r = conjugation_certificate(psi, phi);
        CHECK(r.target == eta_e(jacobian2(r.conjugate)));
        CHECK((r.verified() || failed_on_induced_map(r)));
        if (!r.verified()) continue;
        CHECK(r.target == direct_target(psi, phi));
        ++verified;
        CHECK(e2_product(*r.word) == r.target);
        CHECK(det(r.target) == c3("1"));
    }
    CHECK(verified > 20);
}
