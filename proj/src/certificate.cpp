#include "fpoisson/certificate.hpp"

#include "fpoisson/envelope.hpp"
#include "fpoisson/fox.hpp"

#include <stdexcept>

namespace fpoisson {

namespace {

const std::vector<int> kTarget{3};

CEnvElement target_constant(const Scalar& s) { return CEnvElement::constant(kTarget, s); }

bool third_column_trivial(const CEnvMatrix& m)
{
    return m(0, 2).is_zero() && m(1, 2).is_zero() && m(2, 2) == target_constant(1);
}

CEnvMatrix matrix3(std::initializer_list<CEnvElement> entries)
{
    return CEnvMatrix(3, 3, std::vector<CEnvElement>(entries));
}

// The automorphism of P{x3} induced by bar-psi, applied entrywise: m3, h3 go
// to the eta-images of M and H of bar-psi(x3).
CEnvMatrix induced_on_target(const Endomorphism& psi_bar, const CEnvMatrix& m)
{
    const PoissonElement& image = psi_bar.image(3);
    std::vector<CEnvElement> m_img{eta_e(m_polynomial(image))};
    std::vector<CEnvElement> h_img{eta_e(h_polynomial(image))};
    return m.map([&](const CEnvElement& e) { return e.substitute(m_img, h_img); });
}

class Builder {
public:
    explicit Builder(CertificateReport& report) : report_(report) {}

    bool check(const std::string& id, std::size_t level, bool ok, const std::string& detail = {})
    {
        report_.steps.push_back({id, level, ok, detail});
        return ok;
    }

    // a check that stops the build when it fails
    bool gate(const std::string& id, std::size_t level, bool ok, const std::string& detail)
    {
        if (!check(id, level, ok, detail)) mark_failed(id, level);
        return ok;
    }

    bool fail(const std::string& id, std::size_t level, const CEnvMatrix& residual, const std::string& detail)
    {
        check(id, level, false, detail);
        mark_failed(id, level);
        report_.residual = residual;
        return false;
    }

    bool require(const std::string& id, std::size_t level, const CEnvMatrix& expected, const CEnvMatrix& actual,
                 const std::string& detail)
    {
        if (expected == actual) return check(id, level, true, detail);
        return fail(id, level, actual - expected, detail);
    }

private:
    void mark_failed(const std::string& id, std::size_t level)
    {
        report_.status = CertificateReport::Status::StepFailed;
        report_.failed_step = id;
        report_.failed_level = level;
    }

    CertificateReport& report_;
};

} // namespace

bool failed_on_induced_map(const CertificateReport& report)
{
    if (report.verified()) return false;
    if (report.failed_step != "induced-map" && report.failed_step != "middle-structure") return false;
    for (const auto& s : report.steps)
        if (s.id == "commuting-square" && s.level == report.failed_level && !s.ok) return true;
    return false;
}

bool is_kernel_elementary(const ElementaryAut& phi)
{
    return phi.arity() == 3 && phi.alpha() == 1 && project_pi(phi.f()).is_zero();
}

CertificateReport conjugation_certificate(const TameWord& psi, const ElementaryAut& phi)
{
    if (psi.arity() != 3 || !is_restricted(psi))
        throw std::invalid_argument("psi must be a word over sigma(1,a,g) and sigma(j,1,-x1), j in {2,3}");
    if (!is_kernel_elementary(phi))
        throw std::invalid_argument("phi must be sigma(i,1,f) with f in the kernel of the projection");

    const std::size_t t = psi.size();
    CertificateReport report{.target = CEnvMatrix(2, 2, kTarget), .conjugate = phi.to_endo()};
    Builder b(report);

    // Base level: the conjugate is phi itself.
    Endomorphism conj = phi.to_endo();
    CEnvMatrix j_full = jacobian(conj);
    CEnvMatrix truth = eta_e(j_full);
    report.target = truth.block(0, 0, 2, 2);
    const PoissonElement& f = phi.f();
    const int i = phi.index();
    if (!b.gate("kernel-x3-derivative", 0, eta_e(projected_fox_derivative(f, 3)).is_zero(),
                 "eta pi d f/d x3 = 0"))
        return report;
    if (!b.gate("structure", 0, third_column_trivial(truth), "third column is (0,0,1)")) return report;

    E2Word word(kTarget);
    CEnvMatrix expected = CEnvMatrix::identity(2, kTarget);
    if (i == 1) {
        CEnvElement e = eta_e(projected_fox_derivative(f, 2));
        word = E2Word::upper(e);
        expected(0, 1) = e;
    } else if (i == 2) {
        CEnvElement e = eta_e(projected_fox_derivative(f, 1));
        word = E2Word::lower(e);
        expected(1, 0) = e;
    }
    if (!b.require("base-form", 0, expected, truth.block(0, 0, 2, 2), "sigma(" + std::to_string(i) + ",1,f)"))
        return report;

    for (std::size_t level = 1; level <= t; ++level) {
        const ElementaryAut& s = psi.factors()[t - level];
        const Endomorphism s_endo = s.to_endo();
        const Endomorphism s_inv = s.inverse().to_endo();
        const Endomorphism s_bar = bar(s_endo);
        const CEnvMatrix a_matrix = e2_product(word);

        Endomorphism next = compose(s_endo, compose(conj, s_inv));
        CEnvMatrix next_full = jacobian(next);
        CEnvMatrix next_truth = eta_e(next_full);
        report.conjugate = next;
        report.target = next_truth.block(0, 0, 2, 2);

        CEnvMatrix right = eta_e(jacobian(s_endo));
        CEnvMatrix left = eta_e(induced_endo_e(s_bar, jacobian(s_inv)));
        CEnvMatrix middle = eta_e(induced_endo_e(s_bar, j_full));

        if (!b.require("inverse", level, CEnvMatrix::identity(3, kTarget), left * right,
                       "eta(J(psi1)^-1) eta(J(psi1)) = I"))
            return report;
        if (!b.require("conjugation-formula", level, next_truth, left * middle * right,
                       "eta J(psi1 phi1 psi1^-1) = eta(J(psi1)^-1) eta psi1^e(J(phi1)) eta(J(psi1))"))
            return report;
        if (!b.gate("structure", level, third_column_trivial(next_truth), "third column is (0,0,1)"))
            return report;

        // commuting square eta bar-psi1 = tilde-psi1 eta on the generators
        bool square = true;
        for (int g = 1; g <= 3; ++g) {
            CEnvElement lhs_m = eta_e(m_polynomial(s_bar.image(g)));
            CEnvElement rhs_m = g == 3 ? eta_e(m_polynomial(s_bar.image(3))) : target_constant(0);
            if (lhs_m != rhs_m) square = false;
        }
        b.check("commuting-square", level, square,
                square ? "eta bar-psi1 = tilde-psi1 eta" : "eta bar-psi1 does not factor through eta");

        CEnvMatrix u_claimed = induced_on_target(s_bar, a_matrix);
        if (!b.require("induced-map", level, u_claimed, middle.block(0, 0, 2, 2),
                       "upper block of eta psi1^e(J(phi1)) equals tilde-psi1^e(eta J2(phi1))"))
            return report;
        if (!b.gate("middle-structure", level, third_column_trivial(middle), "third column is (0,0,1)"))
            return report;

        const CEnvElement one = target_constant(1);
        const CEnvElement zero = target_constant(0);
        E2Word next_word(kTarget);
        if (s.index() == 2) {
            CEnvMatrix shown = matrix3({one, zero, zero, -one, one, zero, zero, zero, one});
            if (!b.require("psi1-jacobian", level, shown, right, "sigma(2,1,-x1)")) return report;
            next_word = E2Word::lower(one) + word + E2Word::lower(-one);
        } else if (s.index() == 3) {
            CEnvMatrix shown = matrix3({one, zero, zero, zero, one, zero, -one, zero, one});
            if (!b.require("psi1-jacobian", level, shown, right, "sigma(3,1,-x1)")) return report;
            next_word = word;
        } else {
            const Scalar& alpha = s.alpha();
            CEnvElement w1 = eta_e(projected_fox_derivative(s.f(), 2));
            CEnvElement w2 = eta_e(projected_fox_derivative(s.f(), 3));
            CEnvMatrix shown = matrix3({target_constant(alpha), w1, w2, zero, one, zero, zero, zero, one});
            if (!b.require("psi1-jacobian", level, shown, right, "sigma(1,a,g)")) return report;
            Scalar inv = 1 / alpha;
            CEnvMatrix shown_inv =
                matrix3({target_constant(inv), -(inv * w1), -(inv * w2), zero, one, zero, zero, zero, one});
            if (!b.require("psi1-inverse-jacobian", level, shown_inv, left, "sigma(1,a,g)^-1")) return report;

            const CEnvElement& v1 = middle(2, 0);
            const CEnvElement& v2 = middle(2, 1);
            CEnvMatrix vg(1, 1, kTarget);
            vg(0, 0) = v1 * w2;
            if (!b.require("vg-vanishes", level, CEnvMatrix(1, 1, kTarget), vg, "v1 w2 = V G = 0")) return report;
            CEnvMatrix y = left.block(0, 0, 2, 2);
            CEnvMatrix z = left.block(0, 2, 2, 1);
            CEnvMatrix g = right.block(0, 2, 2, 1);
            CEnvMatrix u = middle.block(0, 0, 2, 2);
            CEnvMatrix minus_yug = CEnvMatrix(2, 1, kTarget) - y * u * g;
            if (!b.require("z-identity", level, minus_yug, z, "Z = -Y U G")) return report;

            E2Word inner = E2Word::upper(-w1) + word + E2Word::upper(-(w2 * v2)) + E2Word::upper(w1);
            next_word = inner.conjugated_by_diagonal(alpha);
        }

        conj = std::move(next);
        j_full = std::move(next_full);
        truth = std::move(next_truth);
        word = std::move(next_word);
        if (!b.require("certificate", level, truth.block(0, 0, 2, 2), e2_product(word), "E2 word reproduces the block"))
            return report;
    }

    if (e2_product(word) != report.target) {
        b.fail("certificate", t, e2_product(word) - report.target, "final product");
        return report;
    }
    report.word = std::move(word);
    report.status = CertificateReport::Status::Verified;
    return report;
}

CertificateReport certificate_product(std::span<const CertificateReport> reports)
{
    for (const auto& r : reports)
        if (!r.verified() || !r.word) throw std::invalid_argument("certificate product needs verified inputs");

    Endomorphism composite = Endomorphism::identity(3);
    for (const auto& r : reports) composite = compose(composite, r.conjugate);
    E2Word word(kTarget);
    for (auto it = reports.rbegin(); it != reports.rend(); ++it) word += *it->word;

    CertificateReport report{.target = eta_e(jacobian2(composite)), .conjugate = composite};
    CEnvMatrix product = e2_product(word);
    bool ok = product == report.target;
    report.steps.push_back({"product", reports.size(), ok, "word_t ... word_1 reproduces eta J2 of the composite"});
    if (!ok) {
        report.failed_step = "product";
        report.residual = product - report.target;
        return report;
    }
    report.word = std::move(word);
    report.status = CertificateReport::Status::Verified;
    return report;
}

} // namespace fpoisson
