#pragma once

#include "fpoisson/automorphism.hpp"
#include "fpoisson/cenv.hpp"
#include "fpoisson/e2.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fpoisson {

struct CertificateStep {
    std::string id;
    std::size_t level;    // number of psi factors already conjugated in
    bool ok;
    std::string detail;
};

/// Outcome of building an E2 word for eta^e(J2(theta)).  When `verified()`,
/// e2_product(*word) equals `target` exactly.  A failed report describes the
/// last level reached: `conjugate` is the partial conjugate there.
struct CertificateReport {
    enum class Status { Verified, StepFailed };

    Status status = Status::StepFailed;
    CEnvMatrix target;                // eta^e(J2(conjugate)), computed directly
    Endomorphism conjugate;           // the automorphism the certificate is about
    std::optional<E2Word> word{};
    std::string failed_step{};        // step id; empty when verified
    std::size_t failed_level = 0;
    std::optional<CEnvMatrix> residual{};
    std::vector<CertificateStep> steps{};

    bool verified() const { return status == Status::Verified; }
};

/// True when the report stopped at a step that relies on the induced map of
/// P{x3} ("induced-map" or "middle-structure") at a level whose factor fails
/// the commuting square, i.e. the induced map is not well defined there.
bool failed_on_induced_map(const CertificateReport& report);

/// An elementary automorphism sigma(i, 1, f) with f in the kernel of the
/// bracket-killing projection.
bool is_kernel_elementary(const ElementaryAut& phi);

/// Builds an E2 word for eta^e(J2(psi phi psi^-1)) by peeling the factors of
/// psi from the left, one case per restricted factor shape.  Every identity
/// the construction relies on is checked against matrices computed from the
/// conjugates themselves; the first identity that fails stops the build and
/// is reported with its residual.
///
/// Throws std::invalid_argument when psi is not over the restricted factors
/// or phi is not kernel-elementary.
CertificateReport conjugation_certificate(const TameWord& psi, const ElementaryAut& phi);

/// Certificate for theta_1 ... theta_t from certificates of each theta_j:
/// the words are concatenated as word_t ... word_1.  Throws
/// std::invalid_argument when an input is unverified.
CertificateReport certificate_product(std::span<const CertificateReport> reports);

} // namespace fpoisson
