#pragma once

#include "fpoisson/automorphism.hpp"
#include "fpoisson/cenv.hpp"

#include <string>
#include <vector>

namespace fpoisson {

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

/// Named list of exact checks plus free-form log lines.
struct VerificationReport {
    std::string name;
    std::vector<Check> checks{};
    std::vector<std::string> log{};

    bool passed() const;
    bool check(std::string check_name, bool ok, std::string detail = {});
};

/// delta(w) == w for w = x1 x3 - [x3, x2].
VerificationReport verify_delta_fixed_element();

/// With psi = (x1, x2 - x1 x3^2, x3): bar(delta) bar(psi) = id, the chain-rule
/// factorization of eta^e(J(delta psi)), its 2x2 block as E21(-m3^2) times the
/// Cohn block, and determinant 1.  That the Cohn block lies outside E2 is a
/// cited theorem and only logged.
VerificationReport verify_wildness_witness();

/// The eight factors phi_1..phi_8 (phi_1 acts first) whose product in arity 4
/// extends delta.
std::vector<ElementaryAut> stable_tameness_factors();

/// Replays phi_8 ... phi_1 stage by stage against the recorded image chains of
/// x1..x4 and checks the product equals delta extended by x4.
VerificationReport verify_stable_tameness();

/// Matrices of the witness over the ring in m3, h3.
CEnvMatrix witness_left_factor();    // [[1,0,0],[-m3^2,1,0],[0,0,1]]
CEnvMatrix witness_right_factor();   // [[1+m3h3,-h3^2,0],[m3^2,1-m3h3,0],[0,0,1]]
CEnvMatrix cohn_block();             // [[1+m3h3,-h3^2],[m3^2,1-m3h3]]

} // namespace fpoisson
