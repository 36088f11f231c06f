#pragma once

#include "fpoisson/cenv.hpp"
#include "fpoisson/endomorphism.hpp"
#include "fpoisson/envelope.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fpoisson {

/// d a / d x_j in P_n^e:
///   d x_i/d x_j = delta_ij,  d(ab) = M_a db + M_b da,  d[a,b] = H_a db - H_b da.
EnvElement fox_derivative(const PoissonElement& a, int j);

/// pi_n^e(d a / d x_j) evaluated directly in C_n^e, without building the
/// P_n^e normal form first.
CEnvElement projected_fox_derivative(const PoissonElement& a, int j);

/// d[a_1, ..., a_t]/d x_r by the closed form
///   sum_j (-H_{a_t}) ... (-H_{a_{j+1}}) H_{[a_1..a_{j-1}]} d a_j / d x_r
/// where [a_1..a_t] is the left-nested bracket and the H factor is absent for j = 1.
EnvElement iterated_bracket_derivative(std::span<const PoissonElement> args, int r);

/// [[a_1, a_2], ..., a_t]
PoissonElement left_nested_bracket(std::span<const PoissonElement> args);

/// Entry (i, j) is pi^e(d phi(x_i) / d x_j).
CEnvMatrix jacobian(const Endomorphism& phi);

/// The same matrix computed the long way: full Fox derivatives in P_n^e, then projected.
CEnvMatrix jacobian_via_envelope(const Endomorphism& phi);

/// Upper-left 2x2 block of the Jacobian of an arity-3 endomorphism.
CEnvMatrix jacobian2(const Endomorphism& phi);

struct ChainRuleReport {
    bool holds = false;
    CEnvMatrix lhs;   // J(phi psi)
    CEnvMatrix rhs;   // bar-phi^e(J(psi)) J(phi)
    // J(psi) bar-psi^e(J(psi^-1)) == I, checked when an inverse is supplied
    std::optional<bool> inverse_identity;
    std::string detail;
};

ChainRuleReport chain_rule_check(const Endomorphism& phi, const Endomorphism& psi,
                                 const std::optional<Endomorphism>& psi_inverse = std::nullopt);

} // namespace fpoisson
