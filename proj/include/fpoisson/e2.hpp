#pragma once

#include "fpoisson/cenv.hpp"

#include <vector>

namespace fpoisson {

struct E2Factor {
    enum class Kind { Lower, Upper };
    Kind kind;
    CEnvElement entry;

    friend bool operator==(const E2Factor&, const E2Factor&) = default;
};

/// E12(a) = [[1,a],[0,1]]
CEnvMatrix elementary_upper(const CEnvElement& a);
/// E21(a) = [[1,0],[a,1]]
CEnvMatrix elementary_lower(const CEnvElement& a);

/// Word in the elementary 2x2 matrices E21(a) (Lower) and E12(a) (Upper) over
/// one commutative envelope ring.  Factors with a zero entry are dropped on push.
class E2Word {
public:
    explicit E2Word(std::vector<int> generators);
    static E2Word lower(const CEnvElement& a);
    static E2Word upper(const CEnvElement& a);

    const std::vector<int>& generators() const { return generators_; }
    const std::vector<E2Factor>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }

    void push(E2Factor factor);
    E2Word& operator+=(const E2Word& other);
    friend E2Word operator+(E2Word a, const E2Word& b) { return a += b; }

    /// D^-1 X D for D = diag(alpha, 1): Upper(a) -> Upper(a/alpha), Lower(a) -> Lower(alpha a).
    E2Word conjugated_by_diagonal(const Scalar& alpha) const;

    friend bool operator==(const E2Word&, const E2Word&) = default;

private:
    std::vector<int> generators_;
    std::vector<E2Factor> factors_;
};

/// Left-to-right product of the factors; the identity for the empty word.
CEnvMatrix e2_product(const E2Word& word);

} // namespace fpoisson
