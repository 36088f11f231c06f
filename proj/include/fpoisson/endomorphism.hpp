#pragma once

#include "fpoisson/poisson.hpp"

#include <vector>

namespace fpoisson {

/// phi = (f1, ..., fn): the endomorphism of P_n with phi(x_i) = f_i.
class Endomorphism {
public:
    explicit Endomorphism(std::vector<PoissonElement> images);
    static Endomorphism identity(int arity);

    int arity() const { return static_cast<int>(images_.size()); }
    const std::vector<PoissonElement>& images() const { return images_; }
    /// 1-based.
    const PoissonElement& image(int index) const;

    PoissonElement apply(const PoissonElement& a) const;
    bool is_identity() const;
    bool bracket_free() const;

    friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

private:
    std::vector<PoissonElement> images_;
};

/// Homomorphic extension of phi applied to a.
PoissonElement apply_endo(const Endomorphism& phi, const PoissonElement& a);

/// (phi psi)(x_i) = phi(psi(x_i)).
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);

/// The induced endomorphism of C_n: every image projected to its bracket-free part.
Endomorphism bar(const Endomorphism& phi);

} // namespace fpoisson
