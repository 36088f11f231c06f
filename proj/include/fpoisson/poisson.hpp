#pragma once

#include "fpoisson/lyndon.hpp"
#include "fpoisson/scalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fpoisson {

/// Commutative monomial in Lyndon basis elements; the empty product is 1.
/// Factors are kept sorted by (length, lex).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<LyndonWord> factors);
    static Monomial of(LyndonWord word);

    const std::vector<LyndonWord>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int degree() const;
    bool bracket_free() const;
    bool involves(int generator) const;
    int max_letter() const;

    Monomial without(std::size_t index) const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // degree first, then lexicographic on the sorted factor lists
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<LyndonWord> factors_;
};

/// Element of the free Poisson algebra P_n: a polynomial in the Lyndon basis
/// of the free Lie algebra on x1..xn.  Every element knows its arity n, and
/// binary operations reject mixed arities with std::invalid_argument.
class PoissonElement {
public:
    using Terms = std::map<Monomial, Scalar>;

    explicit PoissonElement(int arity);
    PoissonElement(int arity, Terms terms);

    static PoissonElement constant(int arity, const Scalar& value);
    static PoissonElement generator(int arity, int index);
    static PoissonElement monomial(int arity, const Monomial& m, const Scalar& coefficient = 1);
    static PoissonElement lie(int arity, const LieElement& element);

    int arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    Scalar coefficient(const Monomial& m) const;
    int degree() const;
    bool bracket_free() const;
    bool involves(int generator) const;

    void add_term(const Monomial& m, const Scalar& coefficient);

    PoissonElement& operator+=(const PoissonElement& other);
    PoissonElement& operator-=(const PoissonElement& other);
    PoissonElement& operator*=(const Scalar& factor);
    friend PoissonElement operator+(PoissonElement a, const PoissonElement& b) { return a += b; }
    friend PoissonElement operator-(PoissonElement a, const PoissonElement& b) { return a -= b; }
    friend PoissonElement operator-(PoissonElement a) { return a *= -1; }
    friend PoissonElement operator*(const Scalar& s, PoissonElement a) { return a *= s; }
    friend PoissonElement operator*(const PoissonElement& a, const PoissonElement& b);
    friend bool operator==(const PoissonElement&, const PoissonElement&) = default;

    PoissonElement pow(unsigned exponent) const;

private:
    int arity_;
    Terms terms_;
};

inline bool is_zero(const PoissonElement& e) { return e.is_zero(); }

void require_same_arity(int a, int b);

/// Poisson bracket, extended from the Lyndon bracket by the Leibniz rule in both arguments.
PoissonElement bracket(const PoissonElement& a, const PoissonElement& b);

/// Image under the projection P_n -> C_n killing brackets.
PoissonElement project_pi(const PoissonElement& a);

/// (f0, f1) with f0 bracket-free, f1 in the kernel of the projection and a = f0 + f1.
std::pair<PoissonElement, PoissonElement> split_kernel(const PoissonElement& a);

} // namespace fpoisson
