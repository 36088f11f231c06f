#pragma once

#include "fpoisson/cenv.hpp"
#include "fpoisson/endomorphism.hpp"
#include "fpoisson/poisson.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace fpoisson {

/// H_{x_{i1}} ... H_{x_{it}}; the empty word is 1.
class HWord {
public:
    HWord() = default;
    explicit HWord(const std::vector<int>& letters);
    static HWord letter(int generator);

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }
    std::vector<int> letters() const;
    int max_letter() const;

    HWord prefix(std::size_t n) const;
    HWord suffix_from(std::size_t n) const;
    friend HWord operator+(const HWord& a, const HWord& b);

    friend bool operator==(const HWord&, const HWord&) = default;
    friend std::strong_ordering operator<=>(const HWord& a, const HWord& b);

private:
    std::string letters_;
};

/// Element of P_n^e in the normal form sum_i M_{a_i} w_i, each w_i an HWord.
class EnvElement {
public:
    using Terms = std::map<HWord, PoissonElement>;

    explicit EnvElement(int arity);
    static EnvElement one(int arity);
    static EnvElement term(const PoissonElement& coefficient, const HWord& word);

    int arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    PoissonElement coefficient(const HWord& word) const;

    void add_term(const HWord& word, const PoissonElement& coefficient);

    EnvElement& operator+=(const EnvElement& other);
    EnvElement& operator-=(const EnvElement& other);
    EnvElement& operator*=(const Scalar& s);
    friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
    friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
    friend EnvElement operator-(EnvElement a) { return a *= -1; }
    friend EnvElement operator*(const Scalar& s, EnvElement a) { return a *= s; }
    friend bool operator==(const EnvElement&, const EnvElement&) = default;

private:
    int arity_;
    Terms terms_;
};

inline bool is_zero(const EnvElement& e) { return e.is_zero(); }

enum class ReductionOrder {
    // move the last H letter past M_b first (innermost)
    RightmostFirst,
    // reduce the tail of the word first, then move the leading H letter
    LeftmostFirst,
};

/// M_a.
EnvElement m_of(const PoissonElement& a);
/// H_a expanded to normal form; H of a constant is 0.
EnvElement h_of(const PoissonElement& a);
/// H_{x_i}.
EnvElement h_generator(int arity, int generator);

/// Product in P_n^e, normalized with H_a M_b = M_{[a,b]} + M_b H_a.
EnvElement env_mul(const EnvElement& u, const EnvElement& v, ReductionOrder order = ReductionOrder::RightmostFirst);
inline EnvElement operator*(const EnvElement& u, const EnvElement& v) { return env_mul(u, v); }

/// w M_b rewritten in normal form.
EnvElement move_past(const HWord& word, const PoissonElement& b, ReductionOrder order = ReductionOrder::RightmostFirst);

/// phi^e: M_a -> M_{phi(a)}, H_{x_i} -> H_{phi(x_i)}.
EnvElement endo_e(const Endomorphism& phi, const EnvElement& u);

/// pi_n^e : P_n^e -> C_n^e.
CEnvElement project_pi_e(const EnvElement& u);

/// eta^e : C_3^e -> P{x3}^e, killing m1, m2, h1, h2.
CEnvElement eta_e(const CEnvElement& u);
CEnvMatrix eta_e(const CEnvMatrix& m);

/// bar-phi^e on C_n^e; every image of `phi_bar` must be bracket-free.
CEnvElement induced_endo_e(const Endomorphism& phi_bar, const CEnvElement& u);
CEnvMatrix induced_endo_e(const Endomorphism& phi_bar, const CEnvMatrix& m);

} // namespace fpoisson
