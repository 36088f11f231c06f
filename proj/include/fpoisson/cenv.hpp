#pragma once

#include "fpoisson/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fpoisson {

class PoissonElement;

/// Exponents of m_{g_1..g_k} followed by h_{g_1..g_k}.
using Exponents = std::vector<std::uint16_t>;

struct GradedLex {
    // total degree ascending, then larger exponents on earlier variables first
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Element of the commutative envelope: a polynomial in m_g, h_g over the
/// generator labels `generators` (for C_3^e these are {1,2,3}; for P{x3}^e {3}).
class CEnvElement {
public:
    using Terms = std::map<Exponents, Scalar, GradedLex>;

    explicit CEnvElement(std::vector<int> generators);
    static std::vector<int> labels(int arity);

    static CEnvElement constant(std::vector<int> generators, const Scalar& value);
    static CEnvElement m(std::vector<int> generators, int generator, unsigned power = 1);
    static CEnvElement h(std::vector<int> generators, int generator, unsigned power = 1);

    const std::vector<int>& generators() const { return generators_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    /// position of `generator` inside generators(), or -1
    int slot(int generator) const;

    void add_term(const Exponents& e, const Scalar& c);

    CEnvElement& operator+=(const CEnvElement& other);
    CEnvElement& operator-=(const CEnvElement& other);
    CEnvElement& operator*=(const Scalar& s);
    friend CEnvElement operator+(CEnvElement a, const CEnvElement& b) { return a += b; }
    friend CEnvElement operator-(CEnvElement a, const CEnvElement& b) { return a -= b; }
    friend CEnvElement operator-(CEnvElement a) { return a *= -1; }
    friend CEnvElement operator*(const Scalar& s, CEnvElement a) { return a *= s; }
    friend CEnvElement operator*(const CEnvElement& a, const CEnvElement& b);
    friend bool operator==(const CEnvElement&, const CEnvElement&) = default;

    CEnvElement pow(unsigned exponent) const;

    /// Ring map sending m_g -> m_images[slot], h_g -> h_images[slot]; all images share a ring.
    CEnvElement substitute(const std::vector<CEnvElement>& m_images,
                           const std::vector<CEnvElement>& h_images) const;

    /// Sets every variable whose label is not in `keep` to zero and re-labels onto `keep`.
    CEnvElement restrict_to(const std::vector<int>& keep) const;

private:
    std::vector<int> generators_;
    Terms terms_;
};

inline bool is_zero(const CEnvElement& e) { return e.is_zero(); }

/// M_a in C^e for bracket-free a: the polynomial a(m).
CEnvElement m_polynomial(const PoissonElement& a);
/// H_a in C^e for bracket-free a: sum_k (da/dx_k)(m) h_k.
CEnvElement h_polynomial(const PoissonElement& a);

class CEnvMatrix {
public:
    CEnvMatrix(std::size_t rows, std::size_t cols, std::vector<int> generators);
    CEnvMatrix(std::size_t rows, std::size_t cols, std::vector<CEnvElement> entries);
    static CEnvMatrix identity(std::size_t n, std::vector<int> generators);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<int>& generators() const { return generators_; }
    const CEnvElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    CEnvElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const std::vector<CEnvElement>& entries() const { return entries_; }

    CEnvMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
    bool is_zero() const;

    template <class F>
    CEnvMatrix map(F&& f) const
    {
        std::vector<CEnvElement> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back(f(e));
        return CEnvMatrix(rows_, cols_, std::move(out));
    }

    friend CEnvMatrix operator*(const CEnvMatrix& a, const CEnvMatrix& b);
    friend CEnvMatrix operator+(const CEnvMatrix& a, const CEnvMatrix& b);
    friend CEnvMatrix operator-(const CEnvMatrix& a, const CEnvMatrix& b);
    friend bool operator==(const CEnvMatrix&, const CEnvMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<int> generators_;
    std::vector<CEnvElement> entries_;
};

/// Cofactor expansion along the first row; throws std::invalid_argument when not square.
CEnvElement det(const CEnvMatrix& m);

} // namespace fpoisson
