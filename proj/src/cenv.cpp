#include "fpoisson/cenv.hpp"

#include "fpoisson/poisson.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fpoisson {

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const
{
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return b < a;
}

namespace {

void require_same_ring(const CEnvElement& a, const CEnvElement& b)
{
    if (a.generators() != b.generators())
        throw std::invalid_argument("envelope elements live over different generator sets");
}

} // namespace

CEnvElement::CEnvElement(std::vector<int> generators) : generators_(std::move(generators)) {}

std::vector<int> CEnvElement::labels(int arity)
{
    std::vector<int> out(static_cast<std::size_t>(arity));
    std::iota(out.begin(), out.end(), 1);
    return out;
}

CEnvElement CEnvElement::constant(std::vector<int> generators, const Scalar& value)
{
    CEnvElement e(std::move(generators));
    e.add_term(Exponents(2 * e.generators_.size(), 0), value);
    return e;
}

CEnvElement CEnvElement::m(std::vector<int> generators, int generator, unsigned power)
{
    CEnvElement e(std::move(generators));
    int s = e.slot(generator);
    if (s < 0) throw std::out_of_range("m" + std::to_string(generator) + " is not a variable of this ring");
    Exponents x(2 * e.generators_.size(), 0);
    x[static_cast<std::size_t>(s)] = static_cast<std::uint16_t>(power);
    e.add_term(x, 1);
    return e;
}

CEnvElement CEnvElement::h(std::vector<int> generators, int generator, unsigned power)
{
    CEnvElement e(std::move(generators));
    int s = e.slot(generator);
    if (s < 0) throw std::out_of_range("h" + std::to_string(generator) + " is not a variable of this ring");
    Exponents x(2 * e.generators_.size(), 0);
    x[e.generators_.size() + static_cast<std::size_t>(s)] = static_cast<std::uint16_t>(power);
    e.add_term(x, 1);
    return e;
}

bool CEnvElement::is_constant() const
{
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Scalar CEnvElement::constant_term() const
{
    auto it = terms_.find(Exponents(2 * generators_.size(), 0));
    return it == terms_.end() ? Scalar(0) : it->second;
}

int CEnvElement::slot(int generator) const
{
    auto it = std::find(generators_.begin(), generators_.end(), generator);
    return it == generators_.end() ? -1 : static_cast<int>(it - generators_.begin());
}

void CEnvElement::add_term(const Exponents& e, const Scalar& c)
{
    if (e.size() != 2 * generators_.size()) throw std::invalid_argument("exponent vector has the wrong length");
    detail::accumulate(terms_, e, c);
}

CEnvElement& CEnvElement::operator+=(const CEnvElement& other)
{
    require_same_ring(*this, other);
    for (const auto& [e, c] : other.terms_) detail::accumulate(terms_, e, c);
    return *this;
}

CEnvElement& CEnvElement::operator-=(const CEnvElement& other)
{
    require_same_ring(*this, other);
    for (const auto& [e, c] : other.terms_) detail::accumulate(terms_, e, Scalar(-c));
    return *this;
}

CEnvElement& CEnvElement::operator*=(const Scalar& s)
{
    if (fpoisson::is_zero(s)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

CEnvElement operator*(const CEnvElement& a, const CEnvElement& b)
{
    require_same_ring(a, b);
    CEnvElement out(a.generators_);
    Exponents x(2 * a.generators_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            detail::accumulate(out.terms_, x, Scalar(ca * cb));
        }
    return out;
}

CEnvElement CEnvElement::pow(unsigned exponent) const
{
    CEnvElement result = constant(generators_, 1);
    CEnvElement base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

CEnvElement CEnvElement::substitute(const std::vector<CEnvElement>& m_images,
                                    const std::vector<CEnvElement>& h_images) const
{
    const std::size_t k = generators_.size();
    if (m_images.size() != k || h_images.size() != k)
        throw std::invalid_argument("substitution needs one image per variable");
    if (k == 0) return *this;
    const auto& target = m_images.front().generators();
    std::vector<std::map<unsigned, CEnvElement>> powers(2 * k);
    auto power = [&](std::size_t var, unsigned e) -> const CEnvElement& {
        auto& cache = powers[var];
        if (auto it = cache.find(e); it != cache.end()) return it->second;
        const CEnvElement& base = var < k ? m_images[var] : h_images[var - k];
        return cache.emplace(e, base.pow(e)).first->second;
    };
    CEnvElement out(target);
    for (const auto& [e, c] : terms_) {
        CEnvElement term = constant(target, c);
        for (std::size_t v = 0; v < 2 * k && !term.is_zero(); ++v)
            if (e[v] != 0) term = term * power(v, e[v]);
        out += term;
    }
    return out;
}

CEnvElement CEnvElement::restrict_to(const std::vector<int>& keep) const
{
    const std::size_t k = generators_.size();
    std::vector<int> source_slot;
    for (int g : keep) {
        int s = slot(g);
        if (s < 0) throw std::out_of_range("cannot keep a variable the ring does not have");
        source_slot.push_back(s);
    }
    CEnvElement out(keep);
    for (const auto& [e, c] : terms_) {
        bool survives = true;
        for (std::size_t s = 0; s < k && survives; ++s) {
            bool kept = std::find(source_slot.begin(), source_slot.end(), static_cast<int>(s)) != source_slot.end();
            if (!kept && (e[s] != 0 || e[k + s] != 0)) survives = false;
        }
        if (!survives) continue;
        Exponents x(2 * keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) {
            auto s = static_cast<std::size_t>(source_slot[j]);
            x[j] = e[s];
            x[keep.size() + j] = e[k + s];
        }
        out.add_term(x, c);
    }
    return out;
}

CEnvElement m_polynomial(const PoissonElement& a)
{
    if (!a.bracket_free()) throw std::invalid_argument("M_a in C^e needs a bracket-free a");
    const int n = a.arity();
    CEnvElement out(CEnvElement::labels(n));
    for (const auto& [mono, c] : a.terms()) {
        Exponents x(2 * static_cast<std::size_t>(n), 0);
        for (const auto& w : mono.factors()) ++x[static_cast<std::size_t>(w.first() - 1)];
        out.add_term(x, c);
    }
    return out;
}

CEnvElement h_polynomial(const PoissonElement& a)
{
    if (!a.bracket_free()) throw std::invalid_argument("H_a in C^e needs a bracket-free a");
    const auto n = static_cast<std::size_t>(a.arity());
    CEnvElement out(CEnvElement::labels(a.arity()));
    for (const auto& [mono, c] : a.terms()) {
        Exponents x(2 * n, 0);
        for (const auto& w : mono.factors()) ++x[static_cast<std::size_t>(w.first() - 1)];
        for (std::size_t k = 0; k < n; ++k) {
            if (x[k] == 0) continue;
            Exponents d = x;
            Scalar coefficient = c * x[k];
            --d[k];
            ++d[n + k];
            out.add_term(d, coefficient);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

CEnvMatrix::CEnvMatrix(std::size_t rows, std::size_t cols, std::vector<int> generators)
    : rows_(rows), cols_(cols), generators_(std::move(generators))
{
    entries_.assign(rows * cols, CEnvElement(generators_));
}

CEnvMatrix::CEnvMatrix(std::size_t rows, std::size_t cols, std::vector<CEnvElement> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows * cols) throw std::invalid_argument("matrix is not rectangular");
    if (entries_.empty()) throw std::invalid_argument("an empty matrix needs explicit generators");
    generators_ = entries_.front().generators();
    for (const auto& e : entries_)
        if (e.generators() != generators_) throw std::invalid_argument("matrix entries over different rings");
}

CEnvMatrix CEnvMatrix::identity(std::size_t n, std::vector<int> generators)
{
    CEnvMatrix out(n, n, generators);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = CEnvElement::constant(generators, 1);
    return out;
}

CEnvMatrix CEnvMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const
{
    if (row0 + rows > rows_ || col0 + cols > cols_) throw std::out_of_range("block outside the matrix");
    CEnvMatrix out(rows, cols, generators_);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(row0 + r, col0 + c);
    return out;
}

bool CEnvMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const CEnvElement& e) { return e.is_zero(); });
}

CEnvMatrix operator*(const CEnvMatrix& a, const CEnvMatrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not compose");
    if (a.generators_ != b.generators_) throw std::invalid_argument("matrices over different rings");
    CEnvMatrix out(a.rows_, b.cols_, a.generators_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            CEnvElement s(a.generators_);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                s += a(i, k) * b(k, j);
            }
            out(i, j) = std::move(s);
        }
    return out;
}

CEnvMatrix operator+(const CEnvMatrix& a, const CEnvMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes differ");
    CEnvMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
}

CEnvMatrix operator-(const CEnvMatrix& a, const CEnvMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes differ");
    CEnvMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
    return out;
}

namespace {

CEnvElement cofactor_det(const CEnvMatrix& m, std::vector<std::size_t>& columns, std::size_t row)
{
    if (row == m.rows()) return CEnvElement::constant(m.generators(), 1);
    CEnvElement out(m.generators());
    int sign = 1;
    for (std::size_t k = 0; k < columns.size(); ++k) {
        std::size_t col = columns[k];
        if (!m(row, col).is_zero()) {
            columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(k));
            CEnvElement minor = cofactor_det(m, columns, row + 1);
            columns.insert(columns.begin() + static_cast<std::ptrdiff_t>(k), col);
            CEnvElement term = m(row, col) * minor;
            if (sign > 0)
                out += term;
            else
                out -= term;
        }
        sign = -sign;
    }
    return out;
}

} // namespace

CEnvElement det(const CEnvMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    std::vector<std::size_t> columns(m.cols());
    std::iota(columns.begin(), columns.end(), 0);
    return cofactor_det(m, columns, 0);
}

} // namespace fpoisson
