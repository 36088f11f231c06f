#include "fpoisson/poisson.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpoisson {

Monomial::Monomial(std::vector<LyndonWord> factors) : factors_(std::move(factors))
{
    std::sort(factors_.begin(), factors_.end());
}

Monomial Monomial::of(LyndonWord word)
{
    Monomial m;
    m.factors_.push_back(std::move(word));
    return m;
}

int Monomial::degree() const
{
    int d = 0;
    for (const auto& w : factors_) d += static_cast<int>(w.length());
    return d;
}

bool Monomial::bracket_free() const
{
    return std::all_of(factors_.begin(), factors_.end(), [](const LyndonWord& w) { return w.is_letter(); });
}

bool Monomial::involves(int generator) const
{
    return std::any_of(factors_.begin(), factors_.end(),
                       [generator](const LyndonWord& w) { return w.contains(generator); });
}

int Monomial::max_letter() const
{
    int m = 0;
    for (const auto& w : factors_) m = std::max(m, w.max_letter());
    return m;
}

Monomial Monomial::without(std::size_t index) const
{
    Monomial m;
    m.factors_.reserve(factors_.size() - 1);
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (i != index) m.factors_.push_back(factors_[i]);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m;
    m.factors_.reserve(a.factors_.size() + b.factors_.size());
    std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
               std::back_inserter(m.factors_));
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                  b.factors_.end());
}

// ---------------------------------------------------------------------------

void require_same_arity(int a, int b)
{
    if (a != b)
        throw std::invalid_argument("arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

PoissonElement::PoissonElement(int arity) : arity_(arity)
{
    if (arity < 1) throw std::invalid_argument("arity must be positive");
}

PoissonElement::PoissonElement(int arity, Terms terms) : PoissonElement(arity)
{
    for (auto& [m, c] : terms) add_term(m, c);
}

PoissonElement PoissonElement::constant(int arity, const Scalar& value)
{
    PoissonElement e(arity);
    e.add_term(Monomial{}, value);
    return e;
}

PoissonElement PoissonElement::generator(int arity, int index)
{
    PoissonElement e(arity);
    e.add_term(Monomial::of(LyndonWord::letter(index)), 1);
    return e;
}

PoissonElement PoissonElement::monomial(int arity, const Monomial& m, const Scalar& coefficient)
{
    PoissonElement e(arity);
    e.add_term(m, coefficient);
    return e;
}

PoissonElement PoissonElement::lie(int arity, const LieElement& element)
{
    PoissonElement e(arity);
    for (const auto& [w, c] : element.terms()) e.add_term(Monomial::of(w), c);
    return e;
}

bool PoissonElement::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Scalar PoissonElement::constant_term() const
{
    return coefficient(Monomial{});
}

Scalar PoissonElement::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int PoissonElement::degree() const
{
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool PoissonElement::bracket_free() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.bracket_free(); });
}

bool PoissonElement::involves(int generator) const
{
    return std::any_of(terms_.begin(), terms_.end(),
                       [generator](const auto& t) { return t.first.involves(generator); });
}

void PoissonElement::add_term(const Monomial& m, const Scalar& coefficient)
{
    if (m.max_letter() > arity_)
        throw std::out_of_range("generator x" + std::to_string(m.max_letter()) + " outside arity " +
                                std::to_string(arity_));
    detail::accumulate(terms_, m, coefficient);
}

PoissonElement& PoissonElement::operator+=(const PoissonElement& other)
{
    require_same_arity(arity_, other.arity_);
    for (const auto& [m, c] : other.terms_) detail::accumulate(terms_, m, c);
    return *this;
}

PoissonElement& PoissonElement::operator-=(const PoissonElement& other)
{
    require_same_arity(arity_, other.arity_);
    for (const auto& [m, c] : other.terms_) detail::accumulate(terms_, m, Scalar(-c));
    return *this;
}

PoissonElement& PoissonElement::operator*=(const Scalar& factor)
{
    if (fpoisson::is_zero(factor)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= factor;
    return *this;
}

PoissonElement operator*(const PoissonElement& a, const PoissonElement& b)
{
    require_same_arity(a.arity_, b.arity_);
    PoissonElement out(a.arity_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) detail::accumulate(out.terms_, ma * mb, Scalar(ca * cb));
    return out;
}

PoissonElement PoissonElement::pow(unsigned exponent) const
{
    PoissonElement result = constant(arity_, 1);
    PoissonElement base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------------------

PoissonElement bracket(const PoissonElement& a, const PoissonElement& b)
{
    require_same_arity(a.arity(), b.arity());
    PoissonElement::Terms out;
    for (const auto& [ma, ca] : a.terms()) {
        const auto& fa = ma.factors();
        for (const auto& [mb, cb] : b.terms()) {
            const auto& fb = mb.factors();
            Scalar c = ca * cb;
            // [A, B] = sum_{i,j} (A / a_i)(B / b_j) [a_i, b_j]
            for (std::size_t i = 0; i < fa.size(); ++i) {
                Monomial rest_a = ma.without(i);
                for (std::size_t j = 0; j < fb.size(); ++j) {
                    const LieElement& lie = lie_bracket(fa[i], fb[j]);
                    if (lie.is_zero()) continue;
                    Monomial rest = rest_a * mb.without(j);
                    for (const auto& [w, d] : lie.terms())
                        detail::accumulate(out, rest * Monomial::of(w), Scalar(c * d));
                }
            }
        }
    }
    return PoissonElement(a.arity(), std::move(out));
}

PoissonElement project_pi(const PoissonElement& a)
{
    PoissonElement out(a.arity());
    for (const auto& [m, c] : a.terms())
        if (m.bracket_free()) out.add_term(m, c);
    return out;
}

std::pair<PoissonElement, PoissonElement> split_kernel(const PoissonElement& a)
{
    PoissonElement f0 = project_pi(a);
    return {f0, a - f0};
}

} // namespace fpoisson
