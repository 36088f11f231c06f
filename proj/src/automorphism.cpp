#include "fpoisson/automorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpoisson {

ElementaryAut::ElementaryAut(int index, Scalar alpha, PoissonElement f)
    : index_(index), alpha_(std::move(alpha)), f_(std::move(f))
{
    if (index_ < 1 || index_ > f_.arity())
        throw std::out_of_range("elementary automorphism index " + std::to_string(index_) + " outside arity " +
                                std::to_string(f_.arity()));
    if (fpoisson::is_zero(alpha_)) throw std::invalid_argument("elementary automorphism needs alpha != 0");
    if (f_.involves(index_))
        throw std::invalid_argument("f of sigma(" + std::to_string(index_) + ", ., f) involves x" +
                                    std::to_string(index_));
}

Endomorphism ElementaryAut::to_endo() const
{
    Endomorphism id = Endomorphism::identity(arity());
    std::vector<PoissonElement> images = id.images();
    images[static_cast<std::size_t>(index_ - 1)] = alpha_ * PoissonElement::generator(arity(), index_) + f_;
    return Endomorphism(std::move(images));
}

ElementaryAut ElementaryAut::inverse() const
{
    Scalar inv = 1 / alpha_;
    return ElementaryAut(index_, inv, -inv * f_);
}

Endomorphism elem_to_endo(const ElementaryAut& sigma) { return sigma.to_endo(); }
ElementaryAut elem_inverse(const ElementaryAut& sigma) { return sigma.inverse(); }

// ---------------------------------------------------------------------------

TameWord::TameWord(int arity, std::vector<ElementaryAut> factors) : arity_(arity), factors_(std::move(factors))
{
    if (arity_ < 1) throw std::invalid_argument("arity must be positive");
    for (const auto& s : factors_) require_same_arity(arity_, s.arity());
}

Endomorphism TameWord::evaluate() const
{
    Endomorphism out = Endomorphism::identity(arity_);
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) out = compose(it->to_endo(), out);
    return out;
}

TameWord TameWord::inverse() const
{
    std::vector<ElementaryAut> factors;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) factors.push_back(it->inverse());
    return TameWord(arity_, std::move(factors));
}

TameWord operator*(const TameWord& a, const TameWord& b)
{
    require_same_arity(a.arity_, b.arity_);
    std::vector<ElementaryAut> factors = a.factors_;
    factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
    return TameWord(a.arity_, std::move(factors));
}

Endomorphism word_to_endo(const TameWord& w) { return w.evaluate(); }

TameWord transposition_word(int arity, int p, int q)
{
    if (p == q) throw std::invalid_argument("transposition needs p != q");
    auto x = [arity](int i) { return PoissonElement::generator(arity, i); };
    return TameWord(arity, {ElementaryAut(q, -1, x(p)), ElementaryAut(p, 1, -x(q)), ElementaryAut(q, 1, x(p))});
}

TameWord transposition_word_via_first(int arity, int j)
{
    if (j <= 1 || j > arity) throw std::invalid_argument("sigma_1j needs 1 < j <= arity");
    auto x = [arity](int i) { return PoissonElement::generator(arity, i); };
    return TameWord(arity, {ElementaryAut(1, -1, PoissonElement(arity)), ElementaryAut(1, 1, x(j)),
                            ElementaryAut(j, 1, -x(1)), ElementaryAut(1, 1, x(j))});
}

Endomorphism swap_endo(int arity, int p, int q)
{
    if (p == q) throw std::invalid_argument("swap needs p != q");
    std::vector<PoissonElement> images = Endomorphism::identity(arity).images();
    std::swap(images.at(static_cast<std::size_t>(p - 1)), images.at(static_cast<std::size_t>(q - 1)));
    return Endomorphism(std::move(images));
}

bool is_restricted(const ElementaryAut& sigma)
{
    if (sigma.arity() != 3) return false;
    if (sigma.index() == 1) return true;
    return sigma.alpha() == 1 && sigma.f() == -PoissonElement::generator(3, 1);
}

bool is_restricted(const TameWord& w)
{
    return std::all_of(w.factors().begin(), w.factors().end(),
                       [](const ElementaryAut& s) { return is_restricted(s); });
}

TameWord normalize_generators(const TameWord& w)
{
    if (w.arity() != 3) throw std::invalid_argument("generator normalization is defined for arity 3");
    TameWord out(3);
    for (const auto& sigma : w.factors()) {
        if (is_restricted(sigma)) {
            out = out * TameWord(3, {sigma});
            continue;
        }
        int j = sigma.index();
        TameWord swap = transposition_word_via_first(3, j);
        PoissonElement g = swap_endo(3, 1, j).apply(sigma.f());
        out = out * swap * TameWord(3, {ElementaryAut(1, sigma.alpha(), g)}) * swap;
    }
    return out;
}

// ---------------------------------------------------------------------------

RelationReport check_relation_product(int i, const Scalar& alpha, const PoissonElement& f, const Scalar& beta,
                                      const PoissonElement& g)
{
    ElementaryAut a(i, alpha, f), b(i, beta, g);
    Endomorphism lhs = compose(a.to_endo(), b.to_endo());
    Endomorphism rhs = ElementaryAut(i, alpha * beta, beta * f + g).to_endo();
    bool eq = lhs == rhs;
    return {2, eq, std::move(lhs), std::move(rhs), "sigma(i,a,f) sigma(i,b,g) = sigma(i,ab,bf+g)"};
}

RelationReport check_relation_conjugation(int i, const Scalar& alpha, const PoissonElement& f, int j,
                                          const Scalar& beta, const PoissonElement& g)
{
    if (i == j) throw std::invalid_argument("conjugation relation needs i != j");
    if (f.involves(j)) throw std::invalid_argument("conjugation relation needs f free of x_i and x_j");
    ElementaryAut s(i, alpha, f), t(j, beta, g);
    Endomorphism s_inv = s.inverse().to_endo();
    Endomorphism lhs = compose(s_inv, compose(t.to_endo(), s.to_endo()));
    Endomorphism rhs = ElementaryAut(j, beta, s_inv.apply(g)).to_endo();
    bool eq = lhs == rhs;
    return {3, eq, std::move(lhs), std::move(rhs),
            "sigma(i,a,f)^-1 sigma(j,b,g) sigma(i,a,f) = sigma(j,b,sigma(i,a,f)^-1(g))"};
}

RelationReport check_relation_transposition(int p, int q, const ElementaryAut& sigma)
{
    const int n = sigma.arity();
    Endomorphism swap = swap_endo(n, p, q);
    int i = sigma.index();
    int j = i == p ? q : (i == q ? p : i);
    Endomorphism lhs = compose(swap, compose(sigma.to_endo(), swap));
    Endomorphism rhs = ElementaryAut(j, sigma.alpha(), swap.apply(sigma.f())).to_endo();
    bool eq = lhs == rhs;
    return {4, eq, std::move(lhs), std::move(rhs), "sigma_pq sigma(i,a,f) sigma_pq = sigma(j,a,sigma_pq(f))"};
}

// ---------------------------------------------------------------------------

PoissonElement delta_fixed_element(int arity)
{
    if (arity < 3) throw std::invalid_argument("delta needs at least three generators");
    auto x = [arity](int i) { return PoissonElement::generator(arity, i); };
    return x(1) * x(3) - bracket(x(3), x(2));
}

Endomorphism delta(int arity)
{
    auto x = [arity](int i) { return PoissonElement::generator(arity, i); };
    PoissonElement w = delta_fixed_element(arity);
    std::vector<PoissonElement> images = Endomorphism::identity(arity).images();
    images[0] = x(1) + bracket(x(3), w);
    images[1] = x(2) + w * x(3);
    return Endomorphism(std::move(images));
}

Endomorphism delta_inverse(int arity)
{
    auto x = [arity](int i) { return PoissonElement::generator(arity, i); };
    PoissonElement w = delta_fixed_element(arity);
    std::vector<PoissonElement> images = Endomorphism::identity(arity).images();
    images[0] = x(1) - bracket(x(3), w);
    images[1] = x(2) - w * x(3);
    return Endomorphism(std::move(images));
}

} // namespace fpoisson
