#pragma once

#include "fpoisson/endomorphism.hpp"
#include "fpoisson/poisson.hpp"

#include <string>
#include <vector>

namespace fpoisson {

/// sigma(i, alpha, f) = (x1, ..., alpha x_i + f, ..., xn), alpha != 0 and f free of x_i.
class ElementaryAut {
public:
    ElementaryAut(int index, Scalar alpha, PoissonElement f);

    int index() const { return index_; }
    const Scalar& alpha() const { return alpha_; }
    const PoissonElement& f() const { return f_; }
    int arity() const { return f_.arity(); }

    Endomorphism to_endo() const;
    /// sigma(i, 1/alpha, -f/alpha)
    ElementaryAut inverse() const;

    friend bool operator==(const ElementaryAut&, const ElementaryAut&) = default;

private:
    int index_;
    Scalar alpha_;
    PoissonElement f_;
};

Endomorphism elem_to_endo(const ElementaryAut& sigma);
ElementaryAut elem_inverse(const ElementaryAut& sigma);

/// A product sigma_k ... sigma_1 stored in written order: factors()[0] is the
/// leftmost factor, which acts last.
class TameWord {
public:
    explicit TameWord(int arity, std::vector<ElementaryAut> factors = {});

    int arity() const { return arity_; }
    const std::vector<ElementaryAut>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }

    Endomorphism evaluate() const;
    TameWord inverse() const;

    friend TameWord operator*(const TameWord& a, const TameWord& b);
    friend bool operator==(const TameWord&, const TameWord&) = default;

private:
    int arity_;
    std::vector<ElementaryAut> factors_;
};

Endomorphism word_to_endo(const TameWord& w);

/// sigma_pq = sigma(q,-1,x_p) sigma(p,1,-x_q) sigma(q,1,x_p).
TameWord transposition_word(int arity, int p, int q);
/// sigma_1j = sigma(1,-1,0) sigma(1,1,x_j) sigma(j,1,-x_1) sigma(1,1,x_j), j > 1.
TameWord transposition_word_via_first(int arity, int j);
/// The swap of x_p and x_q as an endomorphism.
Endomorphism swap_endo(int arity, int p, int q);

/// sigma(1, alpha, g) or sigma(j, 1, -x1) with j in {2, 3}.
bool is_restricted(const ElementaryAut& sigma);
bool is_restricted(const TameWord& w);

/// Rewrites an arity-3 word over the restricted factors, expanding each other
/// factor as sigma(j,a,g) = sigma_1j sigma(1, a, sigma_1j(g)) sigma_1j.
TameWord normalize_generators(const TameWord& w);

struct RelationReport {
    int relation;
    bool equal;
    Endomorphism lhs;
    Endomorphism rhs;
    std::string description;
};

/// sigma(i,a,f) sigma(i,b,g) = sigma(i, ab, bf + g)
RelationReport check_relation_product(int i, const Scalar& alpha, const PoissonElement& f, const Scalar& beta,
                                      const PoissonElement& g);
/// sigma(i,a,f)^-1 sigma(j,b,g) sigma(i,a,f) = sigma(j, b, sigma(i,a,f)^-1(g)),
/// i != j, f free of x_i and x_j.
RelationReport check_relation_conjugation(int i, const Scalar& alpha, const PoissonElement& f, int j,
                                          const Scalar& beta, const PoissonElement& g);
/// sigma_pq sigma(i,a,f) sigma_pq = sigma(j, a, sigma_pq(f)) with x_j = sigma_pq(x_i).
RelationReport check_relation_transposition(int p, int q, const ElementaryAut& sigma);

/// delta = (x1 + [x3, w], x2 + w x3, x3), w = x1 x3 - [x3, x2], in arity 3
/// (or extended by fixing x4.. when arity > 3).
Endomorphism delta(int arity = 3);
Endomorphism delta_inverse(int arity = 3);
/// w = x1 x3 - [x3, x2]
PoissonElement delta_fixed_element(int arity = 3);

} // namespace fpoisson
