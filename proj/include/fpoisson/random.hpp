#pragma once

#include "fpoisson/automorphism.hpp"
#include "fpoisson/envelope.hpp"
#include "fpoisson/lyndon.hpp"
#include "fpoisson/poisson.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fpoisson {

struct ElementShape {
    int arity = 3;
    std::vector<int> generators;   // allowed letters; empty means all of 1..arity
    int min_degree = 1;
    int max_degree = 3;
    int max_terms = 3;
};

/// Seeded source of random test objects.  Identical seeds give identical objects.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Seed for case `index` of a run started with `seed`; cases are independent of each other.
    static std::uint64_t case_seed(std::uint64_t seed, std::size_t index);

    int uniform(int lo, int hi);
    bool coin() { return uniform(0, 1) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& items)
    {
        return items[static_cast<std::size_t>(uniform(0, static_cast<int>(items.size()) - 1))];
    }

    /// p/q with |p| <= 3, q in {1, 2}.
    Scalar scalar(bool nonzero = true);
    BracketTree tree(const std::vector<int>& generators, int degree);
    /// Product of normalized random bracket trees of total degree `degree`.
    PoissonElement monomial(int arity, const std::vector<int>& generators, int degree);
    PoissonElement element(const ElementShape& shape);
    /// g [a, b] h with a, b of positive degree and total degree <= max_degree (>= 2).
    PoissonElement kernel_element(int arity, const std::vector<int>& generators, int max_degree);

    /// sigma(i, alpha, f) with f of degree <= max_degree.
    ElementaryAut elementary(int arity, int max_degree);
    /// sigma(i, 1, f) with f in the bracket ideal.
    ElementaryAut kernel_elementary(int arity, int max_degree);
    TameWord tame_word(int arity, int max_length, int max_degree, int min_length = 0);
    /// arity 3, factors sigma(1, alpha, g) or sigma(j, 1, -x1), j in {2, 3}.
    TameWord restricted_word(int max_length, int max_degree, int min_length = 0);
    /// sum of M_a w with H-words of length <= max_word.
    EnvElement env_element(int arity, int max_degree, int max_word, int max_terms = 2);

private:
    std::mt19937_64 engine_;
};

std::vector<int> all_generators(int arity);
std::vector<int> generators_without(int arity, int excluded);

} // namespace fpoisson
