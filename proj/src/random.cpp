#include "fpoisson/random.hpp"

namespace fpoisson {

std::vector<int> all_generators(int arity)
{
    std::vector<int> out;
    for (int g = 1; g <= arity; ++g) out.push_back(g);
    return out;
}

std::vector<int> generators_without(int arity, int excluded)
{
    std::vector<int> out;
    for (int g = 1; g <= arity; ++g)
        if (g != excluded) out.push_back(g);
    return out;
}

std::uint64_t RandomSource::case_seed(std::uint64_t seed, std::size_t index)
{
    // splitmix64 step
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int RandomSource::uniform(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Scalar RandomSource::scalar(bool nonzero)
{
    int p = uniform(-3, 3);
    while (nonzero && p == 0) p = uniform(-3, 3);
    Scalar s(p, uniform(1, 2));
    s.canonicalize();
    return s;
}

BracketTree RandomSource::tree(const std::vector<int>& generators, int degree)
{
    if (degree <= 1) return BracketTree::leaf(pick(generators));
    const int left = uniform(1, degree - 1);
    return BracketTree::bracket(tree(generators, left), tree(generators, degree - left));
}

PoissonElement RandomSource::monomial(int arity, const std::vector<int>& generators, int degree)
{
    PoissonElement out = PoissonElement::constant(arity, 1);
    while (degree > 0) {
        // short parts are more common, so products of letters and small brackets dominate
        const int part = std::min(degree, uniform(1, 3) == 1 ? uniform(1, degree) : 1 + uniform(0, 1));
        out = out * PoissonElement::lie(arity, lyndon_normalize(tree(generators, part), arity));
        degree -= part;
    }
    return out;
}

PoissonElement RandomSource::element(const ElementShape& shape)
{
    const auto gens = shape.generators.empty() ? all_generators(shape.arity) : shape.generators;
    PoissonElement out(shape.arity);
    const int terms = uniform(1, shape.max_terms);
    for (int t = 0; t < terms; ++t) {
        const int degree = uniform(shape.min_degree, shape.max_degree);
        out += scalar() * (degree == 0 ? PoissonElement::constant(shape.arity, 1) : monomial(shape.arity, gens, degree));
    }
    return out;
}

PoissonElement RandomSource::kernel_element(int arity, const std::vector<int>& generators, int max_degree)
{
    const auto gens = generators.empty() ? all_generators(arity) : generators;
    int budget = uniform(2, std::max(2, max_degree));
    const int da = uniform(1, budget - 1);
    const int db = uniform(1, budget - da);
    budget -= da + db;
    const int dg = uniform(0, budget);
    const int dh = uniform(0, budget - dg);
    const auto part = [&](int min_degree, int degree) {
        return element({arity, gens, min_degree, degree, 2});
    };
    return part(0, dg) * bracket(part(1, da), part(1, db)) * part(0, dh);
}

ElementaryAut RandomSource::elementary(int arity, int max_degree)
{
    const int i = uniform(1, arity);
    PoissonElement f(arity);
    // an empty generator list would mean "all generators" to element()
    if (arity == 1)
        f = PoissonElement::constant(1, scalar(false));
    else if (!coin())
        f = element({arity, generators_without(arity, i), 0, max_degree, 2});
    return ElementaryAut(i, scalar(), std::move(f));
}

ElementaryAut RandomSource::kernel_elementary(int arity, int max_degree)
{
    const int i = uniform(1, arity);
    return ElementaryAut(i, 1, kernel_element(arity, generators_without(arity, i), max_degree));
}

TameWord RandomSource::tame_word(int arity, int max_length, int max_degree, int min_length)
{
    std::vector<ElementaryAut> factors;
    const int length = uniform(min_length, max_length);
    for (int k = 0; k < length; ++k) factors.push_back(elementary(arity, max_degree));
    return TameWord(arity, std::move(factors));
}

TameWord RandomSource::restricted_word(int max_length, int max_degree, int min_length)
{
    std::vector<ElementaryAut> factors;
    const int length = uniform(min_length, max_length);
    for (int k = 0; k < length; ++k) {
        if (uniform(0, 2) == 0) {
            factors.emplace_back(uniform(2, 3), 1, -PoissonElement::generator(3, 1));
        } else {
            factors.emplace_back(1, scalar(), element({3, {2, 3}, 0, max_degree, 2}));
        }
    }
    return TameWord(3, std::move(factors));
}

EnvElement RandomSource::env_element(int arity, int max_degree, int max_word, int max_terms)
{
    EnvElement out(arity);
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> letters;
        const int length = uniform(0, max_word);
        for (int k = 0; k < length; ++k) letters.push_back(uniform(1, arity));
        out.add_term(HWord(letters), element({arity, {}, 0, max_degree, 2}));
    }
    return out;
}

} // namespace fpoisson
