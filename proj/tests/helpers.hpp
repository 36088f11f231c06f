#pragma once

#include "fpoisson/expr.hpp"

#include <map>
#include <string>

namespace test {

using namespace fpoisson;

inline PoissonElement p3(const char* text) { return parse_element(text, 3); }
inline PoissonElement p4(const char* text) { return parse_element(text, 4); }

inline const std::vector<int> kX3{3};
inline CEnvElement c3(const char* text) { return parse_cenv(text, kX3); }
inline CEnvElement c123(const char* text) { return parse_cenv(text, {1, 2, 3}); }

/// Free associative algebra over the generator indices, for oracle checks.
using Assoc = std::map<std::string, Scalar>;

inline Assoc assoc_mul(const Assoc& a, const Assoc& b)
{
    Assoc out;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) detail::accumulate(out, u + v, Scalar(x * y));
    return out;
}

inline Assoc assoc_commutator(const Assoc& a, const Assoc& b)
{
    Assoc out = assoc_mul(a, b);
    for (const auto& [w, c] : assoc_mul(b, a)) detail::accumulate(out, w, Scalar(-c));
    return out;
}

inline Assoc assoc_of(const BracketTree& t)
{
    if (t.is_leaf()) return {{std::string(1, static_cast<char>(t.generator())), Scalar(1)}};
    return assoc_commutator(assoc_of(t.left()), assoc_of(t.right()));
}

/// Expansion of a basis element from its standard bracketing, built here
/// without the library's expansion routine.
inline Assoc assoc_of(const LyndonWord& w)
{
    if (w.is_letter()) return {{std::string(1, static_cast<char>(w.first())), Scalar(1)}};
    auto [u, v] = w.standard_factorization();
    return assoc_commutator(assoc_of(u), assoc_of(v));
}

inline Assoc assoc_of(const LieElement& e)
{
    Assoc out;
    for (const auto& [w, c] : e.terms())
        for (const auto& [x, d] : assoc_of(w)) detail::accumulate(out, x, Scalar(c * d));
    return out;
}

} // namespace test
