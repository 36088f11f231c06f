#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace fpoisson {

// Exact rationals; gmp keeps every result in lowest terms with a positive denominator.
using Scalar = mpq_class;

std::string to_string(const Scalar& value);

// Accepts "p" or "p/q" with an optional leading sign.
Scalar parse_scalar(std::string_view text);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

namespace detail {

// Adds `value` to the coefficient stored under `key`, erasing the entry when it cancels.
template <class Map, class Key, class Value>
void accumulate(Map& terms, const Key& key, const Value& value)
{
    if (is_zero(value)) return;
    auto [it, inserted] = terms.try_emplace(key, value);
    if (inserted) return;
    it->second += value;
    if (is_zero(it->second)) terms.erase(it);
}

} // namespace detail
} // namespace fpoisson
