#pragma once

#include "fpoisson/witness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fpoisson {

struct SuiteInfo {
    std::string name;
    std::string description;
    std::size_t default_trials;   // 0 for deterministic suites
};

inline constexpr std::uint64_t kDefaultSeed = 7;

const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo* find_suite(std::string_view name);

struct SuiteOptions {
    std::optional<std::size_t> trials;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;   // 0: hardware concurrency
};

/// Runs a named suite.  Randomized suites derive case k from (seed, k), so
/// the report does not depend on the thread count.  Throws
/// std::invalid_argument for an unknown name.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options = {});

} // namespace fpoisson
