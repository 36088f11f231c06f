// Runs every acceptance criterion with its required trial count at the default
// seed and prints one PASS/FAIL line per criterion.  Exit code 0 iff all pass.

#include "fpoisson/suites.hpp"

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

using namespace fpoisson;

namespace {

struct Run {
    const char* suite;
    std::optional<std::size_t> trials;
};

struct Criterion {
    int number;
    const char* title;
    std::vector<Run> runs;
    double budget_seconds;   // 0: no runtime bound
};

std::size_t count_notes(const VerificationReport& r, const std::string& needle)
{
    std::size_t n = 0;
    for (const auto& line : r.log)
        if (line.find(needle) != std::string::npos) ++n;
    return n;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "delta fixes x1*x3 - [x3,x2]", {{"delta-fixed", {}}}, 1},
        {2, "wildness witness", {{"wildness", {}}}, 5},
        {3, "stable tameness chains", {{"stable-tame", {}}}, 5},
        {4, "chain rule, 1000 pairs and 100 inverse identities", {{"chain-rule", 1000}}, 60},
        {5, "iterated bracket derivative, 200 cases", {{"par-at", 200}}, 0},
        {6, "kernel x3-derivative vanishes, 500 cases", {{"par-ker", 500}}, 0},
        {7, "conjugate Jacobian structure, 100 cases", {{"structure", 100}}, 0},
        {8, "E2 certificates and certificate products", {{"certificates", 100}}, 0},
        {9, "algebraic core and normal-form confluence, 1000 cases each", {{"core", 1000}, {"confluence", 1000}}, 120},
        {10, "relations, transpositions and inverses, 100 cases", {{"relations", 100}}, 0},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (const auto& run : c.runs) {
            const VerificationReport r = run_suite(run.suite, {.trials = run.trials, .seed = kDefaultSeed});
            std::size_t failed = 0;
            for (const auto& check : r.checks) failed += check.passed ? 0 : 1;
            ok = ok && r.passed();
            detail += std::string(detail.empty() ? "" : ", ") + run.suite + " " +
                      std::to_string(r.checks.size() - failed) + "/" + std::to_string(r.checks.size()) + " checks";
            if (std::string(run.suite) == "certificates")
                detail += ", " + std::to_string(count_notes(r, "failed at level")) +
                          " stops at an ill-defined induced map reported";
            for (const auto& check : r.checks)
                if (!check.passed) std::printf("  %s: %s\n    %s\n", run.suite, check.name.c_str(), check.detail.c_str());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
            ok = false;
            detail += ", over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
        }
        all = all && ok;
        std::printf("%s criterion %d: %s (%s; %.2f s)\n", ok ? "PASS" : "FAIL", c.number, c.title, detail.c_str(),
                    seconds);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
