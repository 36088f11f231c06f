// Command-line driver: calculator operations on free Poisson algebras and the
// verification suites.  Exit codes: 0 pass, 1 verification failure, 2 usage
// or parse error.

#include "fpoisson/certificate.hpp"
#include "fpoisson/document.hpp"
#include "fpoisson/e2.hpp"
#include "fpoisson/expr.hpp"
#include "fpoisson/fox.hpp"
#include "fpoisson/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fpoisson;

namespace {

constexpr int kPass = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream out;
        out << std::cin.rdbuf();
        return out.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Endomorphism read_endomorphism(const std::string& path)
{
    try {
        return parse_endomorphism(read_input(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line(), e.column());
    }
}

struct Output {
    bool json = false;

    void emit(const Document& d) const
    {
        std::cout << (json ? print_structured(d) : print_canonical(d)) << "\n";
    }
};

std::optional<std::size_t> env_trials()
{
    const char* value = std::getenv("FPOISSON_TRIALS");
    if (!value || !*value) return std::nullopt;
    try {
        return static_cast<std::size_t>(std::stoull(value));
    } catch (const std::exception&) {
        throw UsageError(std::string("FPOISSON_TRIALS is not a count: ") + value);
    }
}

void print_report_text(const VerificationReport& r)
{
    std::cout << "suite " << r.name << "\n";
    for (const auto& c : r.checks) {
        std::cout << (c.passed ? "  ok    " : "  FAIL  ") << c.name << "\n";
        if (c.detail.empty()) continue;
        std::istringstream lines(c.detail);
        for (std::string line; std::getline(lines, line);) std::cout << "          " << line << "\n";
    }
    for (const auto& line : r.log) std::cout << line << "\n";
    std::cout << (r.passed() ? "PASS" : "FAIL") << "\n";
}

void print_certificate_text(const CertificateReport& r)
{
    std::cout << "status: " << (r.verified() ? "verified" : "step failed: " + r.failed_step + " at level " +
                                                                  std::to_string(r.failed_level))
              << "\n";
    std::cout << "conjugate:\n" << to_text(r.conjugate) << "\n";
    std::cout << "target:\n" << to_text(r.target) << "\n";
    if (r.word) std::cout << "word: " << to_text(*r.word) << "\n";
    for (const auto& s : r.steps)
        std::cout << (s.ok ? "  ok    " : "  FAIL  ") << s.id << " (level " << s.level << ") " << s.detail << "\n";
    if (r.residual) std::cout << "residual:\n" << to_text(*r.residual) << "\n";
    if (failed_on_induced_map(r))
        std::cout << "note: the induced map of P{x3} is not well defined for this factor\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in free Poisson algebras: normal forms, Fox derivatives, Jacobians, "
                 "and verification of the wild automorphism delta"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    int arity = 3;
    app.add_option("-n,--arity", arity, "number of generators")->check(CLI::Range(1, 64));

    Output out;
    std::function<int()> action;

    auto* normalize = app.add_subcommand("normalize", "print the normal form of an expression");
    std::string expr;
    normalize->add_option("expr", expr)->required();
    normalize->callback([&] { action = [&] { out.emit(Document::of(parse_element(expr, arity))); return kPass; }; });

    auto* bracket_cmd = app.add_subcommand("bracket", "Poisson bracket of two expressions");
    std::string lhs, rhs;
    bracket_cmd->add_option("a", lhs)->required();
    bracket_cmd->add_option("b", rhs)->required();
    bracket_cmd->callback([&] {
        action = [&] {
            out.emit(Document::of(bracket(parse_element(lhs, arity), parse_element(rhs, arity))));
            return kPass;
        };
    });

    auto* apply_cmd = app.add_subcommand("apply", "apply an endomorphism to an expression");
    std::string endo_path;
    apply_cmd->add_option("--endo", endo_path, "endomorphism file")->required();
    apply_cmd->add_option("expr", expr)->required();
    apply_cmd->callback([&] {
        action = [&] {
            const Endomorphism phi = read_endomorphism(endo_path);
            out.emit(Document::of(apply_endo(phi, parse_element(expr, phi.arity()))));
            return kPass;
        };
    });

    auto* compose_cmd = app.add_subcommand("compose", "phi psi, with psi acting first");
    std::string phi_path, psi_path;
    compose_cmd->add_option("phi", phi_path)->required();
    compose_cmd->add_option("psi", psi_path)->required();
    compose_cmd->callback([&] {
        action = [&] {
            const Endomorphism phi = read_endomorphism(phi_path), psi = read_endomorphism(psi_path);
            if (phi.arity() != psi.arity()) throw UsageError("endomorphisms have different arities");
            out.emit(Document::of(compose(phi, psi)));
            return kPass;
        };
    });

    auto* fox_cmd = app.add_subcommand("fox", "Fox derivative of an expression");
    int var = 0;
    std::string projection = "none";
    fox_cmd->add_option("--var", var, "differentiate with respect to x<var>")->required();
    fox_cmd->add_option("--project", projection)->check(CLI::IsMember({"none", "pi", "pi-eta"}));
    fox_cmd->add_option("expr", expr)->required();
    fox_cmd->callback([&] {
        action = [&] {
            if (var < 1 || var > arity) throw UsageError("--var must be in 1.." + std::to_string(arity));
            const EnvElement d = fox_derivative(parse_element(expr, arity), var);
            if (projection == "none") {
                out.emit(Document::of(d));
            } else if (projection == "pi") {
                out.emit(Document::of(project_pi_e(d)));
            } else {
                if (arity != 3) throw UsageError("--project pi-eta needs arity 3");
                out.emit(Document::of(eta_e(project_pi_e(d))));
            }
            return kPass;
        };
    });

    auto* jac_cmd = app.add_subcommand("jacobian", "Jacobian matrix of an endomorphism");
    bool block2 = false, want_det = false;
    std::string jac_projection = "none";
    jac_cmd->add_option("endo", endo_path)->required();
    jac_cmd->add_flag("--block2", block2, "upper-left 2x2 block (arity 3)");
    jac_cmd->add_option("--project", jac_projection)->check(CLI::IsMember({"none", "eta"}));
    jac_cmd->add_flag("--det", want_det, "print the determinant instead");
    jac_cmd->callback([&] {
        action = [&] {
            const Endomorphism phi = read_endomorphism(endo_path);
            if ((block2 || jac_projection == "eta") && phi.arity() != 3)
                throw UsageError("--block2 and --project eta need arity 3");
            CEnvMatrix m = block2 ? jacobian2(phi) : jacobian(phi);
            if (jac_projection == "eta") m = eta_e(m);
            if (want_det)
                out.emit(Document::of(det(m)));
            else
                out.emit(Document::of(m));
            return kPass;
        };
    });

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::optional<std::size_t> trials;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    std::string suite_names;
    for (const auto& s : suite_catalog()) suite_names += (suite_names.empty() ? "" : ", ") + s.name;
    verify_cmd->add_option("suite", suite, "one of: " + suite_names)->required();
    verify_cmd->add_option("--trials", trials, "number of random cases (default per suite, or FPOISSON_TRIALS)");
    verify_cmd->add_option("--seed", seed, "seed for randomized suites")->capture_default_str();
    verify_cmd->add_option("--threads", threads, "worker threads; 0 uses every core");
    verify_cmd->callback([&] {
        action = [&] {
            if (!find_suite(suite)) throw UsageError("unknown suite '" + suite + "'; expected one of: " + suite_names);
            SuiteOptions options{.trials = trials ? trials : env_trials(), .seed = seed, .threads = threads};
            const VerificationReport report = run_suite(suite, options);
            if (out.json)
                std::cout << report_json(report).dump(2) << "\n";
            else
                print_report_text(report);
            return report.passed() ? kPass : kFailed;
        };
    });

    auto* cert_cmd = app.add_subcommand("certificate", "E2 certificate for psi phi psi^-1 (arity 3)");
    std::string word_path, phi_spec;
    cert_cmd->add_option("--psi", word_path, "tame word file over the restricted factors (empty word if omitted)");
    cert_cmd->add_option("--phi", phi_spec, "sigma(i, 1, f) with f in the bracket ideal")->required();
    cert_cmd->callback([&] {
        action = [&] {
            const TameWord psi = word_path.empty() ? TameWord(3) : parse_tame_word(read_input(word_path), 3);
            const ElementaryAut phi = parse_elementary(phi_spec, 3);
            if (!is_restricted(psi)) throw UsageError("psi must use sigma(1,a,g) and sigma(j,1,-x1), j in {2,3}");
            if (!is_kernel_elementary(phi)) throw UsageError("phi must be sigma(i,1,f) with f in the bracket ideal");
            const CertificateReport report = conjugation_certificate(psi, phi);
            if (out.json)
                std::cout << report_json(report).dump(2) << "\n";
            else
                print_certificate_text(report);
            return report.verified() ? kPass : kFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }
    out.json = format == "json";
    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kUsage;
}
