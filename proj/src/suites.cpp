#include "fpoisson/suites.hpp"

#include "fpoisson/certificate.hpp"
#include "fpoisson/e2.hpp"
#include "fpoisson/envelope.hpp"
#include "fpoisson/expr.hpp"
#include "fpoisson/fox.hpp"
#include "fpoisson/random.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <thread>

namespace fpoisson {

namespace {

struct Outcome {
    std::string property;
    bool ok;
    std::string detail;
};

/// Outcomes of one random case, in the order they were recorded.
class CaseLog {
public:
    template <class Detail>
    bool record(const std::string& property, bool ok, Detail&& detail)
    {
        outcomes.push_back({property, ok, ok ? std::string() : std::string(detail())});
        return ok;
    }
    bool record(const std::string& property, bool ok)
    {
        outcomes.push_back({property, ok, {}});
        return ok;
    }
    void note(std::string line) { notes.push_back(std::move(line)); }

    std::vector<Outcome> outcomes;
    std::vector<std::string> notes;
};

using CaseFn = std::function<void(RandomSource&, std::size_t, CaseLog&)>;

struct Tally {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string first_failure;
};

VerificationReport run_cases(const std::string& name, std::size_t trials, const SuiteOptions& options,
                             const CaseFn& fn)
{
    std::vector<CaseLog> logs(trials);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t k = next++; k < trials; k = next++) {
            RandomSource rng(RandomSource::case_seed(options.seed, k));
            try {
                fn(rng, k, logs[k]);
            } catch (const std::exception& e) {
                logs[k].record("no exception", false, [&] { return std::string(e.what()); });
            }
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<std::string> order;
    std::map<std::string, Tally> tallies;
    VerificationReport report{.name = name};
    for (std::size_t k = 0; k < trials; ++k) {
        for (const auto& o : logs[k].outcomes) {
            auto [it, inserted] = tallies.try_emplace(o.property);
            if (inserted) order.push_back(o.property);
            if (o.ok) {
                ++it->second.passed;
            } else if (it->second.failed++ == 0) {
                it->second.first_failure = "case " + std::to_string(k) + " (seed " + std::to_string(options.seed) +
                                           "): " + o.detail;
            }
        }
        for (auto& line : logs[k].notes) report.log.push_back("case " + std::to_string(k) + ": " + line);
    }
    for (const auto& property : order) {
        const Tally& t = tallies[property];
        const std::string counts = std::to_string(t.passed) + "/" + std::to_string(t.passed + t.failed) + " cases";
        report.check(property, t.failed == 0, t.failed == 0 ? counts : counts + "; first failure " + t.first_failure);
    }
    if (trials == 0) report.log.push_back("no cases requested");
    return report;
}

template <class T>
std::function<std::string()> show_pair(const T& got, const T& want)
{
    return [&] { return "got " + to_text(got) + " expected " + to_text(want); };
}

Endomorphism conjugate(const TameWord& psi, const Endomorphism& phi)
{
    return compose(compose(psi.evaluate(), phi), psi.inverse().evaluate());
}

bool third_column_trivial(const CEnvMatrix& m)
{
    return m(0, 2).is_zero() && m(1, 2).is_zero() && m(2, 2) == CEnvElement::constant(m.generators(), 1);
}

// ---- algebraic core ------------------------------------------------------

void core_case(RandomSource& rng, std::size_t, CaseLog& log)
{
    const int n = rng.uniform(2, 4);
    const ElementShape shape{n, {}, 1, 4, 2};
    const PoissonElement a = rng.element(shape), b = rng.element(shape), c = rng.element(shape);
    log.record("antisymmetry [a,a] = 0", bracket(a, a).is_zero(), [&] { return to_text(a); });
    const PoissonElement ab = bracket(a, b);
    log.record("antisymmetry [a,b] = -[b,a]", ab == -bracket(b, a), [&] { return to_text(a) + " ; " + to_text(b); });
    const PoissonElement jacobi = bracket(ab, c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b);
    log.record("Jacobi", jacobi.is_zero(), [&] { return "residual " + to_text(jacobi); });
    const PoissonElement lhs = bracket(a, b * c);
    const PoissonElement rhs = b * bracket(a, c) + c * ab;
    log.record("Leibniz", lhs == rhs, show_pair(lhs, rhs));
}

void confluence_case(RandomSource& rng, std::size_t, CaseLog& log)
{
    const int n = rng.uniform(2, 4);
    const BracketTree tree = rng.tree(all_generators(n), rng.uniform(2, 4));
    const LieElement recursive = lyndon_normalize(tree, n, RewriteStrategy::Recursive);
    const LieElement triangular = lyndon_normalize(tree, n, RewriteStrategy::Triangular);
    log.record("Lyndon rewriting strategies agree", recursive == triangular,
               [&] { return recursive.to_string() + " vs " + triangular.to_string(); });

    const EnvElement u = rng.env_element(n, 3, 3), v = rng.env_element(n, 3, 3), w = rng.env_element(n, 2, 2, 1);
    const EnvElement right = env_mul(u, v, ReductionOrder::RightmostFirst);
    const EnvElement left = env_mul(u, v, ReductionOrder::LeftmostFirst);
    log.record("envelope reduction orders agree", right == left, show_pair(right, left));
    const EnvElement one = EnvElement::one(n);
    log.record("envelope unit", env_mul(one, u) == u && env_mul(u, one) == u, [&] { return to_text(u); });
    const EnvElement assoc_l = env_mul(right, w);
    const EnvElement assoc_r = env_mul(u, env_mul(v, w));
    log.record("envelope associativity", assoc_l == assoc_r, show_pair(assoc_l, assoc_r));
}

// ---- homomorphism and morphism properties ----------------------------------

void morphism_case(RandomSource& rng, std::size_t, CaseLog& log)
{
    const ElementShape shape{3, {}, 1, 2, 2};
    const PoissonElement a = rng.element(shape), b = rng.element(shape);
    const Endomorphism phi = rng.tame_word(3, 2, 2, 1).evaluate();

    log.record("apply_endo additive", apply_endo(phi, a + b) == apply_endo(phi, a) + apply_endo(phi, b));
    log.record("apply_endo multiplicative", apply_endo(phi, a * b) == apply_endo(phi, a) * apply_endo(phi, b));
    log.record("apply_endo preserves brackets",
               apply_endo(phi, bracket(a, b)) == bracket(apply_endo(phi, a), apply_endo(phi, b)));

    const Endomorphism p = rng.elementary(3, 2).to_endo(), q = rng.elementary(3, 2).to_endo(),
                       r = rng.elementary(3, 2).to_endo();
    log.record("compose associative", compose(compose(p, q), r) == compose(p, compose(q, r)));
    log.record("projection commutes with endomorphisms",
               project_pi(apply_endo(phi, a)) == apply_endo(bar(phi), project_pi(a)));

    const auto [f0, f1] = split_kernel(a);
    log.record("split_kernel", f0 + f1 == a && f0.bracket_free() && project_pi(f1).is_zero(),
               [&] { return to_text(a); });

    const EnvElement hab = h_of(bracket(a, b));
    const EnvElement commutator = h_of(a) * h_of(b) - h_of(b) * h_of(a);
    log.record("h_of is a Lie homomorphism", hab == commutator, show_pair(hab, commutator));

    const EnvElement u = rng.env_element(3, 2, 2), v = rng.env_element(3, 2, 2);
    const CEnvElement pu = project_pi_e(u), pv = project_pi_e(v);
    log.record("project_pi_e multiplicative", project_pi_e(u * v) == pu * pv);
    log.record("eta_e multiplicative", eta_e(pu * pv) == eta_e(pu) * eta_e(pv));
    log.record("induced_endo_e multiplicative",
               induced_endo_e(bar(phi), pu * pv) == induced_endo_e(bar(phi), pu) * induced_endo_e(bar(phi), pv));
    const Endomorphism sigma = rng.elementary(3, 2).to_endo();
    const CEnvElement via_c = induced_endo_e(bar(sigma), pu);
    const CEnvElement via_p = project_pi_e(endo_e(sigma, u));
    log.record("induced map on the commutative envelope", via_c == via_p, show_pair(via_c, via_p));

    const int j = rng.uniform(1, 3);
    const Scalar alpha = rng.scalar();
    log.record("Fox derivative linear",
               fox_derivative(alpha * a + b, j) == alpha * fox_derivative(a, j) + fox_derivative(b, j));
    const EnvElement d_prod = fox_derivative(a * b, j);
    const EnvElement d_prod_rule = m_of(a) * fox_derivative(b, j) + m_of(b) * fox_derivative(a, j);
    log.record("Fox derivative product rule", d_prod == d_prod_rule, show_pair(d_prod, d_prod_rule));
    const EnvElement d_br = fox_derivative(bracket(a, b), j);
    const EnvElement d_br_rule = h_of(a) * fox_derivative(b, j) - h_of(b) * fox_derivative(a, j);
    log.record("Fox derivative bracket rule", d_br == d_br_rule, show_pair(d_br, d_br_rule));

    std::vector<CEnvElement> ea, eb;
    for (int k = 0; k < 4; ++k) {
        ea.push_back(project_pi_e(rng.env_element(3, 1, 1, 2)));
        eb.push_back(project_pi_e(rng.env_element(3, 1, 1, 2)));
    }
    const CEnvMatrix ma(2, 2, ea), mb(2, 2, eb);
    log.record("det multiplicative", det(ma * mb) == det(ma) * det(mb));

    const TameWord psi = rng.tame_word(3, 2, 2, 1);
    const ElementaryAut kernel = rng.kernel_elementary(3, 3);
    const Endomorphism theta = conjugate(psi, kernel.to_endo());
    const Endomorphism psi_e = psi.evaluate();
    const Endomorphism psi_bar = bar(psi_e);
    const CEnvMatrix j_theta = jacobian(theta);
    const CEnvMatrix formula = induced_endo_e(psi_bar, jacobian(psi.inverse().evaluate())) *
                               induced_endo_e(psi_bar, jacobian(kernel.to_endo())) * jacobian(psi_e);
    log.record("Jacobian of a conjugate", j_theta == formula, show_pair(j_theta, formula));
    log.record("determinant of a conjugate", det(j_theta) == induced_endo_e(psi_bar, det(jacobian(kernel.to_endo()))));
}

// ---- Fox derivative suites -------------------------------------------------

void chain_rule_case(RandomSource& rng, std::size_t k, CaseLog& log, std::size_t trials)
{
    const Endomorphism phi = rng.elementary(3, 3).to_endo();
    const Endomorphism psi = rng.elementary(3, 3).to_endo();
    const ChainRuleReport r = chain_rule_check(phi, psi);
    log.record("J(phi psi) = bar-phi^e(J(psi)) J(phi)", r.holds, show_pair(r.lhs, r.rhs));
    if (k % 10 == 0) {
        const CEnvMatrix fast = jacobian(psi);
        const CEnvMatrix slow = jacobian_via_envelope(psi);
        log.record("Jacobian: projected route = envelope route", fast == slow, show_pair(fast, slow));
    }
    // one inverse-word case per ten pairs
    if (k < (trials + 9) / 10) {
        const TameWord w = rng.tame_word(3, 3, 2, 1);
        const ChainRuleReport inv = chain_rule_check(Endomorphism::identity(3), w.evaluate(), w.inverse().evaluate());
        log.record("J(psi) bar-psi^e(J(psi^-1)) = I", inv.inverse_identity.value_or(false),
                   [&] { return to_text(w); });
    }
}

void par_at_case(RandomSource& rng, std::size_t, CaseLog& log)
{
    const int t = rng.uniform(2, 5);
    const int n = rng.uniform(2, 3);
    std::vector<PoissonElement> args;
    for (int i = 0; i < t; ++i) args.push_back(rng.element({n, {}, 1, t <= 3 ? 2 : 1, 2}));
    const int r = rng.uniform(1, n);
    const EnvElement closed = iterated_bracket_derivative(args, r);
    const EnvElement direct = fox_derivative(left_nested_bracket(args), r);
    log.record("iterated bracket derivative, t = " + std::to_string(t), closed == direct, show_pair(closed, direct));
}

void par_ker_case(RandomSource& rng, std::size_t, CaseLog& log)
{
    const PoissonElement f = rng.kernel_element(3, {}, 5);
    log.record("sample lies in the bracket ideal", project_pi(f).is_zero(), [&] { return to_text(f); });
    const CEnvElement value = eta_e(project_pi_e(fox_derivative(f, 3)));
    log.record("eta^e pi^e(df/dx3) = 0", value.is_zero(), [&] { return to_text(f) + " gives " + to_text(value); });
    for (int j = 1; j <= 3; ++j) {
        log.record("projected Fox derivative matches the envelope",
                   project_pi_e(fox_derivative(f, j)) == projected_fox_derivative(f, j),
                   [&] { return to_text(f) + ", j = " + std::to_string(j); });
    }
}

void structure_case(RandomSource& rng, std::size_t, CaseLog& log)
{
    const TameWord psi = rng.tame_word(3, 3, 2);
    const ElementaryAut phi = rng.kernel_elementary(3, 4);
    const Endomorphism theta = conjugate(psi, phi.to_endo());
    log.record("conjugate induces the identity on the polynomial algebra", bar(theta) == Endomorphism::identity(3));
    const CEnvMatrix m = eta_e(jacobian(theta));
    log.record("third column of eta^e(J) is (0,0,1)", third_column_trivial(m), [&] { return to_text(m); });
    const CEnvElement d = det(m.block(0, 0, 2, 2));
    log.record("2x2 block has determinant 1", d == CEnvElement::constant(m.generators(), 1),
               [&] { return to_text(d); });
}

// ---- automorphism relations ------------------------------------------------

void relations_case(RandomSource& rng, std::size_t, CaseLog& log)
{
    const int n = 3;
    const auto avoiding = [&](std::vector<int> gens) { return rng.element({n, std::move(gens), 0, 3, 2}); };

    {
        const int i = rng.uniform(1, n);
        const RelationReport r = check_relation_product(i, rng.scalar(), avoiding(generators_without(n, i)),
                                                        rng.scalar(), avoiding(generators_without(n, i)));
        log.record("product of elementary automorphisms with the same index", r.equal, show_pair(r.lhs, r.rhs));
    }
    {
        const int i = rng.uniform(1, n);
        int j = rng.uniform(1, n - 1);
        if (j >= i) ++j;
        std::vector<int> free_of_both;
        for (int g = 1; g <= n; ++g)
            if (g != i && g != j) free_of_both.push_back(g);
        const RelationReport r = check_relation_conjugation(i, rng.scalar(), avoiding(free_of_both), j, rng.scalar(),
                                                            avoiding(generators_without(n, j)));
        log.record("conjugating an elementary automorphism", r.equal, show_pair(r.lhs, r.rhs));
    }
    {
        const int p = rng.uniform(1, n - 1);
        const int q = rng.uniform(p + 1, n);
        const RelationReport r = check_relation_transposition(p, q, rng.elementary(n, 3));
        log.record("conjugating by a transposition", r.equal, show_pair(r.lhs, r.rhs));

        const Endomorphism swap = swap_endo(n, p, q);
        const Endomorphism t = word_to_endo(transposition_word(n, p, q));
        log.record("transposition word evaluates to the swap", t == swap, show_pair(t, swap));
        log.record("transposition squared is the identity", compose(t, t) == Endomorphism::identity(n));
    }
    {
        const int j = rng.uniform(2, n);
        const Endomorphism via_first = word_to_endo(transposition_word_via_first(n, j));
        log.record("transposition through x1", via_first == swap_endo(n, 1, j), show_pair(via_first, swap_endo(n, 1, j)));

        const Scalar alpha = rng.scalar();
        const PoissonElement g = avoiding(generators_without(n, j));
        const Endomorphism s1j = swap_endo(n, 1, j);
        const Endomorphism expanded =
            compose(compose(s1j, ElementaryAut(1, alpha, apply_endo(s1j, g)).to_endo()), s1j);
        const Endomorphism direct = ElementaryAut(j, alpha, g).to_endo();
        log.record("moving an elementary automorphism to index 1", expanded == direct, show_pair(expanded, direct));
    }
    {
        const TameWord w = rng.tame_word(n, 4, 2);
        const TameWord normalized = normalize_generators(w);
        log.record("normalize_generators yields restricted factors", is_restricted(normalized),
                   [&] { return to_text(normalized); });
        log.record("normalize_generators preserves the automorphism", word_to_endo(normalized) == word_to_endo(w),
                   [&] { return to_text(w); });
    }
    {
        const ElementaryAut sigma = rng.elementary(rng.uniform(2, 4), 3);
        const Endomorphism s = elem_to_endo(sigma), s_inv = elem_to_endo(elem_inverse(sigma));
        const Endomorphism id = Endomorphism::identity(sigma.arity());
        log.record("elementary inverse", compose(s, s_inv) == id && compose(s_inv, s) == id,
                   [&] { return to_text(sigma); });
    }
}

// ---- certificates --------------------------------------------------------

void certificates_case(RandomSource& rng, std::size_t, CaseLog& log)
{
    const auto one = [&](CaseLog& l) {
        const TameWord psi = rng.restricted_word(3, 2);
        const ElementaryAut phi = rng.kernel_elementary(3, 4);
        CertificateReport r = conjugation_certificate(psi, phi);
        const Endomorphism theta = conjugate(psi, phi.to_endo());
        const CEnvMatrix truth = eta_e(jacobian2(r.conjugate));
        l.record("target equals eta^e(J2) of the reported conjugate", r.target == truth, show_pair(r.target, truth));
        if (r.verified())
            l.record("verified conjugate equals psi phi psi^-1", r.conjugate == theta, show_pair(r.conjugate, theta));
        const bool open_question = failed_on_induced_map(r);
        l.record("certificate verified, or stopped where the induced map is not well defined",
                 r.verified() || open_question, [&] {
                     return "failed at " + r.failed_step + " (level " + std::to_string(r.failed_level) +
                            ") for psi = " + to_text(psi) + ", phi = " + to_text(phi);
                 });
        if (open_question)
            l.note(r.failed_step + " failed at level " + std::to_string(r.failed_level) +
                   " (square does not commute): psi = " + to_text(psi) + ", phi = " + to_text(phi));
        if (r.verified()) {
            const CEnvMatrix product = e2_product(*r.word);
            l.record("e2_product(word) = target", product == r.target, show_pair(product, r.target));
            l.record("det(target) = 1", det(r.target) == CEnvElement::constant(r.target.generators(), 1));
        }
        return r;
    };

    std::vector<CertificateReport> verified;
    const int wanted = rng.uniform(1, 3);
    for (int attempts = 0; attempts < 3 * wanted && static_cast<int>(verified.size()) < wanted; ++attempts) {
        CertificateReport r = one(log);
        if (r.verified()) verified.push_back(std::move(r));
    }
    if (verified.empty()) return;
    const CertificateReport product = certificate_product(verified);
    Endomorphism composite = Endomorphism::identity(3);
    for (const auto& r : verified) composite = compose(composite, r.conjugate);
    const CEnvMatrix truth = eta_e(jacobian2(composite));
    log.record("certificate_product verified", product.verified(), [&] { return product.failed_step; });
    if (product.verified())
        log.record("product word reproduces eta^e(J2) of the composite", e2_product(*product.word) == truth,
                   show_pair(e2_product(*product.word), truth));
}

// ---- registry ------------------------------------------------------------

using Runner = std::function<VerificationReport(const SuiteOptions&, std::size_t)>;

Runner randomized(std::string name, CaseFn fn)
{
    return [name, fn](const SuiteOptions& o, std::size_t trials) { return run_cases(name, trials, o, fn); };
}

struct Entry {
    SuiteInfo info;
    Runner run;
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;
        e.push_back({{"delta-fixed", "delta fixes x1*x3 - [x3,x2]", 0},
                     [](const SuiteOptions&, std::size_t) { return verify_delta_fixed_element(); }});
        e.push_back({{"wildness", "Jacobian witness that delta is wild", 0},
                     [](const SuiteOptions&, std::size_t) { return verify_wildness_witness(); }});
        e.push_back({{"stable-tame", "eight-factor decomposition of delta extended to arity 4", 0},
                     [](const SuiteOptions&, std::size_t) { return verify_stable_tameness(); }});
        e.push_back({{"relations", "relations among elementary automorphisms and transpositions", 100},
                     randomized("relations", relations_case)});
        e.push_back({{"chain-rule", "chain rule for Jacobians, inverse words, both Jacobian routes", 1000},
                     [](const SuiteOptions& o, std::size_t trials) {
                         return run_cases("chain-rule", trials, o, [trials](RandomSource& r, std::size_t k, CaseLog& l) {
                             chain_rule_case(r, k, l, trials);
                         });
                     }});
        e.push_back({{"par-at", "closed form for the derivative of an iterated bracket", 200},
                     randomized("par-at", par_at_case)});
        e.push_back({{"par-ker", "x3-derivatives of bracket-ideal elements vanish under eta^e pi^e", 500},
                     randomized("par-ker", par_ker_case)});
        e.push_back({{"structure", "eta^e(J) of conjugates of kernel elementary automorphisms", 100},
                     randomized("structure", structure_case)});
        e.push_back({{"certificates", "E2 certificates for conjugates and their products", 100},
                     randomized("certificates", certificates_case)});
        e.push_back({{"confluence", "normal-form confluence in the Lie algebra and the envelope", 1000},
                     randomized("confluence", confluence_case)});
        e.push_back({{"core", "anti-symmetry, Jacobi and Leibniz", 1000}, randomized("core", core_case)});
        e.push_back({{"morphisms", "homomorphism, Fox-rule and conjugate-Jacobian identities", 200},
                     randomized("morphisms", morphism_case)});
        return e;
    }();
    return entries;
}

} // namespace

const std::vector<SuiteInfo>& suite_catalog()
{
    static const std::vector<SuiteInfo> catalog = [] {
        std::vector<SuiteInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return catalog;
}

const SuiteInfo* find_suite(std::string_view name)
{
    for (const auto& info : suite_catalog())
        if (info.name == name) return &info;
    return nullptr;
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& options)
{
    for (const auto& e : registry())
        if (e.info.name == name) return e.run(options, options.trials.value_or(e.info.default_trials));
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

} // namespace fpoisson
