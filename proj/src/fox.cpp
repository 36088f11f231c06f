#include "fpoisson/fox.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace fpoisson {

namespace {

void check_variable(int arity, int j)
{
    if (j < 1 || j > arity)
        throw std::out_of_range("derivation variable x" + std::to_string(j) + " outside arity " +
                                std::to_string(arity));
}

PoissonElement word_element(int arity, const LyndonWord& w)
{
    return PoissonElement::monomial(arity, Monomial::of(w));
}

const EnvElement& fox_of_word(int arity, const LyndonWord& w, int j)
{
    thread_local std::map<std::tuple<int, LyndonWord, int>, EnvElement> cache;
    auto key = std::make_tuple(arity, w, j);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    EnvElement value = [&] {
        if (w.is_letter()) return w.first() == j ? EnvElement::one(arity) : EnvElement(arity);
        auto [u, v] = w.standard_factorization();
        // d[u,v] = H_u dv - H_v du
        EnvElement du = fox_of_word(arity, u, j);
        EnvElement dv = fox_of_word(arity, v, j);
        return h_of(word_element(arity, u)) * dv - h_of(word_element(arity, v)) * du;
    }();
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

CEnvElement projected_fox_of_word(const std::vector<int>& gens, const LyndonWord& w, int j)
{
    if (w.is_letter()) return CEnvElement::constant(gens, w.first() == j ? 1 : 0);
    auto [u, v] = w.standard_factorization();
    CEnvElement out(gens);
    // pi(H_u) vanishes unless u is a generator
    if (u.is_letter()) out += CEnvElement::h(gens, u.first()) * projected_fox_of_word(gens, v, j);
    if (v.is_letter()) out -= CEnvElement::h(gens, v.first()) * projected_fox_of_word(gens, u, j);
    return out;
}

} // namespace

EnvElement fox_derivative(const PoissonElement& a, int j)
{
    const int arity = a.arity();
    check_variable(arity, j);
    EnvElement out(arity);
    for (const auto& [mono, c] : a.terms()) {
        const auto& factors = mono.factors();
        if (factors.empty()) continue;
        // left fold of d(pq) = M_p dq + M_q dp
        PoissonElement acc = word_element(arity, factors[0]);
        EnvElement d_acc = fox_of_word(arity, factors[0], j);
        for (std::size_t k = 1; k < factors.size(); ++k) {
            PoissonElement next = word_element(arity, factors[k]);
            d_acc = m_of(acc) * fox_of_word(arity, factors[k], j) + m_of(next) * d_acc;
            acc = acc * next;
        }
        out += c * d_acc;
    }
    return out;
}

CEnvElement projected_fox_derivative(const PoissonElement& a, int j)
{
    const int arity = a.arity();
    check_variable(arity, j);
    const auto gens = CEnvElement::labels(arity);
    CEnvElement out(gens);
    for (const auto& [mono, c] : a.terms()) {
        const auto& factors = mono.factors();
        std::size_t brackets = 0;
        for (const auto& w : factors) brackets += w.is_letter() ? 0 : 1;
        if (brackets >= 2) continue;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (brackets == 1 && factors[i].is_letter()) continue;
            if (i > 0 && factors[i] == factors[i - 1]) continue;
            CEnvElement d = projected_fox_of_word(gens, factors[i], j);
            if (d.is_zero()) continue;
            std::size_t multiplicity = 1;
            while (i + multiplicity < factors.size() && factors[i + multiplicity] == factors[i]) ++multiplicity;
            Exponents rest(2 * gens.size(), 0);
            for (std::size_t k = 0; k < factors.size(); ++k)
                if (factors[k].is_letter()) ++rest[static_cast<std::size_t>(factors[k].first() - 1)];
            if (factors[i].is_letter()) --rest[static_cast<std::size_t>(factors[i].first() - 1)];
            CEnvElement cofactor(gens);
            cofactor.add_term(rest, c * static_cast<unsigned long>(multiplicity));
            out += cofactor * d;
        }
    }
    return out;
}

PoissonElement left_nested_bracket(std::span<const PoissonElement> args)
{
    if (args.empty()) throw std::invalid_argument("empty bracket");
    PoissonElement acc = args[0];
    for (std::size_t k = 1; k < args.size(); ++k) acc = bracket(acc, args[k]);
    return acc;
}

EnvElement iterated_bracket_derivative(std::span<const PoissonElement> args, int r)
{
    if (args.empty()) throw std::invalid_argument("iterated bracket needs at least one argument");
    const std::size_t t = args.size();
    if (t == 1) return fox_derivative(args[0], r);
    const int arity = args[0].arity();
    std::vector<EnvElement> minus_h;
    for (const auto& a : args) minus_h.push_back(-h_of(a));
    EnvElement out(arity);
    for (std::size_t j = 1; j <= t; ++j) {
        EnvElement term = fox_derivative(args[j - 1], r);
        if (j >= 2) term = h_of(left_nested_bracket(args.subspan(0, j - 1))) * term;
        for (std::size_t k = j + 1; k <= t; ++k) term = minus_h[k - 1] * term;
        out += term;
    }
    return out;
}

CEnvMatrix jacobian(const Endomorphism& phi)
{
    const auto n = static_cast<std::size_t>(phi.arity());
    CEnvMatrix out(n, n, CEnvElement::labels(phi.arity()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = projected_fox_derivative(phi.images()[i], static_cast<int>(j + 1));
    return out;
}

CEnvMatrix jacobian_via_envelope(const Endomorphism& phi)
{
    const auto n = static_cast<std::size_t>(phi.arity());
    CEnvMatrix out(n, n, CEnvElement::labels(phi.arity()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = project_pi_e(fox_derivative(phi.images()[i], static_cast<int>(j + 1)));
    return out;
}

CEnvMatrix jacobian2(const Endomorphism& phi)
{
    if (phi.arity() != 3) throw std::invalid_argument("the 2x2 Jacobian block is defined for arity 3");
    return jacobian(phi).block(0, 0, 2, 2);
}

ChainRuleReport chain_rule_check(const Endomorphism& phi, const Endomorphism& psi,
                                 const std::optional<Endomorphism>& psi_inverse)
{
    require_same_arity(phi.arity(), psi.arity());
    ChainRuleReport report{false, jacobian(compose(phi, psi)),
                           induced_endo_e(bar(phi), jacobian(psi)) * jacobian(phi), std::nullopt, {}};
    report.holds = report.lhs == report.rhs;
    if (!report.holds) report.detail = "J(phi psi) differs from bar-phi^e(J(psi)) J(phi)";
    if (psi_inverse) {
        require_same_arity(psi.arity(), psi_inverse->arity());
        CEnvMatrix product = jacobian(psi) * induced_endo_e(bar(psi), jacobian(*psi_inverse));
        report.inverse_identity = product == CEnvMatrix::identity(product.rows(), product.generators());
        if (!*report.inverse_identity) {
            if (!report.detail.empty()) report.detail += "; ";
            report.detail += "J(psi) bar-psi^e(J(psi^-1)) is not the identity";
        }
    }
    return report;
}

} // namespace fpoisson
