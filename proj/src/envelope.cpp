#include "fpoisson/envelope.hpp"

#include <stdexcept>

namespace fpoisson {

HWord::HWord(const std::vector<int>& letters)
{
    for (int g : letters) {
        if (g < 1 || g > 255) throw std::out_of_range("generator index out of range");
        letters_.push_back(static_cast<char>(g));
    }
}

HWord HWord::letter(int generator)
{
    return HWord(std::vector<int>{generator});
}

std::vector<int> HWord::letters() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < letters_.size(); ++i) out.push_back((*this)[i]);
    return out;
}

int HWord::max_letter() const
{
    int m = 0;
    for (std::size_t i = 0; i < letters_.size(); ++i) m = std::max(m, (*this)[i]);
    return m;
}

HWord HWord::prefix(std::size_t n) const
{
    HWord w;
    w.letters_ = letters_.substr(0, n);
    return w;
}

HWord HWord::suffix_from(std::size_t n) const
{
    HWord w;
    w.letters_ = letters_.substr(n);
    return w;
}

HWord operator+(const HWord& a, const HWord& b)
{
    HWord w;
    w.letters_ = a.letters_ + b.letters_;
    return w;
}

std::strong_ordering operator<=>(const HWord& a, const HWord& b)
{
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    if (lex_less(a.letters_, b.letters_)) return std::strong_ordering::less;
    if (lex_less(b.letters_, a.letters_)) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

EnvElement::EnvElement(int arity) : arity_(arity)
{
    if (arity < 1) throw std::invalid_argument("arity must be positive");
}

EnvElement EnvElement::one(int arity)
{
    return term(PoissonElement::constant(arity, 1), HWord{});
}

EnvElement EnvElement::term(const PoissonElement& coefficient, const HWord& word)
{
    EnvElement e(coefficient.arity());
    e.add_term(word, coefficient);
    return e;
}

PoissonElement EnvElement::coefficient(const HWord& word) const
{
    auto it = terms_.find(word);
    return it == terms_.end() ? PoissonElement(arity_) : it->second;
}

void EnvElement::add_term(const HWord& word, const PoissonElement& coefficient)
{
    require_same_arity(arity_, coefficient.arity());
    if (word.max_letter() > arity_) throw std::out_of_range("H letter outside arity");
    detail::accumulate(terms_, word, coefficient);
}

EnvElement& EnvElement::operator+=(const EnvElement& other)
{
    require_same_arity(arity_, other.arity_);
    for (const auto& [w, a] : other.terms_) detail::accumulate(terms_, w, a);
    return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& other)
{
    require_same_arity(arity_, other.arity_);
    for (const auto& [w, a] : other.terms_) detail::accumulate(terms_, w, PoissonElement(-a));
    return *this;
}

EnvElement& EnvElement::operator*=(const Scalar& s)
{
    if (fpoisson::is_zero(s)) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, a] : terms_) a *= s;
    return *this;
}

// ---------------------------------------------------------------------------

namespace {

EnvElement append_letter(const EnvElement& e, int letter)
{
    EnvElement out(e.arity());
    HWord tail = HWord::letter(letter);
    for (const auto& [w, a] : e.terms()) out.add_term(w + tail, a);
    return out;
}

// M_p u
EnvElement times_m(const PoissonElement& p, const EnvElement& u)
{
    EnvElement out(u.arity());
    for (const auto& [w, a] : u.terms()) out.add_term(w, p * a);
    return out;
}

} // namespace

EnvElement move_past(const HWord& word, const PoissonElement& b, ReductionOrder order)
{
    if (b.is_zero()) return EnvElement(b.arity());
    if (word.empty()) return EnvElement::term(b, word);
    const int arity = b.arity();
    if (order == ReductionOrder::RightmostFirst) {
        // w' H_i M_b = w' M_{[x_i,b]} + (w' M_b) H_i
        HWord head = word.prefix(word.length() - 1);
        int i = word[word.length() - 1];
        PoissonElement xi = PoissonElement::generator(arity, i);
        EnvElement out = move_past(head, bracket(xi, b), order);
        out += append_letter(move_past(head, b, order), i);
        return out;
    }
    // H_i (w' M_b) = sum H_i M_c w'' = sum M_{[x_i,c]} w'' + M_c H_i w''
    int i = word[0];
    PoissonElement xi = PoissonElement::generator(arity, i);
    HWord lead = HWord::letter(i);
    EnvElement inner = move_past(word.suffix_from(1), b, order);
    EnvElement out(arity);
    for (const auto& [w, c] : inner.terms()) {
        out.add_term(w, bracket(xi, c));
        out.add_term(lead + w, c);
    }
    return out;
}

EnvElement env_mul(const EnvElement& u, const EnvElement& v, ReductionOrder order)
{
    require_same_arity(u.arity(), v.arity());
    EnvElement out(u.arity());
    for (const auto& [w1, a] : u.terms())
        for (const auto& [w2, b] : v.terms()) {
            EnvElement moved = move_past(w1, b, order);
            for (const auto& [w3, c] : moved.terms()) out.add_term(w3 + w2, a * c);
        }
    return out;
}

EnvElement m_of(const PoissonElement& a)
{
    EnvElement e(a.arity());
    e.add_term(HWord{}, a);
    return e;
}

EnvElement h_generator(int arity, int generator)
{
    return EnvElement::term(PoissonElement::constant(arity, 1), HWord::letter(generator));
}

namespace {

const EnvElement& h_of_word(int arity, const LyndonWord& w)
{
    thread_local std::map<std::pair<int, LyndonWord>, EnvElement> cache;
    auto key = std::make_pair(arity, w);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    EnvElement value = [&] {
        if (w.is_letter()) return h_generator(arity, w.first());
        auto [u, v] = w.standard_factorization();
        // H_{[a,b]} = H_a H_b - H_b H_a
        EnvElement hu = h_of_word(arity, u);
        const EnvElement& hv = h_of_word(arity, v);
        return env_mul(hu, hv) - env_mul(hv, hu);
    }();
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

} // namespace

EnvElement h_of(const PoissonElement& a)
{
    const int arity = a.arity();
    EnvElement out(arity);
    for (const auto& [mono, c] : a.terms()) {
        const auto& factors = mono.factors();
        if (factors.empty()) continue;
        // left fold of H_{pq} = M_q H_p + M_p H_q
        PoissonElement acc = PoissonElement::monomial(arity, Monomial::of(factors[0]));
        EnvElement h_acc = h_of_word(arity, factors[0]);
        for (std::size_t k = 1; k < factors.size(); ++k) {
            PoissonElement next = PoissonElement::monomial(arity, Monomial::of(factors[k]));
            h_acc = times_m(next, h_acc) + times_m(acc, h_of_word(arity, factors[k]));
            acc = acc * next;
        }
        out += c * h_acc;
    }
    return out;
}

EnvElement endo_e(const Endomorphism& phi, const EnvElement& u)
{
    require_same_arity(phi.arity(), u.arity());
    std::map<int, EnvElement> h_images;
    EnvElement out(u.arity());
    for (const auto& [w, a] : u.terms()) {
        EnvElement t = m_of(phi.apply(a));
        for (int letter : w.letters()) {
            auto it = h_images.find(letter);
            if (it == h_images.end()) it = h_images.emplace(letter, h_of(phi.image(letter))).first;
            t = t * it->second;
        }
        out += t;
    }
    return out;
}

CEnvElement project_pi_e(const EnvElement& u)
{
    const int n = u.arity();
    auto gens = CEnvElement::labels(n);
    CEnvElement out(gens);
    for (const auto& [w, a] : u.terms()) {
        PoissonElement reduced = project_pi(a);
        if (reduced.is_zero()) continue;
        CEnvElement t = m_polynomial(reduced);
        for (int letter : w.letters()) t = t * CEnvElement::h(gens, letter);
        out += t;
    }
    return out;
}

CEnvElement eta_e(const CEnvElement& u)
{
    if (u.generators() != CEnvElement::labels(3))
        throw std::invalid_argument("eta^e is defined on C_3^e only");
    return u.restrict_to({3});
}

CEnvMatrix eta_e(const CEnvMatrix& m)
{
    return m.map([](const CEnvElement& e) { return eta_e(e); });
}

CEnvElement induced_endo_e(const Endomorphism& phi_bar, const CEnvElement& u)
{
    if (!phi_bar.bracket_free()) throw std::invalid_argument("induced map needs bracket-free images");
    if (u.generators() != CEnvElement::labels(phi_bar.arity()))
        throw std::invalid_argument("induced map applied outside C_n^e");
    std::vector<CEnvElement> m_images, h_images;
    for (const auto& f : phi_bar.images()) {
        m_images.push_back(m_polynomial(f));
        h_images.push_back(h_polynomial(f));
    }
    return u.substitute(m_images, h_images);
}

CEnvMatrix induced_endo_e(const Endomorphism& phi_bar, const CEnvMatrix& m)
{
    if (!phi_bar.bracket_free()) throw std::invalid_argument("induced map needs bracket-free images");
    return m.map([&](const CEnvElement& e) { return induced_endo_e(phi_bar, e); });
}

} // namespace fpoisson
