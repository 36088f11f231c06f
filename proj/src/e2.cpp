#include "fpoisson/e2.hpp"

#include <stdexcept>

namespace fpoisson {

CEnvMatrix elementary_upper(const CEnvElement& a)
{
    CEnvMatrix m = CEnvMatrix::identity(2, a.generators());
    m(0, 1) = a;
    return m;
}

CEnvMatrix elementary_lower(const CEnvElement& a)
{
    CEnvMatrix m = CEnvMatrix::identity(2, a.generators());
    m(1, 0) = a;
    return m;
}

E2Word::E2Word(std::vector<int> generators) : generators_(std::move(generators)) {}

E2Word E2Word::lower(const CEnvElement& a)
{
    E2Word w(a.generators());
    w.push({E2Factor::Kind::Lower, a});
    return w;
}

E2Word E2Word::upper(const CEnvElement& a)
{
    E2Word w(a.generators());
    w.push({E2Factor::Kind::Upper, a});
    return w;
}

void E2Word::push(E2Factor factor)
{
    if (factor.entry.generators() != generators_)
        throw std::invalid_argument("elementary factor over a different ring");
    if (factor.entry.is_zero()) return;
    factors_.push_back(std::move(factor));
}

E2Word& E2Word::operator+=(const E2Word& other)
{
    for (const auto& f : other.factors_) push(f);
    return *this;
}

E2Word E2Word::conjugated_by_diagonal(const Scalar& alpha) const
{
    if (is_zero(alpha)) throw std::invalid_argument("diagonal conjugation by zero");
    E2Word out(generators_);
    for (const auto& f : factors_) {
        Scalar s = f.kind == E2Factor::Kind::Upper ? Scalar(1 / alpha) : alpha;
        out.push({f.kind, s * f.entry});
    }
    return out;
}

CEnvMatrix e2_product(const E2Word& word)
{
    CEnvMatrix out = CEnvMatrix::identity(2, word.generators());
    for (const auto& f : word.factors())
        out = out * (f.kind == E2Factor::Kind::Upper ? elementary_upper(f.entry) : elementary_lower(f.entry));
    return out;
}

} // namespace fpoisson
