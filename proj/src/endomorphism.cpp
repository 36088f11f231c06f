#include "fpoisson/endomorphism.hpp"

#include <map>
#include <stdexcept>

namespace fpoisson {

Endomorphism::Endomorphism(std::vector<PoissonElement> images) : images_(std::move(images))
{
    if (images_.empty()) throw std::invalid_argument("endomorphism needs at least one generator");
    for (const auto& f : images_)
        if (f.arity() != arity())
            throw std::invalid_argument("endomorphism of arity " + std::to_string(arity()) +
                                        " has an image of arity " + std::to_string(f.arity()));
}

Endomorphism Endomorphism::identity(int arity)
{
    std::vector<PoissonElement> images;
    for (int i = 1; i <= arity; ++i) images.push_back(PoissonElement::generator(arity, i));
    return Endomorphism(std::move(images));
}

const PoissonElement& Endomorphism::image(int index) const
{
    if (index < 1 || index > arity()) throw std::out_of_range("generator index out of range");
    return images_[static_cast<std::size_t>(index - 1)];
}

PoissonElement Endomorphism::apply(const PoissonElement& a) const
{
    require_same_arity(arity(), a.arity());
    std::map<LyndonWord, PoissonElement> word_images;
    auto image_of = [&](auto&& self, const LyndonWord& w) -> const PoissonElement& {
        if (auto it = word_images.find(w); it != word_images.end()) return it->second;
        PoissonElement value = w.is_letter() ? images_[static_cast<std::size_t>(w.first() - 1)] : [&] {
            auto [u, v] = w.standard_factorization();
            PoissonElement left = self(self, u);
            return bracket(left, self(self, v));
        }();
        return word_images.emplace(w, std::move(value)).first->second;
    };

    PoissonElement out(arity());
    for (const auto& [m, c] : a.terms()) {
        PoissonElement term = PoissonElement::constant(arity(), c);
        for (const auto& w : m.factors()) term = term * image_of(image_of, w);
        out += term;
    }
    return out;
}

bool Endomorphism::is_identity() const
{
    return *this == identity(arity());
}

bool Endomorphism::bracket_free() const
{
    for (const auto& f : images_)
        if (!f.bracket_free()) return false;
    return true;
}

PoissonElement apply_endo(const Endomorphism& phi, const PoissonElement& a)
{
    return phi.apply(a);
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi)
{
    require_same_arity(phi.arity(), psi.arity());
    std::vector<PoissonElement> images;
    images.reserve(psi.images().size());
    for (const auto& f : psi.images()) images.push_back(phi.apply(f));
    return Endomorphism(std::move(images));
}

Endomorphism bar(const Endomorphism& phi)
{
    std::vector<PoissonElement> images;
    for (const auto& f : phi.images()) images.push_back(project_pi(f));
    return Endomorphism(std::move(images));
}

} // namespace fpoisson
