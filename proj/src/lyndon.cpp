#include "fpoisson/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpoisson {

namespace {

int letter_at(std::string_view s, std::size_t i) { return static_cast<unsigned char>(s[i]); }

} // namespace

bool lex_less(std::string_view a, std::string_view b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](char x, char y) {
                                            return static_cast<unsigned char>(x) <
                                                   static_cast<unsigned char>(y);
                                        });
}

bool is_lyndon(std::string_view letters)
{
    if (letters.empty()) return false;
    for (std::size_t k = 1; k < letters.size(); ++k) {
        std::string rotation(letters.substr(k));
        rotation.append(letters.substr(0, k));
        if (!lex_less(letters, rotation)) return false;
    }
    return true;
}

LyndonWord::LyndonWord(std::string letters) : letters_(std::move(letters))
{
    for (char c : letters_)
        if (static_cast<unsigned char>(c) == 0) throw std::invalid_argument("generator index 0 in word");
    if (!is_lyndon(letters_)) throw std::invalid_argument("not a Lyndon word: " + digits());
}

LyndonWord LyndonWord::letter(int generator)
{
    if (generator < 1 || generator > 255) throw std::out_of_range("generator index out of range");
    return LyndonWord(std::string(1, static_cast<char>(generator)), Unchecked{});
}

LyndonWord LyndonWord::from_indices(const std::vector<int>& indices)
{
    std::string s;
    for (int i : indices) {
        if (i < 1 || i > 255) throw std::out_of_range("generator index out of range");
        s.push_back(static_cast<char>(i));
    }
    return LyndonWord(std::move(s));
}

int LyndonWord::max_letter() const
{
    int m = 0;
    for (std::size_t i = 0; i < letters_.size(); ++i) m = std::max(m, letter_at(letters_, i));
    return m;
}

bool LyndonWord::contains(int generator) const
{
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letter_at(letters_, i) == generator) return true;
    return false;
}

std::pair<LyndonWord, LyndonWord> LyndonWord::standard_factorization() const
{
    if (letters_.size() < 2) throw std::logic_error("a single letter has no standard factorization");
    for (std::size_t k = 1; k < letters_.size(); ++k) {
        std::string_view suffix = std::string_view(letters_).substr(k);
        if (is_lyndon(suffix))
            return {LyndonWord(letters_.substr(0, k), Unchecked{}), LyndonWord(std::string(suffix), Unchecked{})};
    }
    throw std::logic_error("unreachable: the last letter is always a Lyndon suffix");
}

std::string LyndonWord::digits() const
{
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        int g = letter_at(letters_, i);
        if (g > 9 && !out.empty()) out.push_back('.');
        out += std::to_string(g);
    }
    return out;
}

std::string LyndonWord::bracketing() const
{
    if (is_letter()) return "x" + std::to_string(first());
    auto [u, v] = standard_factorization();
    return "[" + u.bracketing() + "," + v.bracketing() + "]";
}

std::strong_ordering operator<=>(const LyndonWord& a, const LyndonWord& b)
{
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    if (lex_less(a.letters_, b.letters_)) return std::strong_ordering::less;
    if (lex_less(b.letters_, a.letters_)) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

LieElement LieElement::basis(const LyndonWord& word, const Scalar& coefficient)
{
    LieElement e;
    e.add(word, coefficient);
    return e;
}

Scalar LieElement::coefficient(const LyndonWord& word) const
{
    auto it = terms_.find(word);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void LieElement::add(const LyndonWord& word, const Scalar& coefficient)
{
    detail::accumulate(terms_, word, coefficient);
}

LieElement& LieElement::operator+=(const LieElement& other)
{
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& other)
{
    for (const auto& [w, c] : other.terms_) add(w, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Scalar& factor)
{
    if (fpoisson::is_zero(factor)) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= factor;
    return *this;
}

std::string LieElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        bool negative = sgn(c) < 0;
        Scalar magnitude = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (magnitude != 1) out += fpoisson::to_string(magnitude) + "*";
        out += w.bracketing();
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

LieElement bracket_word_with(const LyndonWord& u, const LieElement& b)
{
    LieElement out;
    for (const auto& [w, c] : b.terms()) {
        const LieElement& part = lie_bracket(u, w);
        for (const auto& [x, d] : part.terms()) out.add(x, c * d);
    }
    return out;
}

LieElement compute_bracket(const LyndonWord& u, const LyndonWord& v)
{
    if (u == v) return {};
    if (lex_less(v.letters(), u.letters())) return -lie_bracket(v, u);
    // u < v, so uv is Lyndon; it is the basis element [u,v] exactly when u is
    // a letter or the right factor of u is >= v.
    if (u.is_letter() || !lex_less(u.standard_factorization().second.letters(), v.letters())) {
        std::string joined(u.letters());
        joined.append(v.letters());
        return LieElement::basis(LyndonWord(std::move(joined)));
    }
    auto [u1, u2] = u.standard_factorization();
    // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
    LieElement out = bracket_word_with(u1, lie_bracket(u2, v));
    out -= bracket_word_with(u2, lie_bracket(u1, v));
    return out;
}

using AssocPoly = std::map<std::string, Scalar>;

AssocPoly assoc_product(const AssocPoly& a, const AssocPoly& b)
{
    AssocPoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) detail::accumulate(out, wa + wb, ca * cb);
    return out;
}

AssocPoly assoc_commutator(const AssocPoly& a, const AssocPoly& b)
{
    AssocPoly out = assoc_product(a, b);
    for (const auto& [w, c] : assoc_product(b, a)) detail::accumulate(out, w, Scalar(-c));
    return out;
}

AssocPoly expand_tree(const BracketTree& tree)
{
    if (tree.is_leaf()) return {{std::string(1, static_cast<char>(tree.generator())), Scalar(1)}};
    return assoc_commutator(expand_tree(tree.left()), expand_tree(tree.right()));
}

LieElement normalize_recursive(const BracketTree& tree)
{
    if (tree.is_leaf()) return LieElement::basis(LyndonWord::letter(tree.generator()));
    return lie_bracket(normalize_recursive(tree.left()), normalize_recursive(tree.right()));
}

LieElement normalize_triangular(const BracketTree& tree)
{
    AssocPoly rest = expand_tree(tree);
    LieElement out;
    while (!rest.empty()) {
        // std::string order on letters 1..255 agrees with lex_less for equal-length words
        auto smallest = std::min_element(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
            return lex_less(a.first, b.first);
        });
        if (!is_lyndon(smallest->first))
            throw std::logic_error("leading word of a Lie polynomial is not Lyndon");
        LyndonWord w(smallest->first);
        Scalar c = smallest->second;
        out.add(w, c);
        for (const auto& [x, d] : associative_expansion(w)) detail::accumulate(rest, x, Scalar(-c * d));
    }
    return out;
}

void check_leaves(const BracketTree& tree, int arity)
{
    if (tree.is_leaf()) {
        if (tree.generator() < 1 || tree.generator() > arity)
            throw std::out_of_range("generator x" + std::to_string(tree.generator()) +
                                    " outside arity " + std::to_string(arity));
        return;
    }
    check_leaves(tree.left(), arity);
    check_leaves(tree.right(), arity);
}

} // namespace

const LieElement& lie_bracket(const LyndonWord& u, const LyndonWord& v)
{
    thread_local std::map<std::pair<LyndonWord, LyndonWord>, LieElement> cache;
    auto key = std::make_pair(u, v);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    LieElement value = compute_bracket(u, v);
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

LieElement lie_bracket(const LieElement& a, const LieElement& b)
{
    LieElement out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            Scalar c = cu * cv;
            for (const auto& [w, d] : lie_bracket(u, v).terms()) out.add(w, c * d);
        }
    return out;
}

BracketTree BracketTree::leaf(int generator)
{
    BracketTree t;
    t.generator_ = generator;
    return t;
}

BracketTree BracketTree::bracket(BracketTree left, BracketTree right)
{
    BracketTree t;
    t.children_ = std::make_shared<const std::pair<BracketTree, BracketTree>>(std::move(left), std::move(right));
    return t;
}

std::size_t BracketTree::degree() const
{
    return is_leaf() ? 1 : left().degree() + right().degree();
}

LieElement lyndon_normalize(const BracketTree& tree, int arity, RewriteStrategy strategy)
{
    check_leaves(tree, arity);
    return strategy == RewriteStrategy::Recursive ? normalize_recursive(tree) : normalize_triangular(tree);
}

std::map<std::string, Scalar> associative_expansion(const LyndonWord& word)
{
    thread_local std::map<LyndonWord, AssocPoly> cache;
    if (auto it = cache.find(word); it != cache.end()) return it->second;
    AssocPoly value;
    if (word.is_letter()) {
        value.emplace(std::string(word.letters()), Scalar(1));
    } else {
        auto [u, v] = word.standard_factorization();
        value = assoc_commutator(associative_expansion(u), associative_expansion(v));
    }
    return cache.emplace(word, std::move(value)).first->second;
}

std::vector<LyndonWord> lyndon_words(int alphabet, int max_length)
{
    // Duval's generation, in lexicographic order
    std::vector<LyndonWord> out;
    if (alphabet < 1 || max_length < 1) return out;
    std::vector<int> w{1};
    while (!w.empty()) {
        out.push_back(LyndonWord::from_indices(w));
        std::size_t m = w.size();
        while (w.size() < static_cast<std::size_t>(max_length)) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == alphabet) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fpoisson
