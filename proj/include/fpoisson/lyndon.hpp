#pragma once

#include "fpoisson/scalar.hpp"

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fpoisson {

// Lexicographic order on raw letter sequences (a proper prefix is smaller).
bool lex_less(std::string_view a, std::string_view b);

// True when `letters` is nonempty and strictly smaller than each of its proper rotations.
bool is_lyndon(std::string_view letters);

/// A Lyndon word over generator indices 1..n.  Letters are stored one per
/// char, holding the generator index itself.  Containers order Lyndon words
/// by (length, lexicographic); the bracket algorithm uses plain `lex_less`.
class LyndonWord {
public:
    explicit LyndonWord(std::string letters);
    static LyndonWord letter(int generator);
    static LyndonWord from_indices(const std::vector<int>& indices);

    std::string_view letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_letter() const { return letters_.size() == 1; }
    int first() const { return static_cast<unsigned char>(letters_.front()); }
    int max_letter() const;
    bool contains(int generator) const;

    /// (u, v) with v the longest proper Lyndon suffix.  Requires length() >= 2.
    std::pair<LyndonWord, LyndonWord> standard_factorization() const;

    /// Digit form, e.g. "123".
    std::string digits() const;
    /// Standard bracketing, e.g. "[x1,[x2,x3]]".
    std::string bracketing() const;

    friend bool operator==(const LyndonWord&, const LyndonWord&) = default;
    friend std::strong_ordering operator<=>(const LyndonWord& a, const LyndonWord& b);

private:
    struct Unchecked {};
    LyndonWord(std::string letters, Unchecked) : letters_(std::move(letters)) {}
    std::string letters_;
};

/// Element of the free Lie algebra, in the Lyndon-Shirshov basis.
class LieElement {
public:
    using Terms = std::map<LyndonWord, Scalar>;

    LieElement() = default;
    static LieElement basis(const LyndonWord& word, const Scalar& coefficient = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const LyndonWord& word) const;

    void add(const LyndonWord& word, const Scalar& coefficient);
    LieElement& operator+=(const LieElement& other);
    LieElement& operator-=(const LieElement& other);
    LieElement& operator*=(const Scalar& factor);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Scalar& s, LieElement a) { return a *= s; }
    friend LieElement operator-(LieElement a) { return a *= -1; }
    friend bool operator==(const LieElement&, const LieElement&) = default;

    std::string to_string() const;

private:
    Terms terms_;
};

/// [u, v] of two basis elements, expanded in the Lyndon basis.  Results are
/// memoized per thread.
const LieElement& lie_bracket(const LyndonWord& u, const LyndonWord& v);
LieElement lie_bracket(const LieElement& a, const LieElement& b);

/// Binary bracket tree over generators, e.g. [x1,[x2,x3]].
class BracketTree {
public:
    static BracketTree leaf(int generator);
    static BracketTree bracket(BracketTree left, BracketTree right);

    bool is_leaf() const { return !children_; }
    int generator() const { return generator_; }
    const BracketTree& left() const { return children_->first; }
    const BracketTree& right() const { return children_->second; }
    std::size_t degree() const;

private:
    int generator_ = 0;
    std::shared_ptr<const std::pair<BracketTree, BracketTree>> children_;
};

enum class RewriteStrategy {
    // bottom-up: bracket the normalized children with the Lyndon bracket algorithm
    Recursive,
    // expand in the free associative algebra, then peel off the smallest word,
    // which always leads a Lyndon basis element
    Triangular,
};

/// Expansion of a bracket tree in the Lyndon-Shirshov basis.  Throws
/// std::out_of_range when a leaf is outside 1..arity.
LieElement lyndon_normalize(const BracketTree& tree, int arity,
                            RewriteStrategy strategy = RewriteStrategy::Recursive);

/// Associative expansion of a basis element: [a,b] -> ab - ba on its standard bracketing.
std::map<std::string, Scalar> associative_expansion(const LyndonWord& word);

/// All Lyndon words over 1..alphabet with length <= max_length, ordered by (length, lex).
std::vector<LyndonWord> lyndon_words(int alphabet, int max_length);

} // namespace fpoisson
