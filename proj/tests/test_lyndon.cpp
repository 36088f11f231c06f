#include "helpers.hpp"

#include "fpoisson/lyndon.hpp"
#include "fpoisson/random.hpp"

#include <doctest.h>

using namespace fpoisson;
using test::assoc_of;

namespace {

std::string w(std::initializer_list<int> letters)
{
    std::string s;
    for (int l : letters) s.push_back(static_cast<char>(l));
    return s;
}

LyndonWord lw(std::initializer_list<int> letters) { return LyndonWord(w(letters)); }

BracketTree x(int g) { return BracketTree::leaf(g); }
BracketTree br(BracketTree a, BracketTree b) { return BracketTree::bracket(std::move(a), std::move(b)); }

} // namespace

TEST_CASE("Lyndon words")
{
    CHECK(is_lyndon(w({1, 2})));
    CHECK(is_lyndon(w({1, 2, 3})));
    CHECK(is_lyndon(w({1, 3, 2})));
    CHECK(is_lyndon(w({1, 1, 2})));
    CHECK_FALSE(is_lyndon(w({2, 1})));
    CHECK_FALSE(is_lyndon(w({1, 1})));
    CHECK_FALSE(is_lyndon(w({1, 2, 1, 2})));
    CHECK_FALSE(is_lyndon(""));
    CHECK_THROWS_AS(LyndonWord(w({2, 1})), std::invalid_argument);
}

TEST_CASE("standard factorization takes the longest proper Lyndon suffix")
{
    auto [u, v] = lw({1, 2, 3}).standard_factorization();
    CHECK(u == LyndonWord::letter(1));
    CHECK(v == lw({2, 3}));
    auto [a, b] = lw({2, 3, 3}).standard_factorization();
    CHECK(a == lw({2, 3}));
    CHECK(b == LyndonWord::letter(3));
    auto [c, d] = lw({1, 1, 2}).standard_factorization();
    CHECK(c == LyndonWord::letter(1));
    CHECK(d == lw({1, 2}));
    CHECK(lw({2, 3, 3}).bracketing() == "[[x2,x3],x3]");
    CHECK(lw({1, 2, 3}).bracketing() == "[x1,[x2,x3]]");
}

TEST_CASE("Lyndon words are enumerated in (length, lex) order with Witt's counts")
{
    const auto words = lyndon_words(3, 5);
    std::map<std::size_t, int> per_length;
    for (const auto& word : words) ++per_length[word.length()];
    CHECK(per_length == std::map<std::size_t, int>{{1, 3}, {2, 3}, {3, 8}, {4, 18}, {5, 48}});
    for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] < words[i]);
}

TEST_CASE("bracket examples")
{
    const int n = 3;
    CHECK(lyndon_normalize(br(x(1), br(x(2), x(3))), n) == LieElement::basis(lw({1, 2, 3})));
    CHECK(lyndon_normalize(br(x(1), x(1)), n).is_zero());
    CHECK(lyndon_normalize(br(br(x(1), x(2)), x(3)), n) ==
          LieElement::basis(lw({1, 2, 3})) + LieElement::basis(lw({1, 3, 2})));
    CHECK(lyndon_normalize(br(x(3), x(1)), n) == LieElement::basis(lw({1, 3}), -1));
    CHECK(lyndon_normalize(br(x(3), br(x(3), x(2))), n) == LieElement::basis(lw({2, 3, 3})));
    CHECK_THROWS_AS(lyndon_normalize(br(x(1), x(4)), n), std::out_of_range);
}

TEST_CASE("each basis element leads its associative expansion with itself")
{
    for (const auto& word : lyndon_words(3, 5)) {
        const auto expansion = assoc_of(word);
        REQUIRE_FALSE(expansion.empty());
        CHECK(expansion.begin()->first == std::string(word.letters()));
        CHECK(expansion.begin()->second == 1);
        CHECK(associative_expansion(word) == expansion);
    }
}

TEST_CASE("lie_bracket matches the commutator in the free associative algebra")
{
    const auto words = lyndon_words(3, 3);
    for (const auto& u : words)
        for (const auto& v : words) {
            INFO(u.digits() << " " << v.digits());
            CHECK(assoc_of(lie_bracket(u, v)) == test::assoc_commutator(assoc_of(u), assoc_of(v)));
        }
}

TEST_CASE("normalization of random trees agrees with the associative oracle")
{
    for (std::size_t k = 0; k < 300; ++k) {
        RandomSource rng(RandomSource::case_seed(11, k));
        const int n = rng.uniform(2, 4);
        const BracketTree tree = rng.tree(all_generators(n), rng.uniform(2, 6));
        const LieElement recursive = lyndon_normalize(tree, n, RewriteStrategy::Recursive);
        CHECK(assoc_of(recursive) == assoc_of(tree));
        CHECK(lyndon_normalize(tree, n, RewriteStrategy::Triangular) == recursive);
    }
}
