#include <doctest.h>

#include <random>

#include "compavoid/errors.hpp"
#include "compavoid/series_io.hpp"
#include "compavoid/words.hpp"

using namespace compavoid;

TEST_CASE("word basics")
{
    const Word w = Word::parse("3 5 5 5 3 3 4");
    CHECK(w.length() == 7);
    CHECK(w.weight() == 28);
    CHECK(w.is_composition());
    CHECK(w.to_string() == "3 5 5 5 3 3 4");
    CHECK_FALSE(Word::parse("1 1 0").is_composition());
    CHECK(Word::parse("  2\t7 ") == Word{2, 7});

    CHECK_THROWS_AS(Word(std::vector<Letter>{}), InvalidWordError);
    CHECK_THROWS_AS(Word::parse(""), InvalidWordError);
    CHECK_THROWS_AS(Word::parse("1 x"), ParseError);
    CHECK_THROWS_AS(Word::parse("1 -2"), ParseError);
}

TEST_CASE("weight and length are additive under concatenation")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<Letter> letter(1, 9);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Letter> a(len(rng)), b(len(rng));
        for (auto& u : a) u = letter(rng);
        for (auto& u : b) u = letter(rng);
        const Word x(a), y(b);
        CHECK((x + y).weight() == x.weight() + y.weight());
        CHECK((x + y).length() == x.length() + y.length());
    }
}

TEST_CASE("correlation vector: binary worked example")
{
    const Word x = Word::parse("1 1 0");
    const Word y = Word::parse("1 0 1 1");
    CHECK(correlation_vector(x, y).to_string() == "011");
    CHECK(correlation_vector(y, x).to_string() == "0010");
}

TEST_CASE("correlation vector length follows the first word")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<Letter> letter(1, 3);
    std::uniform_int_distribution<std::size_t> len(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Letter> a(len(rng)), b(len(rng));
        for (auto& u : a) u = letter(rng);
        for (auto& u : b) u = letter(rng);
        const Word x(a), y(b);
        CHECK(correlation_vector(x, y).size() == x.length());
        CHECK(correlation_vector(x, x)[0]);

        // For a reduced pair, y cannot sit strictly inside x.
        const std::vector<Word> pair{x, y};
        if (is_reduced(pair)) {
            const auto c = correlation_vector(x, y);
            for (std::size_t j = 0; j < x.length(); ++j) {
                if (x.length() - j > y.length()) {
                    CHECK_FALSE(c[j]);
                }
            }
        }
    }
}

TEST_CASE("autocorrelation of a constant word is all ones")
{
    for (Letter j = 1; j <= 4; ++j) {
        for (std::size_t r = 1; r <= 6; ++r) {
            const Word w(std::vector<Letter>(r, j));
            CHECK(correlation_vector(w, w).to_string() == std::string(r, '1'));
        }
    }
}

TEST_CASE("interior placement of the shifted word")
{
    // y = 2 3 inside x = 1 2 3 4: at t = 3 the shifted y covers x[1..2].
    const Word x{1, 2, 3, 4};
    const Word y{2, 3};
    CHECK(correlation_vector(x, y).to_string() == "0100");
}

TEST_CASE("correlation polynomials")
{
    CHECK(correlation_polynomial(Word{2, 2}, Word{2, 2}, 8) ==
          Series::from_terms(8, {{{0, 0}, 1}, {{2, 1}, 1}}));
    CHECK(render_by_length(correlation_polynomial(Word{2, 2}, Word{2, 2}, 8)) == "1+x^2q");

    CHECK(correlation_polynomial(Word{1, 1, 1}, Word{1, 1, 1}, 6) ==
          Series::from_terms(6, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}}));

    // (2,1) on (1,2): c_1 = 1 since the prefix 2 is the suffix of (1,2); the
    // trailing letter of (2,1) has weight 1.
    CHECK(correlation_vector(Word{2, 1}, Word{1, 2}).to_string() == "01");
    CHECK(correlation_polynomial(Word{2, 1}, Word{1, 2}, 5) == Series::monomial(5, 1, 1));

    CHECK(render_by_length(correlation_polynomial(Word::parse("1 1 0"), Word::parse("1 0 1 1"), 2)) ==
          "q+xq^2");
    // Terms beyond the bound are dropped.
    CHECK(correlation_polynomial(Word{3, 3, 3}, Word{3, 3, 3}, 4) ==
          Series::from_terms(4, {{{0, 0}, 1}, {{3, 1}, 1}}));
}

TEST_CASE("constant-word correlation polynomial times (1 - q x^j) telescopes")
{
    const unsigned N = 24;
    for (Letter j = 1; j <= 3; ++j) {
        for (unsigned r = 1; r <= 5; ++r) {
            const Word w(std::vector<Letter>(r, j));
            const Series c = correlation_polynomial(w, w, N);
            const Series lhs = c * (Series::one(N) - Series::monomial(N, j, 1));
            const Series rhs = Series::one(N) - Series::monomial(N, r * j, r);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("reducedness")
{
    CHECK(is_reduced(std::vector<Word>{{1, 1}, {2, 2}}));
    CHECK_FALSE(is_reduced(std::vector<Word>{{1, 1}, {1, 1, 2}}));
    CHECK(is_reduced(std::vector<Word>{{1, 2}, {2, 1}}));
    CHECK_FALSE(is_reduced(std::vector<Word>{{1, 1}, {1, 1}}));
    CHECK(is_reduced(std::vector<Word>{{3}}));
}

TEST_CASE("forbidden lists")
{
    const auto carlitz3 = make_forbidden_list({{1, 1}, {2, 2}, {3, 3}});
    CHECK(carlitz3.easy_case());
    CHECK(carlitz3.size() == 3);
    CHECK(carlitz3.to_string() == "1 1;2 2;3 3");

    CHECK(correlation_vector(Word{1, 2}, Word{2, 1}).to_string() == "01");
    CHECK_FALSE(make_forbidden_list({{1, 2}, {2, 1}}).easy_case());

    CHECK_THROWS_AS(make_forbidden_list({{1, 1}, {1, 1}}), ReducednessError);
    CHECK_THROWS_WITH_AS(make_forbidden_list({{1, 1}, {1, 1, 2}}),
                         doctest::Contains("\"1 1\" is a factor of \"1 1 2\""), ReducednessError);
    CHECK_THROWS_AS(make_forbidden_list({}), InvalidWordError);
    CHECK_THROWS_AS(make_forbidden_list({{1, 0}}), InvalidWordError);

    CHECK(parse_word_list("1 1;2 2") == std::vector<Word>{{1, 1}, {2, 2}});
    CHECK_THROWS_AS(parse_word_list("1 1;;2"), InvalidWordError);
}
