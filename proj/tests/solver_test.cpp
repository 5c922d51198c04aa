#include <doctest.h>

#include <map>
#include <random>

#include "compavoid/errors.hpp"
#include "compavoid/oracle.hpp"
#include "compavoid/runs.hpp"
#include "compavoid/series_io.hpp"
#include "compavoid/solver.hpp"
#include "support/test_oracles.hpp"

using namespace compavoid;
using compavoid::testing::binomial;
using compavoid::testing::cramer_first_component;

namespace {

// Every word over {1..max_letter} with length <= max_len and weight <= max_weight.
std::vector<Word> word_pool(Letter max_letter, std::size_t max_len, std::uint64_t max_weight)
{
    std::vector<Word> out;
    std::vector<std::vector<Letter>> frontier{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& prefix : frontier) {
            for (Letter u = 1; u <= max_letter; ++u) {
                auto w = prefix;
                w.push_back(u);
                const Word word(w);
                if (word.weight() <= max_weight) {
                    out.push_back(word);
                    next.push_back(std::move(w));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// Brute-force (n,k) table up to weight N by direct enumeration.
Series brute_force_series(const ForbiddenList& list, unsigned N)
{
    const auto filter = CompositionFilter::avoid_factors(list);
    std::vector<Term> terms{{{0, 0}, 1}};
    std::vector<Letter> parts;
    for (unsigned n = 1; n <= N; ++n) {
        CompositionStream stream(n);
        while (stream.next(parts)) {
            if (filter.accepts(parts)) {
                terms.push_back({{n, unsigned(parts.size())}, 1});
            }
        }
    }
    return Series::from_terms(N, terms);
}

Series all_compositions(unsigned N)
{
    std::vector<Term> terms{{{0, 0}, 1}};
    for (unsigned n = 1; n <= N; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            terms.push_back({{n, k}, binomial(n - 1, k - 1)});
        }
    }
    return Series::from_terms(N, terms);
}

Series table(unsigned N, const std::map<std::pair<unsigned, unsigned>, int>& cells)
{
    std::vector<Term> terms;
    for (const auto& [nk, c] : cells) {
        terms.push_back({{nk.first, nk.second}, c});
    }
    return Series::from_terms(N, terms);
}

} // namespace

TEST_CASE("system for a single word")
{
    const auto sys = build_system(make_forbidden_list({{1, 1}}), 4);
    const unsigned N = 4;
    REQUIRE(sys.dimension() == 2);
    CHECK(sys.matrix[0][0] == Series::one(N) - Series::monomial(N, 1, 0) - Series::monomial(N, 1, 1));
    CHECK(sys.matrix[0][1] == Series::one(N) - Series::monomial(N, 1, 0));
    CHECK(sys.matrix[1][0] == Series::monomial(N, 2, 2));
    CHECK(sys.matrix[1][1] == -(Series::one(N) + Series::monomial(N, 1, 1)));
    CHECK(sys.rhs[0] == Series::one(N) - Series::monomial(N, 1, 0));
    CHECK(sys.rhs[1].is_zero());
}

TEST_CASE("system for an overlapping pair")
{
    // c((1,2),(2,1)) = 01 with trailing letter 2; c((2,1),(1,2)) = 01 with
    // trailing letter 1; each word overlaps itself only fully.
    const unsigned N = 4;
    const auto sys = build_system(make_forbidden_list({{1, 2}, {2, 1}}), N);
    CHECK(sys.matrix[1][0] == Series::monomial(N, 3, 2));
    CHECK(sys.matrix[2][0] == Series::monomial(N, 3, 2));
    CHECK(sys.matrix[1][1] == -Series::one(N));
    CHECK(sys.matrix[1][2] == -Series::monomial(N, 2, 1));
    CHECK(sys.matrix[2][1] == -Series::monomial(N, 1, 1));
    CHECK(sys.matrix[2][2] == -Series::one(N));
}

TEST_CASE("solve_f on small lists")
{
    const auto f11 = solve_f(build_system(make_forbidden_list({{1, 1}}), 5));
    CHECK(f11.coefficient(5, 2) == 4);
    CHECK(f11 == table(5, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{3, 1}, 1}, {{3, 2}, 2},
                           {{4, 1}, 1}, {{4, 2}, 3}, {{4, 3}, 1}, {{5, 1}, 1}, {{5, 2}, 4}, {{5, 3}, 4}}));

    const auto f1221 = solve_f(build_system(make_forbidden_list({{1, 2}, {2, 1}}), 6));
    CHECK(f1221 == table(6, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 1}, 1},
                             {{3, 3}, 1}, {{4, 1}, 1}, {{4, 2}, 3}, {{4, 4}, 1}, {{5, 1}, 1},
                             {{5, 2}, 4}, {{5, 3}, 3}, {{5, 5}, 1}, {{6, 1}, 1}, {{6, 2}, 5},
                             {{6, 3}, 6}, {{6, 4}, 4}, {{6, 6}, 1}}));

    const auto f121 = solve_f(build_system(make_forbidden_list({{1, 2, 1}}), 7));
    CHECK(f121.coefficient(7, 3) == 15);
    CHECK(f121.coefficient(7, 4) == 18);
    CHECK(f121.coefficient(7, 5) == 10);
    CHECK(f121.coefficient(6, 4) == 8);
}

TEST_CASE("a word heavier than the bound forbids nothing")
{
    for (unsigned N = 0; N <= 8; ++N) {
        const auto list = make_forbidden_list({Word(std::vector<Letter>{N + 1})});
        CHECK(solve_f(build_system(list, N)) == all_compositions(N));
        CHECK(easy_case_series(list, N) == all_compositions(N));
    }
}

TEST_CASE("finite Carlitz sub-list matches the Carlitz series")
{
    for (unsigned N = 1; N <= 10; ++N) {
        std::vector<Word> words;
        for (Letter j = 1; 2 * j <= N; ++j) {
            words.push_back(Word{j, j});
        }
        if (words.empty()) {
            continue;
        }
        const auto list = make_forbidden_list(words);
        CHECK(solve_f(build_system(list, N)) == carlitz_series(N));
    }
}

TEST_CASE("easy case closed form")
{
    const auto list = make_forbidden_list({{1, 1}, {2, 2}});
    CHECK(easy_case_series(list, 4) == solve_f(build_system(list, 4)));
    CHECK(easy_case_series(list, 4) ==
          table(4, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{3, 1}, 1}, {{3, 2}, 2},
                    {{4, 1}, 1}, {{4, 2}, 2}, {{4, 3}, 1}}));

    CHECK(render_text(easy_case_series(make_forbidden_list({{1, 1}}), 3)) == "1+qx+qx^2+(q+2q^2)x^3");

    CHECK_THROWS_AS(easy_case_series(make_forbidden_list({{1, 2}, {2, 1}}), 4), NotEasyCaseError);
    CHECK_THROWS_AS(sparse_first_component(build_system(make_forbidden_list({{1, 2}, {2, 1}}), 4)),
                    NotEasyCaseError);
}

TEST_CASE("cross-method equivalence on easy-case lists")
{
    const auto pool = word_pool(3, 6, 6);
    REQUIRE(pool.size() == 51);
    std::size_t checked = 0;
    auto check_list = [&](const std::vector<Word>& words, unsigned N) {
        if (!is_reduced(words)) {
            return;
        }
        const auto list = make_forbidden_list(words);
        if (!list.easy_case()) {
            return;
        }
        const auto system = build_system(list, N);
        const auto f = solve_f(system);
        CHECK(easy_case_series(list, N) == f);
        CHECK(sparse_first_component(system) == f);
        ++checked;
    };
    for (std::size_t i = 0; i < pool.size(); ++i) {
        check_list({pool[i]}, 10);
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            check_list({pool[i], pool[j]}, 10);
        }
    }
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        check_list({pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]}, 1 + trial % 10);
    }
    CHECK(checked > 300);
}

TEST_CASE("solve_f agrees with brute force and with Cramer's rule")
{
    const auto pool = word_pool(3, 3, 9);
    REQUIRE(pool.size() == 39);
    const unsigned N = 12;
    auto check_list = [&](const std::vector<Word>& words) {
        if (!is_reduced(words)) {
            return;
        }
        const auto list = make_forbidden_list(words);
        CAPTURE(list.to_string());
        const auto system = build_system(list, N);
        const auto f = solve_f(system);
        CHECK(f == brute_force_series(list, N));
        if (list.size() <= 2) {
            CHECK(cramer_first_component(system) == f);
        }
    };
    for (std::size_t i = 0; i < pool.size(); ++i) {
        check_list({pool[i]});
        for (std::size_t j = i + 1; j < pool.size(); j += 3) {
            check_list({pool[i], pool[j]});
        }
    }
}

TEST_CASE("Cramer reference on three-word lists")
{
    const unsigned N = 8;
    for (const auto& words : std::vector<std::vector<Word>>{
             {{1, 2}, {2, 1}, {3, 3}}, {{1, 1}, {2, 2}, {3, 3}}, {{1, 2, 1}, {2, 1, 2}, {3}}}) {
        const auto system = build_system(make_forbidden_list(words), N);
        CHECK(cramer_first_component(system) == solve_f(system));
    }
}

TEST_CASE("enlarging a forbidden list never increases a coefficient")
{
    const auto pool = word_pool(3, 3, 9);
    const unsigned N = 9;
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int compared = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const Word a = pool[pick(rng)];
        const Word b = pool[pick(rng)];
        const std::vector<Word> small{a};
        const std::vector<Word> large{a, b};
        if (!is_reduced(large)) {
            continue;
        }
        const auto f_small = solve_f(build_system(make_forbidden_list(small), N));
        const auto f_large = solve_f(build_system(make_forbidden_list(large), N));
        for (const auto& [e, c] : f_large.terms()) {
            CHECK(c <= f_small.coefficient(e.n, e.k));
        }
        for (const auto& [e, c] : f_small.terms()) {
            CHECK(f_large.coefficient(e.n, e.k) <= c);
        }
        ++compared;
    }
    CHECK(compared > 50);
}

TEST_CASE("solver surfaces a missing unit pivot")
{
    auto system = build_system(make_forbidden_list({{1, 1}}), 4);
    system.matrix[0][0] = Series::constant(4, 2);
    system.matrix[1][0] = Series::constant(4, 3);
    CHECK_THROWS_AS(solve_f(system), PivotError);

    // A unit further down the column is swapped in.
    auto swapped = build_system(make_forbidden_list({{1, 1}}), 4);
    std::swap(swapped.matrix[0], swapped.matrix[1]);
    std::swap(swapped.rhs[0], swapped.rhs[1]);
    REQUIRE(swapped.matrix[0][0] == Series::monomial(4, 2, 2));
    CHECK(solve_f(swapped) == solve_f(build_system(make_forbidden_list({{1, 1}}), 4)));
}
