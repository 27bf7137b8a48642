/*
 * test_pfaffian.cpp
 * -----------------
 * The Pfaffian function on words against an independent perfect-matching
 * oracle, plus the word conventions (signs, repeats, complements).
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#include <catch2/catch_amalgamated.hpp>

#include "pfres/modp.hpp"
#include "pfres/pfaffian.hpp"

using namespace pfres;

TEST_CASE("word sign conventions") {
    CHECK(sort_sign({1, 2, 3}) == 1);
    CHECK(sort_sign({2, 1, 3}) == -1);
    CHECK(sort_sign({3, 1, 2}) == 1);
    CHECK(sort_sign({1, 1}) == 0);
    CHECK(word_sign({1, 2, 3}, {2, 1, 3}) == -1);
    CHECK(word_sign({1, 2, 3}, {1, 2, 4}) == 0);
}

TEST_CASE("base cases of the Pfaffian function") {
    SkewMatrix T = generic_skew(4);
    CHECK(pfaffian_word(T, {}) == Polynomial(1));
    CHECK(pfaffian_word(T, {1}).is_zero());       // odd length
    CHECK(pfaffian_word(T, {1, 1}).is_zero());    // repeated letter
    CHECK(pfaffian_word(T, {1, 2}) == T.at(1, 2));
    CHECK(pfaffian_word(T, {2, 1}) == -T.at(1, 2));
}

TEST_CASE("4x4 Pfaffian closed form") {
    SkewMatrix T = generic_skew(4);
    auto v = [](int i, int j) { return Polynomial::variable(VariableId(i, j)); };
    Polynomial expect = v(1, 2) * v(3, 4) - v(1, 3) * v(2, 4) + v(1, 4) * v(2, 3);
    CHECK(pfaffian(T) == expect);
}

TEST_CASE("expansion agrees with the matching oracle on all subsets") {
    for (int n : {5, 6, 7, 8}) {
        SkewMatrix T = generic_skew(n);
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
            Word w;
            for (int i = 1; i <= n; ++i) {
                if (mask & (std::uint32_t(1) << (i - 1))) w.push_back(i);
            }
            CHECK(pfaffian_word(T, w) == pfaffian_matching_oracle(T, w));
        }
    }
}

TEST_CASE("unsorted words pick up the sorting sign") {
    SkewMatrix T = generic_skew(6);
    Word sorted = {1, 3, 4, 6};
    Word shuffled = {4, 1, 6, 3};
    int sgn = word_sign(sorted, shuffled);
    REQUIRE(sgn != 0);
    Polynomial p = pfaffian_word(T, sorted);
    Polynomial q = pfaffian_word(T, shuffled);
    CHECK(q == (sgn > 0 ? p : -p));
}

TEST_CASE("complement Pfaffian") {
    SkewMatrix T = generic_skew(5);
    CHECK(comp_pfaffian(T, {1}) == pfaffian_word(T, {2, 3, 4, 5}));
    CHECK(comp_pfaffian(T, {1, 2, 3}) == T.at(4, 5));
    CHECK(comp_pfaffian(T, {1, 1}).is_zero());  // repeated index
    CHECK(comp_pfaffian(T, {1, 2, 3, 4, 5}) == Polynomial(1));
    CHECK(pfaffian(T).is_zero());  // odd size
    CHECK_THROWS_AS(comp_pfaffian(T, {6}), std::out_of_range);
}

TEST_CASE("zero-block matrix kills the top corner") {
    SkewMatrix U = zero_block_skew(6);
    CHECK(U.at(1, 2).is_zero());
    CHECK(U.at(1, 3).is_zero());
    CHECK(U.at(2, 3).is_zero());
    CHECK(U.at(1, 4) == Polynomial::variable(VariableId(1, 4)));
    // The Pfaffian of U equals the generic Pfaffian with those three
    // variables sent to zero: check numerically mod p.
    SkewMatrix T = generic_skew(6);
    auto point = random_point(6, 17, 32003);
    auto zeroed = point;
    zeroed[VariableId(1, 2)] = 0;
    zeroed[VariableId(1, 3)] = 0;
    zeroed[VariableId(2, 3)] = 0;
    CHECK(pfaffian(U).evaluate_mod(point, 32003) ==
          pfaffian(T).evaluate_mod(zeroed, 32003));
}

TEST_CASE("numeric Pfaffian matches symbolic specialization") {
    for (int n : {6, 8}) {
        SkewMatrix T = generic_skew(n);
        auto point = random_point(n, 99, 32003);
        ModpSkew S(T, point, 32003);
        CHECK(S.pfaffian_word_value({}) == 1);
        Word all;
        for (int i = 1; i <= n; ++i) all.push_back(i);
        CHECK(S.pfaffian_word_value(all) == pfaffian(T).evaluate_mod(point, 32003));
        CHECK(S.pfaffian_word_value({2, 1}) ==
              (-T.at(1, 2)).evaluate_mod(point, 32003));
    }
}

TEST_CASE("skew matrix validation") {
    CHECK_THROWS_AS(SkewMatrix(0), std::invalid_argument);
    CHECK_THROWS_AS(SkewMatrix(32), std::invalid_argument);
    SkewMatrix T(3);
    CHECK_THROWS_AS(T.set(2, 2, Polynomial(1)), std::invalid_argument);
    T.set(1, 2, Polynomial(3));
    CHECK(T.at(2, 1) == Polynomial(-3));
}
