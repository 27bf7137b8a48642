/*
 * test_identities.cpp
 * -------------------
 * The overlapping-Pfaffian identity over bounded enumerations of
 * disjoint index words, and the expansion lemmas (spot checks here; the
 * exhaustive sweep lives in the verification suite and the acceptance
 * driver).
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#include <catch2/catch_amalgamated.hpp>

#include "pfres/identities.hpp"
#include "pfres/verify.hpp"

using namespace pfres;

namespace {

// All ways to pick disjoint sorted words alpha, beta, gamma of the given
// sizes out of {1..n}.
void for_each_partition(int n, int a, int b, int c,
                        const std::function<void(const Word&, const Word&,
                                                 const Word&)>& f) {
    for (const Word& alpha : detail::subsets_of_size(n, a)) {
        for (const Word& beta : detail::subsets_of_size(n, b)) {
            bool disjoint_ab = true;
            for (int x : beta) {
                if (std::find(alpha.begin(), alpha.end(), x) != alpha.end()) {
                    disjoint_ab = false;
                }
            }
            if (!disjoint_ab) continue;
            for (const Word& gamma : detail::subsets_of_size(n, c)) {
                bool ok = true;
                for (int x : gamma) {
                    if (std::find(alpha.begin(), alpha.end(), x) != alpha.end() ||
                        std::find(beta.begin(), beta.end(), x) != beta.end()) {
                        ok = false;
                    }
                }
                if (ok) f(alpha, beta, gamma);
            }
        }
    }
}

}  // namespace

TEST_CASE("overlapping Pfaffians over bounded partitions") {
    for (int n : {5, 6}) {
        for (Variant v : {Variant::generic, Variant::zero_block}) {
            SkewMatrix T = v == Variant::generic ? generic_skew(n) : zero_block_skew(n);
            int count = 0;
            for (int a = 0; a <= 2; ++a) {
                for (int b = 1; b <= 3; ++b) {
                    for (int c = 0; c <= 3 && a + b + c <= n; ++c) {
                        for_each_partition(
                            n, a, b, c,
                            [&](const Word& alpha, const Word& beta, const Word& gamma) {
                                for (int pivot : beta) {
                                    CHECK(check_overlapping(T, alpha, beta, gamma,
                                                            pivot));
                                    ++count;
                                }
                            });
                    }
                }
            }
            CHECK(count > 100);
        }
    }
}

TEST_CASE("overlapping requires the pivot to lie in beta") {
    SkewMatrix T = generic_skew(5);
    CHECK_THROWS_AS(check_overlapping(T, {1}, {2, 3}, {4}, 5), std::invalid_argument);
}

TEST_CASE("expansion lemma spot checks") {
    SkewMatrix T = generic_skew(6);
    CHECK(check_lemma(T, "exp", {1, 2, 3, 4}, 2));
    CHECK(check_lemma(T, "pf1-2", {1, 3, 5}, 2));
    CHECK(check_lemma(T, "pf3-1", {2, 4, 6}, 3));
    CHECK(check_lemma(T, "421-even", {1, 2, 3, 4, 5}, 2));
    CHECK(check_lemma(T, "pf1-1", {1, 2, 3, 4}));
    CHECK(check_lemma(T, "531-odd", {1, 2, 3, 4, 5, 6}));
    CHECK(check_lemma(T, "42-even", {1, 2, 3, 4, 5, 6}));
    CHECK(check_lemma(T, "51-odd", {1, 2, 3, 4, 5}));
    CHECK_THROWS_AS(check_lemma(T, "no-such-lemma", {1}), std::invalid_argument);
}

TEST_CASE("lemma sweep on a small size") {
    SuiteResult r = suite_appendix_a({5});
    INFO((r.failures.empty() ? std::string() : r.failures.front()));
    CHECK(r.passed());
    CHECK(r.checks > 500);
}
