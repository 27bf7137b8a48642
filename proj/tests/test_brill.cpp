/*
 * test_brill.cpp
 * --------------
 * Determinant oracle, the Pfaffian formula for determinants of skew
 * submatrices, and the closed forms for the maximal minors of the last
 * differential.
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#include <catch2/catch_amalgamated.hpp>

#include "pfres/brill.hpp"
#include "pfres/modp.hpp"
#include "pfres/verify.hpp"

using namespace pfres;

namespace {

Polynomial var(int i, int j) { return Polynomial::variable(VariableId(i, j)); }

}  // namespace

TEST_CASE("determinant oracle small cases") {
    PolyMatrix M(2, 2);
    M.at(1, 1) = var(1, 2);
    M.at(1, 2) = var(1, 3);
    M.at(2, 1) = var(2, 3);
    M.at(2, 2) = var(2, 4);
    CHECK(det_oracle(M) == var(1, 2) * var(2, 4) - var(1, 3) * var(2, 3));
    CHECK(det_oracle(PolyMatrix(0, 0)) == Polynomial(1));
    CHECK_THROWS_AS(det_oracle(PolyMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant oracle against numeric elimination") {
    SkewMatrix T = generic_skew(7);
    std::vector<int> rho = {1, 2, 4, 6};
    std::vector<int> sigma = {2, 3, 5, 7};
    PolyMatrix M = skew_submatrix(T, rho, sigma);
    auto point = random_point(7, 5, 32003);
    ModpMatrix num = specialize(M, point, 32003);
    CHECK(det_oracle(M).evaluate_mod(point, 32003) == num.determinant());
}

TEST_CASE("det of a square skew principal submatrix is a Pfaffian square") {
    SkewMatrix T = generic_skew(6);
    std::vector<int> idx = {1, 2, 5, 6};
    Polynomial pf = pfaffian_word(T, {1, 2, 5, 6});
    CHECK(det_oracle(skew_submatrix(T, idx, idx)) == pf * pf);
}

TEST_CASE("Pfaffian minor formula on mixed index sets") {
    for (int n : {5, 6}) {
        SkewMatrix T = generic_skew(n);
        for (int m = 1; m <= 3; ++m) {
            for (const Word& rho : detail::subsets_of_size(n, m)) {
                for (const Word& sigma : detail::subsets_of_size(n, m)) {
                    CHECK(brill_minor(T, rho, sigma) ==
                          det_oracle(skew_submatrix(T, rho, sigma)));
                }
            }
        }
    }
    SkewMatrix T = generic_skew(5);
    CHECK_THROWS_AS(brill_minor(T, {1, 2}, {1}), std::invalid_argument);
}

TEST_CASE("closed-form d3 minors, all row triples") {
    SuiteResult odd = suite_brill({5});
    INFO((odd.failures.empty() ? std::string() : odd.failures.front()));
    CHECK(odd.passed());
    for (int n : {6, 7}) {
        SkewMatrix T = generic_skew(n);
        Word cols;
        for (int j = 4; j <= n; ++j) cols.push_back(j);
        for (const Word& r : detail::subsets_of_size(n, 3)) {
            Word rows;
            for (int i = 1; i <= n; ++i) {
                if (i != r[0] && i != r[1] && i != r[2]) rows.push_back(i);
            }
            CHECK(d3_minor_formula(T, r) ==
                  det_oracle(skew_submatrix(T, rows, cols)));
        }
    }
}

TEST_CASE("randomized numeric trials on larger sizes") {
    SuiteResult r = suite_brill_random({8}, 12345, 50, 32003);
    INFO((r.failures.empty() ? std::string() : r.failures.front()));
    CHECK(r.passed());
    CHECK(r.checks == 50);
}
