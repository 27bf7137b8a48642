/*
 * brill.hpp
 * ---------
 * Determinants of submatrices of a skew-symmetric matrix as signed sums
 * of products of two Pfaffians (Brill's formula), and the closed-form
 * expressions for the maximal minors of the last differential of the
 * resolutions built in resolution.hpp.
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "pfres/matrix.hpp"
#include "pfres/pfaffian.hpp"

namespace pfres {

// The submatrix T[rho; sigma] of a skew matrix as a PolyMatrix.
inline PolyMatrix skew_submatrix(const SkewMatrix& T, const std::vector<int>& rho,
                                 const std::vector<int>& sigma) {
    PolyMatrix M(static_cast<int>(rho.size()), static_cast<int>(sigma.size()));
    for (std::size_t r = 0; r < rho.size(); ++r) {
        for (std::size_t c = 0; c < sigma.size(); ++c) {
            if (rho[r] != sigma[c]) {
                M.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1) =
                    T.at(rho[r], sigma[c]);
            }
        }
    }
    return M;
}

// Brill's formula: for sorted index words rho, sigma of common length m,
//
//   det(T[rho; sigma]) = (-1)^{floor(m/2)} sum_{0 <= k <= floor(m/2)} (-1)^k
//       sum_{omega subset rho, |omega| = 2k}
//           sgn(rho -> omega (rho \ omega)) P[omega] P[(rho \ omega) sigma].
//
// Only omega containing rho n sigma contribute; the others die on the
// repeated-letter convention for P.
inline Polynomial brill_minor(const SkewMatrix& T, const std::vector<int>& rho,
                              const std::vector<int>& sigma) {
    if (rho.size() != sigma.size()) {
        throw std::invalid_argument("brill_minor: index sets differ in size");
    }
    int m = static_cast<int>(rho.size());
    Polynomial total;
    // Enumerate subsets omega of rho by bitmask over positions.
    for (std::uint32_t sub = 0; sub < (std::uint32_t(1) << m); ++sub) {
        int bits = 0;
        for (std::uint32_t s = sub; s != 0; s &= s - 1) ++bits;
        if (bits % 2 != 0) continue;
        int k = bits / 2;
        Word omega, rest;
        for (int p = 0; p < m; ++p) {
            if (sub & (std::uint32_t(1) << p)) {
                omega.push_back(rho[p]);
            } else {
                rest.push_back(rho[p]);
            }
        }
        Word rearranged = omega;
        rearranged.insert(rearranged.end(), rest.begin(), rest.end());
        int sgn = word_sign(rho, rearranged);
        if (sgn == 0) continue;
        Word rest_sigma = rest;
        rest_sigma.insert(rest_sigma.end(), sigma.begin(), sigma.end());
        Polynomial prod = pfaffian_word(T, omega) * pfaffian_word(T, rest_sigma);
        if (prod.is_zero()) continue;
        int sign = sgn * ((k % 2 == 0) ? 1 : -1);
        total += sign > 0 ? prod : -prod;
    }
    if ((m / 2) % 2 != 0) total = -total;
    return total;
}

// Closed form for det(T[complement of {r1,r2,r3}; complement of {1,2,3}]),
// the maximal minor of T[1..n; 4..n] omitting rows r1 < r2 < r3.  The
// shape of the answer depends on how the deleted rows meet {1,2,3} and on
// the parity of n.
inline Polynomial d3_minor_formula(const SkewMatrix& T, const std::vector<int>& r) {
    if (r.size() != 3 || !(r[0] < r[1] && r[1] < r[2])) {
        throw std::invalid_argument("d3_minor_formula: need sorted triple r1<r2<r3");
    }
    int n = T.size();
    int r1 = r[0], r2 = r[1], r3 = r[2];
    auto pfb = [&](const Word& I) { return comp_pfaffian(T, I); };

    if (n % 2 != 0) {
        if (r2 <= 3) {
            return pfb({r1, r2, r3}) * pfb({1, 2, 3});
        }
        if (r1 <= 3) {
            return pfb({r1, r2, r3}) * pfb({1, 2, 3}) -
                   pfb({1, 2, 3, r2, r3}) * pfb({r1});
        }
        return pfb({r1, r2, r3}) * pfb({1, 2, 3}) -
               pfb({2, 3, r1, r2, r3}) * pfb({1}) +
               pfb({1, 3, r1, r2, r3}) * pfb({2}) -
               pfb({1, 2, r1, r2, r3}) * pfb({3});
    }

    if (r3 == 3) return Polynomial();
    if (r2 <= 3) {
        return pfb({1, 2, 3, r3}) * pfb({r1, r2});
    }
    if (r1 == 1) {
        return pfb({1, 2, r2, r3}) * pfb({1, 3}) - pfb({1, 3, r2, r3}) * pfb({1, 2});
    }
    if (r1 == 2) {
        return pfb({1, 2, r2, r3}) * pfb({2, 3}) - pfb({2, 3, r2, r3}) * pfb({1, 2});
    }
    if (r1 == 3) {
        return pfb({1, 3, r2, r3}) * pfb({2, 3}) - pfb({2, 3, r2, r3}) * pfb({1, 3});
    }
    return pfb({1, r1, r2, r3}) * pfb({2, 3}) - pfb({2, r1, r2, r3}) * pfb({1, 3}) +
           pfb({3, r1, r2, r3}) * pfb({1, 2}) - pfb({1, 2, 3, r1, r2, r3}) * pfaffian(T);
}

}  // namespace pfres
