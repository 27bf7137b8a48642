/*
 * identities.hpp
 * --------------
 * Polynomial identities among sub-Pfaffians: the overlapping-Pfaffian
 * formula on words and the eight derived expansion lemmas.  Each checker
 * evaluates both sides symbolically over a given skew matrix and reports
 * whether they agree.
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#pragma once

#include <string>

#include "pfres/pfaffian.hpp"

namespace pfres {

namespace detail {

// The word `w` with one occurrence of each letter of `remove` deleted,
// preserving order.  Letters in `remove` must occur in `w`.
inline Word word_minus(const Word& w, const Word& remove) {
    Word out = w;
    for (int r : remove) {
        auto it = std::find(out.begin(), out.end(), r);
        if (it == out.end()) {
            throw std::invalid_argument("word_minus: letter not present");
        }
        out.erase(it);
    }
    return out;
}

inline Word word_concat(std::initializer_list<Word> parts) {
    Word out;
    for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// t_{ab} read off the matrix; accepts either index order.
inline Polynomial entry(const SkewMatrix& T, int a, int b) { return T.at(a, b); }

}  // namespace detail

// Overlapping Pfaffians: for disjoint words alpha, beta, gamma and a
// letter b of beta,
//
//   P[ab] P[ag] = sum_{i in b, i != b} sgn(b -> bi(b\bi)) P[ab\bi] P[ag bi]
//               + sum_{j in g} sgn(b -> b(b\b)) sgn(g -> j(g\j))
//                 P[a j b\b] P[a b g\j].
//
// Returns true when both sides agree as polynomials.
inline bool check_overlapping(const SkewMatrix& T, const Word& alpha,
                              const Word& beta, const Word& gamma, int b) {
    using detail::word_concat;
    using detail::word_minus;
    if (std::find(beta.begin(), beta.end(), b) == beta.end()) {
        throw std::invalid_argument("check_overlapping: b must be a letter of beta");
    }

    Polynomial lhs = pfaffian_word(T, word_concat({alpha, beta})) *
                     pfaffian_word(T, word_concat({alpha, gamma}));

    Polynomial rhs;
    for (int i : beta) {
        if (i == b) continue;  // the i = b term carries sign 0
        Word rest = word_minus(beta, {b, i});
        int sgn = word_sign(beta, word_concat({{b, i}, rest}));
        if (sgn == 0) continue;
        Polynomial prod = pfaffian_word(T, word_concat({alpha, rest})) *
                          pfaffian_word(T, word_concat({alpha, gamma, {b, i}}));
        rhs += sgn > 0 ? prod : -prod;
    }
    int sgn_b = word_sign(beta, word_concat({{b}, word_minus(beta, {b})}));
    for (int j : gamma) {
        Word grest = word_minus(gamma, {j});
        int sgn = sgn_b * word_sign(gamma, word_concat({{j}, grest}));
        if (sgn == 0) continue;
        Polynomial prod =
            pfaffian_word(T, word_concat({alpha, {j}, word_minus(beta, {b})})) *
            pfaffian_word(T, word_concat({alpha, {b}, grest}));
        rhs += sgn > 0 ? prod : -prod;
    }
    return lhs == rhs;
}

namespace detail {

inline int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

// Laplacian expansion of a sub-Pfaffian along position l of the sorted
// word u = u_1 < ... < u_k:
//   (-1)^{l-1} pf[u] = sum_{i<l} (-1)^i t_{u_i u_l} pf[u \ u_i u_l]
//                    + sum_{i>l} (-1)^i t_{u_l u_i} pf[u \ u_i u_l].
inline bool lemma_exp(const SkewMatrix& T, const Word& u, int l) {
    int k = static_cast<int>(u.size());
    Polynomial lhs = sign_pow(l - 1) * sub_pfaffian(T, u);
    Polynomial rhs;
    for (int i = 1; i <= k; ++i) {
        if (i == l) continue;
        Polynomial term = entry(T, u[l - 1], u[i - 1]);
        if (i < l) term = -term;  // t_{u_i u_l} = -t_{u_l u_i}
        term = term * sub_pfaffian(T, word_minus(u, {u[i - 1], u[l - 1]}));
        rhs += sign_pow(i) > 0 ? term : -term;
    }
    return lhs == rhs;
}

// sum_{i<l} (-1)^i t_{u_i u_l} pf[u \ u_i] = sum_{i>l} (-1)^i t_{u_l u_i} pf[u \ u_i].
inline bool lemma_pf1_2(const SkewMatrix& T, const Word& u, int l) {
    int k = static_cast<int>(u.size());
    Polynomial lhs, rhs;
    for (int i = 1; i < l; ++i) {
        Polynomial term =
            -entry(T, u[l - 1], u[i - 1]) * sub_pfaffian(T, word_minus(u, {u[i - 1]}));
        lhs += sign_pow(i) > 0 ? term : -term;
    }
    for (int i = l + 1; i <= k; ++i) {
        Polynomial term =
            entry(T, u[l - 1], u[i - 1]) * sub_pfaffian(T, word_minus(u, {u[i - 1]}));
        rhs += sign_pow(i) > 0 ? term : -term;
    }
    return lhs == rhs;
}

// (-1)^{l-1} Pf(T) pfbar[u] = sum_i (-1)^i pfbar[u_i u_l] pfbar[u \ u_i u_l];
// the i = l term has a repeated index and contributes 0.
inline bool lemma_pf3_1(const SkewMatrix& T, const Word& u, int l) {
    int k = static_cast<int>(u.size());
    Polynomial lhs = sign_pow(l - 1) * (pfaffian(T) * comp_pfaffian(T, u));
    Polynomial rhs;
    for (int i = 1; i <= k; ++i) {
        if (i == l) continue;
        Polynomial term = comp_pfaffian(T, {u[i - 1], u[l - 1]}) *
                          comp_pfaffian(T, word_minus(u, {u[i - 1], u[l - 1]}));
        rhs += sign_pow(i) > 0 ? term : -term;
    }
    return lhs == rhs;
}

// sum_{i<l} (-1)^i pfbar[u \ u_i] pfbar[u_i u_l]
//   = sum_{i>l} (-1)^i pfbar[u \ u_i] pfbar[u_l u_i],  for l <= k-1.
inline bool lemma_421_even(const SkewMatrix& T, const Word& u, int l) {
    int k = static_cast<int>(u.size());
    Polynomial lhs, rhs;
    for (int i = 1; i < l; ++i) {
        Polynomial term = comp_pfaffian(T, word_minus(u, {u[i - 1]})) *
                          comp_pfaffian(T, {u[i - 1], u[l - 1]});
        lhs += sign_pow(i) > 0 ? term : -term;
    }
    for (int i = l + 1; i <= k; ++i) {
        Polynomial term = comp_pfaffian(T, word_minus(u, {u[i - 1]})) *
                          comp_pfaffian(T, {u[l - 1], u[i - 1]});
        rhs += sign_pow(i) > 0 ? term : -term;
    }
    return lhs == rhs;
}

// sum_i (-1)^i pfbar[u_i] pfbar[u \ u_i] = 0.
inline bool lemma_pf1_1(const SkewMatrix& T, const Word& u) {
    int k = static_cast<int>(u.size());
    Polynomial lhs;
    for (int i = 1; i <= k; ++i) {
        Polynomial term =
            comp_pfaffian(T, {u[i - 1]}) * comp_pfaffian(T, word_minus(u, {u[i - 1]}));
        lhs += sign_pow(i) > 0 ? term : -term;
    }
    return lhs.is_zero();
}

// For u < v < w < x < y < z:
//   pfbar[y] pfbar[uvwxz] - pfbar[z] pfbar[uvwxy]
//     = pfbar[uyz] pfbar[vwx] - pfbar[vyz] pfbar[uwx]
//     + pfbar[wyz] pfbar[uvx] - pfbar[xyz] pfbar[uvw].
inline bool lemma_531_odd(const SkewMatrix& T, const Word& u6) {
    int u = u6[0], v = u6[1], w = u6[2], x = u6[3], y = u6[4], z = u6[5];
    Polynomial lhs = comp_pfaffian(T, {y}) * comp_pfaffian(T, {u, v, w, x, z}) -
                     comp_pfaffian(T, {z}) * comp_pfaffian(T, {u, v, w, x, y});
    Polynomial rhs = comp_pfaffian(T, {u, y, z}) * comp_pfaffian(T, {v, w, x}) -
                     comp_pfaffian(T, {v, y, z}) * comp_pfaffian(T, {u, w, x}) +
                     comp_pfaffian(T, {w, y, z}) * comp_pfaffian(T, {u, v, x}) -
                     comp_pfaffian(T, {x, y, z}) * comp_pfaffian(T, {u, v, w});
    return lhs == rhs;
}

// For u < v < w < x < y < z:
//   pfbar[xy] pfbar[uvwz] - pfbar[xz] pfbar[uvwy] + pfbar[yz] pfbar[uvwx]
//     = pfbar[uv] pfbar[wxyz] - pfbar[uw] pfbar[vxyz] + pfbar[vw] pfbar[uxyz].
inline bool lemma_42_even(const SkewMatrix& T, const Word& u6) {
    int u = u6[0], v = u6[1], w = u6[2], x = u6[3], y = u6[4], z = u6[5];
    Polynomial lhs = comp_pfaffian(T, {x, y}) * comp_pfaffian(T, {u, v, w, z}) -
                     comp_pfaffian(T, {x, z}) * comp_pfaffian(T, {u, v, w, y}) +
                     comp_pfaffian(T, {y, z}) * comp_pfaffian(T, {u, v, w, x});
    Polynomial rhs = comp_pfaffian(T, {u, v}) * comp_pfaffian(T, {w, x, y, z}) -
                     comp_pfaffian(T, {u, w}) * comp_pfaffian(T, {v, x, y, z}) +
                     comp_pfaffian(T, {v, w}) * comp_pfaffian(T, {u, x, y, z});
    return lhs == rhs;
}

// For u < x < y, v < w < x with all five indices distinct:
//   pfbar[uxy] pfbar[uvw] - pfbar[u] pfbar[uvwxy]
//     = pfbar[uvx] pfbar[uwy] - pfbar[uwx] pfbar[uvy].
inline bool lemma_51_odd(const SkewMatrix& T, const Word& u5) {
    int u = u5[0], v = u5[1], w = u5[2], x = u5[3], y = u5[4];
    Polynomial lhs = comp_pfaffian(T, {u, x, y}) * comp_pfaffian(T, {u, v, w}) -
                     comp_pfaffian(T, {u}) * comp_pfaffian(T, {u, v, w, x, y});
    Polynomial rhs = comp_pfaffian(T, {u, v, x}) * comp_pfaffian(T, {u, w, y}) -
                     comp_pfaffian(T, {u, w, x}) * comp_pfaffian(T, {u, v, y});
    return lhs == rhs;
}

}  // namespace detail

// Dispatch on the lemma identifier.  `u` holds the index data sorted
// ascending; `l` is the pivot position (1-based) where the lemma uses
// one.  Ids: "exp", "pf1-2", "pf3-1", "421-even", "pf1-1", "531-odd",
// "42-even", "51-odd".  For "51-odd" the index data is (u, v, w, x, y)
// with u < x < y and v < w < x; for the two six-index lemmas it is the
// sorted six-tuple.
inline bool check_lemma(const SkewMatrix& T, const std::string& lemma_id,
                        const Word& u, int l = 0) {
    if (lemma_id == "exp") return detail::lemma_exp(T, u, l);
    if (lemma_id == "pf1-2") return detail::lemma_pf1_2(T, u, l);
    if (lemma_id == "pf3-1") return detail::lemma_pf3_1(T, u, l);
    if (lemma_id == "421-even") return detail::lemma_421_even(T, u, l);
    if (lemma_id == "pf1-1") return detail::lemma_pf1_1(T, u);
    if (lemma_id == "531-odd") return detail::lemma_531_odd(T, u);
    if (lemma_id == "42-even") return detail::lemma_42_even(T, u);
    if (lemma_id == "51-odd") return detail::lemma_51_odd(T, u);
    throw std::invalid_argument("check_lemma: unknown lemma id " + lemma_id);
}

}  // namespace pfres
