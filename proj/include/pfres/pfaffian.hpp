/*
 * pfaffian.hpp
 * ------------
 * Skew-symmetric matrices with polynomial entries and the combinatorial
 * Pfaffian function on words.
 *
 * A word is a finite sequence of row indices.  The Pfaffian function P
 * assigns a polynomial to every word: P of the empty word is 1, P of a
 * word of odd length or with a repeated letter is 0, and P of a sorted
 * word i_1 < ... < i_{2k} is the Pfaffian of the principal submatrix on
 * those rows and columns.  An arbitrary word contributes the sign of the
 * permutation that sorts it.
 *
 * sub_pfaffian(T, I)  = P on the sorted index set I.
 * comp_pfaffian(T, I) = P on the complement of I in {1..n} (the paper-
 * style "delete rows and columns I" Pfaffian); the empty complement gives
 * 1 and an I with repeats gives 0.
 *
 * Pfaffians are computed by Laplacian expansion along the smallest index,
 * memoized per matrix on the index-subset bitmask.  A brute-force sum
 * over perfect matchings is provided as an independent oracle for tests.
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "pfres/polynomial.hpp"

namespace pfres {

using Word = std::vector<int>;

// Sign of the permutation sorting `w`, or 0 if `w` has a repeated letter.
inline int sort_sign(const Word& w) {
    Word v = w;
    int sign = 1;
    for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = a + 1; b < v.size(); ++b) {
            if (v[a] == v[b]) return 0;
            if (v[a] > v[b]) {
                std::swap(v[a], v[b]);
                sign = -sign;
            }
        }
    }
    return sign;
}

// Sign of the permutation taking the word `from` to the word `to`; the two
// must use the same letters, each exactly once, or the sign is 0.
inline int word_sign(const Word& from, const Word& to) {
    if (from.size() != to.size()) return 0;
    int sf = sort_sign(from);
    int st = sort_sign(to);
    if (sf == 0 || st == 0) return 0;
    Word a = from, b = to;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return 0;
    return sf * st;
}

// An n x n skew-symmetric matrix of polynomials, with a per-matrix memo
// for sub-Pfaffians keyed by index-subset bitmask.  Indices are 1-based.
class SkewMatrix {
  public:
    explicit SkewMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
        if (n < 1 || n > 31) {
            throw std::invalid_argument("SkewMatrix: size must be in [1, 31]");
        }
    }

    int size() const { return n_; }

    const Polynomial& at(int i, int j) const {
        check_index(i);
        check_index(j);
        return entries_[idx(i, j)];
    }

    // Sets entry (i, j) with i < j and entry (j, i) to its negation.
    void set(int i, int j, const Polynomial& p) {
        check_index(i);
        check_index(j);
        if (i >= j) throw std::invalid_argument("SkewMatrix::set requires i < j");
        entries_[idx(i, j)] = p;
        entries_[idx(j, i)] = -p;
        memo_.clear();
    }

    // Pfaffian of the principal submatrix on the sorted index set encoded
    // by `mask` (bit i-1 set means index i participates).
    const Polynomial& pfaffian_mask(std::uint32_t mask) const {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;

        Polynomial value;
        int bits = 0;
        for (std::uint32_t m = mask; m != 0; m &= m - 1) ++bits;
        if (bits == 0) {
            value = Polynomial(1);
        } else if (bits % 2 == 0) {
            // Expand along the smallest participating index i0: sum over
            // partners j with alternating signs.
            int i0 = 0;
            for (int i = 1; i <= n_; ++i) {
                if (mask & bit(i)) {
                    i0 = i;
                    break;
                }
            }
            std::uint32_t rest = mask & ~bit(i0);
            int sign = 1;
            for (int j = 1; j <= n_; ++j) {
                if (!(rest & bit(j))) continue;
                const Polynomial& e = at(i0, j);
                if (!e.is_zero()) {
                    Polynomial sub = pfaffian_mask(rest & ~bit(j));
                    if (sign > 0) {
                        value += e * sub;
                    } else {
                        value -= e * sub;
                    }
                }
                sign = -sign;
            }
        }
        return memo_.emplace(mask, std::move(value)).first->second;
    }

    std::uint32_t full_mask() const { return bit(n_ + 1) - 1; }

  private:
    static std::uint32_t bit(int i) { return std::uint32_t(1) << (i - 1); }
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }
    void check_index(int i) const {
        if (i < 1 || i > n_) throw std::out_of_range("SkewMatrix: index out of range");
    }

    int n_;
    std::vector<Polynomial> entries_;
    mutable std::map<std::uint32_t, Polynomial> memo_;
};

// The generic skew-symmetric matrix: entry (i, j) = t_{ij} for i < j.
inline SkewMatrix generic_skew(int n) {
    SkewMatrix T(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            T.set(i, j, Polynomial::variable(VariableId(i, j)));
        }
    }
    return T;
}

// The zero-block variant: as generic_skew but with the upper-left 3 x 3
// block zeroed, i.e. t_{12} = t_{13} = t_{23} = 0.
inline SkewMatrix zero_block_skew(int n) {
    if (n < 3) throw std::invalid_argument("zero_block_skew: need n >= 3");
    SkewMatrix U(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (j <= 3) continue;
            U.set(i, j, Polynomial::variable(VariableId(i, j)));
        }
    }
    return U;
}

// The Pfaffian function P on an arbitrary word.
inline Polynomial pfaffian_word(const SkewMatrix& T, const Word& w) {
    if (w.size() % 2 != 0) return Polynomial();
    int sign = sort_sign(w);
    if (sign == 0) return Polynomial();
    std::uint32_t mask = 0;
    for (int i : w) {
        if (i < 1 || i > T.size()) {
            throw std::out_of_range("pfaffian_word: index out of range");
        }
        mask |= std::uint32_t(1) << (i - 1);
    }
    Polynomial p = T.pfaffian_mask(mask);
    return sign > 0 ? p : -p;
}

// Pfaffian of the principal submatrix on the letters of I (order and
// repeats handled by the word conventions).
inline Polynomial sub_pfaffian(const SkewMatrix& T, const Word& I) {
    return pfaffian_word(T, I);
}

// Complementary Pfaffian: Pfaffian of the principal submatrix obtained by
// deleting the rows and columns listed in I.  Repeats in I give 0; the
// empty complement gives 1.
inline Polynomial comp_pfaffian(const SkewMatrix& T, const Word& I) {
    if (sort_sign(I) == 0 && !I.empty()) return Polynomial();
    std::uint32_t mask = T.full_mask();
    for (int i : I) {
        if (i < 1 || i > T.size()) {
            throw std::out_of_range("comp_pfaffian: index out of range");
        }
        mask &= ~(std::uint32_t(1) << (i - 1));
    }
    return T.pfaffian_mask(mask);
}

// Pfaffian of the full matrix.
inline Polynomial pfaffian(const SkewMatrix& T) { return comp_pfaffian(T, {}); }

// Independent oracle: P as a signed sum over perfect matchings of the
// letter set.  Exponential in |w|; intended for tests with |w| <= 8.
inline Polynomial pfaffian_matching_oracle(const SkewMatrix& T, const Word& w) {
    if (w.size() % 2 != 0) return Polynomial();
    int outer = sort_sign(w);
    if (outer == 0) return Polynomial();
    Word s = w;
    std::sort(s.begin(), s.end());

    Polynomial total;
    // Enumerate perfect matchings of s recursively: always pair the first
    // unmatched letter.  The sign of a matching is the sign of the word
    // (p1 q1 p2 q2 ...) relative to the sorted word.
    std::vector<int> pairing;  // flattened (p1, q1, p2, q2, ...)
    std::vector<bool> used(s.size(), false);
    std::function<void()> recurse = [&]() {
        std::size_t first = 0;
        while (first < s.size() && used[first]) ++first;
        if (first == s.size()) {
            int sign = word_sign(s, pairing);
            Polynomial prod(1);
            for (std::size_t k = 0; k < pairing.size(); k += 2) {
                prod *= T.at(pairing[k], pairing[k + 1]);
            }
            if (sign > 0) {
                total += prod;
            } else {
                total -= prod;
            }
            return;
        }
        used[first] = true;
        pairing.push_back(s[first]);
        for (std::size_t k = first + 1; k < s.size(); ++k) {
            if (used[k]) continue;
            used[k] = true;
            pairing.push_back(s[k]);
            recurse();
            pairing.pop_back();
            used[k] = false;
        }
        pairing.pop_back();
        used[first] = false;
    };
    recurse();
    return outer > 0 ? total : -total;
}

}  // namespace pfres
