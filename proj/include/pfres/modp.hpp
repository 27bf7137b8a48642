/*
 * modp.hpp
 * --------
 * Arithmetic over Z/p for a word-sized prime p: matrix rank by Gaussian
 * elimination, determinants, and a numeric Pfaffian on specialized skew
 * matrices.  Used to certify rank statements about the symbolic
 * differentials after random specialization, and as the ground field for
 * randomized identity trials at sizes where fully symbolic checks are
 * too expensive.
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "pfres/matrix.hpp"
#include "pfres/pfaffian.hpp"

namespace pfres {

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t result = 1;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) result = (result * base) % p;
        base = (base * base) % p;
        exp >>= 1;
    }
    return result;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::invalid_argument("mod_inverse: zero is not invertible");
    return mod_pow(a, p - 2, p);  // p prime
}

// Dense matrix over Z/p, 0-based internally but sized like PolyMatrix.
class ModpMatrix {
  public:
    ModpMatrix(int rows, int cols, std::int64_t p)
        : rows_(rows), cols_(cols), p_(p),
          entries_(static_cast<std::size_t>(rows) * cols, 0) {
        if (p < 2) throw std::invalid_argument("ModpMatrix: modulus must exceed 1");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t modulus() const { return p_; }

    std::int64_t& at(int r, int c) { return entries_[idx(r, c)]; }
    std::int64_t at(int r, int c) const { return entries_[idx(r, c)]; }

    int rank() const {
        ModpMatrix M = *this;
        int rank = 0;
        for (int c = 1; c <= cols_ && rank < rows_; ++c) {
            int pivot = 0;
            for (int r = rank + 1; r <= rows_; ++r) {
                if (M.at(r, c) != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot == 0) continue;
            ++rank;
            for (int k = 1; k <= cols_; ++k) std::swap(M.at(rank, k), M.at(pivot, k));
            std::int64_t inv = mod_inverse(M.at(rank, c), p_);
            for (int r = rank + 1; r <= rows_; ++r) {
                std::int64_t f = (M.at(r, c) * inv) % p_;
                if (f == 0) continue;
                for (int k = c; k <= cols_; ++k) {
                    M.at(r, k) = (M.at(r, k) - f * M.at(rank, k)) % p_;
                    if (M.at(r, k) < 0) M.at(r, k) += p_;
                }
            }
        }
        return rank;
    }

    std::int64_t determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
        ModpMatrix M = *this;
        std::int64_t det = 1;
        for (int c = 1; c <= cols_; ++c) {
            int pivot = 0;
            for (int r = c; r <= rows_; ++r) {
                if (M.at(r, c) != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot == 0) return 0;
            if (pivot != c) {
                for (int k = 1; k <= cols_; ++k) std::swap(M.at(c, k), M.at(pivot, k));
                det = p_ - det;
            }
            det = (det * M.at(c, c)) % p_;
            std::int64_t inv = mod_inverse(M.at(c, c), p_);
            for (int r = c + 1; r <= rows_; ++r) {
                std::int64_t f = (M.at(r, c) * inv) % p_;
                if (f == 0) continue;
                for (int k = c; k <= cols_; ++k) {
                    M.at(r, k) = (M.at(r, k) - f * M.at(c, k)) % p_;
                    if (M.at(r, k) < 0) M.at(r, k) += p_;
                }
            }
        }
        return det % p_;
    }

  private:
    std::size_t idx(int r, int c) const {
        if (r < 1 || r > rows_ || c < 1 || c > cols_) {
            throw std::out_of_range("ModpMatrix: index out of range");
        }
        return static_cast<std::size_t>(r - 1) * cols_ + (c - 1);
    }

    int rows_, cols_;
    std::int64_t p_;
    std::vector<std::int64_t> entries_;
};

// A random assignment of values in [0, p) to the variables t_{ij} for
// 1 <= i < j <= n, driven by a seeded engine so that runs are
// reproducible.  Variables are visited in (i, j) order.
inline std::map<VariableId, std::int64_t> random_point(int n, std::uint64_t seed,
                                                       std::int64_t p) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    std::map<VariableId, std::int64_t> values;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            values[VariableId(i, j)] = dist(rng);
        }
    }
    return values;
}

// Specialize a polynomial matrix at a point mod p.
inline ModpMatrix specialize(const PolyMatrix& M,
                             const std::map<VariableId, std::int64_t>& values,
                             std::int64_t p) {
    ModpMatrix out(M.rows(), M.cols(), p);
    for (int r = 1; r <= M.rows(); ++r) {
        for (int c = 1; c <= M.cols(); ++c) {
            out.at(r, c) = M.at(r, c).evaluate_mod(values, p);
        }
    }
    return out;
}

// Numeric skew matrix mod p with a memoized Pfaffian on index subsets,
// mirroring the symbolic expansion in pfaffian.hpp.
class ModpSkew {
  public:
    ModpSkew(const SkewMatrix& T, const std::map<VariableId, std::int64_t>& values,
             std::int64_t p)
        : n_(T.size()), p_(p),
          entries_(static_cast<std::size_t>(n_) * n_, 0) {
        for (int i = 1; i <= n_; ++i) {
            for (int j = 1; j <= n_; ++j) {
                entries_[idx(i, j)] = T.at(i, j).evaluate_mod(values, p);
            }
        }
        memo_.assign(std::size_t(1) << n_, -1);
    }

    int size() const { return n_; }
    std::int64_t at(int i, int j) const { return entries_[idx(i, j)]; }

    std::int64_t pfaffian_mask(std::uint32_t mask) const {
        std::int64_t& slot = memo_[mask];
        if (slot >= 0) return slot;
        int bits = 0;
        for (std::uint32_t m = mask; m != 0; m &= m - 1) ++bits;
        std::int64_t value = 0;
        if (bits == 0) {
            value = 1 % p_;
        } else if (bits % 2 == 0) {
            int i0 = 0;
            for (int i = 1; i <= n_; ++i) {
                if (mask & (std::uint32_t(1) << (i - 1))) {
                    i0 = i;
                    break;
                }
            }
            std::uint32_t rest = mask & ~(std::uint32_t(1) << (i0 - 1));
            int sign = 1;
            for (int j = 1; j <= n_; ++j) {
                std::uint32_t b = std::uint32_t(1) << (j - 1);
                if (!(rest & b)) continue;
                std::int64_t e = at(i0, j);
                if (e != 0) {
                    std::int64_t sub = pfaffian_mask(rest & ~b);
                    std::int64_t term = (e * sub) % p_;
                    value = (value + (sign > 0 ? term : p_ - term)) % p_;
                }
                sign = -sign;
            }
        }
        slot = value;
        return value;
    }

    std::int64_t pfaffian_word_value(const Word& w) const {
        if (w.size() % 2 != 0) return 0;
        int sign = sort_sign(w);
        if (sign == 0) return 0;
        std::uint32_t mask = 0;
        for (int i : w) mask |= std::uint32_t(1) << (i - 1);
        std::int64_t v = pfaffian_mask(mask);
        return sign > 0 ? v : (p_ - v) % p_;
    }

  private:
    std::size_t idx(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) {
            throw std::out_of_range("ModpSkew: index out of range");
        }
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    int n_;
    std::int64_t p_;
    std::vector<std::int64_t> entries_;
    mutable std::vector<std::int64_t> memo_;
};

}  // namespace pfres
