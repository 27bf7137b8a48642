/*
 * matrix.hpp
 * ----------
 * Dense matrices of polynomials and a division-free determinant.
 *
 * The determinant is computed by Laplace expansion along the first
 * remaining row, memoized on the set of remaining columns; this keeps
 * the cost at O(2^m * m) polynomial multiplications for an m x m matrix
 * and avoids any division, so it is exact over the integers.
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

class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) {
            throw std::invalid_argument("PolyMatrix: negative dimension");
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // 1-based access.
    Polynomial& at(int r, int c) { return entries_[idx(r, c)]; }
    const Polynomial& at(int r, int c) const { return entries_[idx(r, c)]; }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) {
        return !(a == b);
    }

    bool is_zero() const {
        for (const auto& e : entries_) {
            if (!e.is_zero()) return false;
        }
        return true;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("PolyMatrix: dimension mismatch in product");
        }
        PolyMatrix out(a.rows_, b.cols_);
        for (int r = 1; r <= a.rows_; ++r) {
            for (int c = 1; c <= b.cols_; ++c) {
                Polynomial sum;
                for (int k = 1; k <= a.cols_; ++k) {
                    sum += a.at(r, k) * b.at(k, c);
                }
                out.at(r, c) = std::move(sum);
            }
        }
        return out;
    }

    // Submatrix on the given 1-based row and column index lists, in order.
    PolyMatrix submatrix(const std::vector<int>& row_idx,
                         const std::vector<int>& col_idx) const {
        PolyMatrix out(static_cast<int>(row_idx.size()),
                       static_cast<int>(col_idx.size()));
        for (std::size_t r = 0; r < row_idx.size(); ++r) {
            for (std::size_t c = 0; c < col_idx.size(); ++c) {
                out.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1) =
                    at(row_idx[r], col_idx[c]);
            }
        }
        return out;
    }

    // Submatrix with the listed rows/columns removed.
    PolyMatrix delete_rows_cols(const std::vector<int>& del_rows,
                                const std::vector<int>& del_cols) const {
        std::vector<int> keep_r, keep_c;
        for (int r = 1; r <= rows_; ++r) {
            if (std::find(del_rows.begin(), del_rows.end(), r) == del_rows.end()) {
                keep_r.push_back(r);
            }
        }
        for (int c = 1; c <= cols_; ++c) {
            if (std::find(del_cols.begin(), del_cols.end(), c) == del_cols.end()) {
                keep_c.push_back(c);
            }
        }
        return submatrix(keep_r, keep_c);
    }

  private:
    std::size_t idx(int r, int c) const {
        if (r < 1 || r > rows_ || c < 1 || c > cols_) {
            throw std::out_of_range("PolyMatrix: index out of range");
        }
        return static_cast<std::size_t>(r - 1) * cols_ + (c - 1);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Polynomial> entries_;
};

// Exact determinant by memoized Laplace expansion.
inline Polynomial det_oracle(const PolyMatrix& M) {
    if (M.rows() != M.cols()) {
        throw std::invalid_argument("det_oracle: matrix is not square");
    }
    int m = M.rows();
    if (m == 0) return Polynomial(1);
    if (m > 20) throw std::invalid_argument("det_oracle: size limit exceeded");

    // det of the block on rows (m - popcount(mask) + 1 .. m implied by the
    // recursion depth) and the columns in `mask`; the row is always the
    // topmost not yet consumed, so depth determines it.
    std::map<std::uint32_t, Polynomial> memo;
    std::function<const Polynomial&(std::uint32_t, int)> rec =
        [&](std::uint32_t mask, int row) -> const Polynomial& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Polynomial value;
        if (mask == 0) {
            value = Polynomial(1);
        } else {
            int sign = 1;
            for (int c = 1; c <= m; ++c) {
                std::uint32_t b = std::uint32_t(1) << (c - 1);
                if (!(mask & b)) continue;
                const Polynomial& e = M.at(row, c);
                if (!e.is_zero()) {
                    Polynomial sub = rec(mask & ~b, row + 1);
                    if (sign > 0) {
                        value += e * sub;
                    } else {
                        value -= e * sub;
                    }
                }
                sign = -sign;
            }
        }
        return memo.emplace(mask, std::move(value)).first->second;
    };
    std::uint32_t full = (std::uint32_t(1) << m) - 1;
    return rec(full, 1);
}

}  // namespace pfres
