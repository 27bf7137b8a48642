/*
 * exterior.hpp
 * ------------
 * Elements of the exterior algebra of a free module with a fixed basis
 * g_1, ..., g_N and polynomial coefficients.  An element is stored as a
 * map from basis subsets (bitmasks) to coefficients; the wedge product
 * merges subsets with the usual shuffle sign.
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "pfres/polynomial.hpp"

namespace pfres {

// Sign of the shuffle merging the sorted index sets a and b (disjoint
// bitmasks): (-1)^{number of pairs (i, j), i in a, j in b, j < i}.
inline int shuffle_sign(std::uint32_t a, std::uint32_t b) {
    int inversions = 0;
    for (std::uint32_t m = b; m != 0; m &= m - 1) {
        std::uint32_t j = m & ~(m - 1);  // lowest set bit of the remainder
        // Indices of a strictly above j.
        inversions += std::popcount(a & ~(j | (j - 1)));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

class ExteriorElement {
  public:
    explicit ExteriorElement(int dim) : dim_(dim) {
        if (dim < 0 || dim > 31) {
            throw std::invalid_argument("ExteriorElement: dimension out of range");
        }
    }

    int dim() const { return dim_; }
    const std::map<std::uint32_t, Polynomial>& components() const { return comps_; }

    // Basis vector g_i (1-based).
    static ExteriorElement basis(int dim, int i) {
        ExteriorElement e(dim);
        e.add(std::uint32_t(1) << (i - 1), Polynomial(1));
        return e;
    }

    // Degree-1 element with the given coordinates (size dim).
    static ExteriorElement vector(const std::vector<Polynomial>& coords) {
        ExteriorElement e(static_cast<int>(coords.size()));
        for (std::size_t i = 0; i < coords.size(); ++i) {
            e.add(std::uint32_t(1) << i, coords[i]);
        }
        return e;
    }

    void add(std::uint32_t mask, const Polynomial& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = comps_.emplace(mask, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    // Coefficient of the basis monomial g_S for the subset S.
    const Polynomial& coefficient(std::uint32_t mask) const {
        static const Polynomial kZero;
        auto it = comps_.find(mask);
        return it == comps_.end() ? kZero : it->second;
    }

    // Coefficient of the top basis monomial g_1 ^ ... ^ g_N.
    const Polynomial& top_coefficient() const {
        return coefficient((std::uint32_t(1) << dim_) - 1);
    }

    // Coefficient of the basis monomial omitting exactly g_i.
    const Polynomial& hat_coefficient(int i) const {
        std::uint32_t full = (std::uint32_t(1) << dim_) - 1;
        return coefficient(full & ~(std::uint32_t(1) << (i - 1)));
    }

    friend ExteriorElement operator+(const ExteriorElement& a, const ExteriorElement& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("ExteriorElement: dim mismatch");
        ExteriorElement out = a;
        for (const auto& [m, p] : b.comps_) out.add(m, p);
        return out;
    }

    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
        return a.dim_ == b.dim_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const ExteriorElement& a, const ExteriorElement& b) {
        return !(a == b);
    }

  private:
    int dim_;
    std::map<std::uint32_t, Polynomial> comps_;
};

inline ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("wedge: dimension mismatch");
    }
    ExteriorElement out(a.dim());
    for (const auto& [ma, pa] : a.components()) {
        for (const auto& [mb, pb] : b.components()) {
            if (ma & mb) continue;
            int sgn = shuffle_sign(ma, mb);
            Polynomial prod = pa * pb;
            out.add(ma | mb, sgn > 0 ? prod : -prod);
        }
    }
    return out;
}

}  // namespace pfres
