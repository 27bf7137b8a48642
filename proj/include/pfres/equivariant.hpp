/*
 * equivariant.hpp
 * ---------------
 * The equivariant form of the resolutions: generators and differential
 * entries realized as coefficients of wedge products in the exterior
 * algebra of a free module F with basis g_1, ..., g_N, where
 *
 *   N = 2m     (odd case,  ambient size n = 2m + 3),
 *   N = 2m + 1 (even case, ambient size n = 2m + 4).
 *
 * The building blocks are the 2-form C = sum c_{ij} g_i ^ g_j and the
 * 1-forms u_1, u_2, u_3 with coordinates u_{k,i}.  Under the embedding
 * c_{ij} = t_{i+3,j+3} and u_{k,i} = t_{k,i+3} these live in the same
 * polynomial ring as the resolutions, and every differential entry of the
 * zero-block resolution is (up to a recorded sign) a wedge coefficient:
 * a top coefficient for the scalar-like entries, a hat coefficient
 * (omitting one basis vector) for the entries indexed by a column >= 4.
 *
 * C^(j) denotes the divided power, whose coefficients are sub-Pfaffians
 * of (c_{ij}); the plain j-fold wedge power differs from it by the
 * factor j!, which is measured by a test rather than assumed.
 *
 * The matrices returned by equivariant_differentials use the row and
 * column order of the resolution module, so they compare entrywise with
 * build(n, parity, zero_block); the sign tables fixed here make the
 * comparison an exact equality, which substitution_check asserts.
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfres/exterior.hpp"
#include "pfres/matrix.hpp"
#include "pfres/pfaffian.hpp"
#include "pfres/resolution.hpp"

namespace pfres {

// Rank of F and ambient matrix size for the given parameters.
inline int equivariant_rank(int m, Parity parity) {
    if (m < 1) throw std::invalid_argument("equivariant_rank: need m >= 1");
    return parity == Parity::odd ? 2 * m : 2 * m + 1;
}
inline int equivariant_ambient(int m, Parity parity) {
    return equivariant_rank(m, parity) + 3;
}

namespace detail {

// The skew matrix (c_{ij}) of size N in the embedded variables.
inline SkewMatrix c_matrix(int N) {
    SkewMatrix A(N);
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            A.set(i, j, Polynomial::variable(VariableId(i + 3, j + 3)));
        }
    }
    return A;
}

// The 1-form u_k as an exterior element of degree 1.
inline ExteriorElement u_form(int N, int k) {
    std::vector<Polynomial> coords;
    for (int i = 1; i <= N; ++i) {
        coords.push_back(Polynomial::variable(VariableId(k, i + 3)));
    }
    return ExteriorElement::vector(coords);
}

}  // namespace detail

// The divided power C^(j): sum over 2j-subsets S of the Pfaffian of the
// principal submatrix of (c_{ij}) on S, times g_S.
inline ExteriorElement build_C_power(int m, Parity parity, int j) {
    int N = equivariant_rank(m, parity);
    if (j < 0 || 2 * j > N) {
        throw std::invalid_argument("build_C_power: degree out of range");
    }
    SkewMatrix A = detail::c_matrix(N);
    ExteriorElement out(N);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << N); ++mask) {
        if (std::popcount(mask) != 2 * j) continue;
        out.add(mask, A.pfaffian_mask(mask));
    }
    return out;
}

// Plain j-fold wedge power, for comparison against the divided power.
inline ExteriorElement wedge_power(const ExteriorElement& e, int j) {
    ExteriorElement out(e.dim());
    out.add(0, Polynomial(1));
    for (int k = 0; k < j; ++k) out = wedge(out, e);
    return out;
}

// The four ideal generators, as coefficients of the top basis form, in
// the order:
//   odd:  C^(m), C^(m-1)^u1^u2, C^(m-1)^u1^u3, C^(m-1)^u2^u3
//   even: C^(m-1)^u1^u2^u3, C^(m)^u1, C^(m)^u2, C^(m)^u3
inline std::vector<Polynomial> equivariant_generators(int m, Parity parity) {
    int N = equivariant_rank(m, parity);
    auto u = [&](int k) { return detail::u_form(N, k); };
    std::vector<Polynomial> gens;
    if (parity == Parity::odd) {
        ExteriorElement Cm1 = build_C_power(m, parity, m - 1);
        gens.push_back(build_C_power(m, parity, m).top_coefficient());
        gens.push_back(wedge(wedge(Cm1, u(1)), u(2)).top_coefficient());
        gens.push_back(wedge(wedge(Cm1, u(1)), u(3)).top_coefficient());
        gens.push_back(wedge(wedge(Cm1, u(2)), u(3)).top_coefficient());
    } else {
        ExteriorElement Cm1 = build_C_power(m, parity, m - 1);
        ExteriorElement Cm = build_C_power(m, parity, m);
        gens.push_back(
            wedge(wedge(wedge(Cm1, u(1)), u(2)), u(3)).top_coefficient());
        gens.push_back(wedge(Cm, u(1)).top_coefficient());
        gens.push_back(wedge(Cm, u(2)).top_coefficient());
        gens.push_back(wedge(Cm, u(3)).top_coefficient());
    }
    return gens;
}

struct EquivariantDifferentials {
    int m = 0;
    Parity parity = Parity::odd;
    int n = 0;  // ambient size; matrices are shaped like the resolution's
    PolyMatrix d3, d2, d1;
};

namespace detail {

// Recorded sign tables: the wedge-coefficient entry times this sign
// equals the corresponding zero-block resolution entry.  Determined by
// direct comparison at m = 1, 2, 3 (the pattern is independent of m)
// and frozen here; substitution_check re-verifies them on every run.
inline int equivariant_sign_d1(Parity parity, int col) {
    if (parity == Parity::odd) return col == 2 ? -1 : 1;
    return col == 1 ? -1 : 1;
}
inline int equivariant_sign_d2(Parity parity, int row, int col) {
    auto pow_sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
    if (parity == Parity::odd) {
        if (row <= 3) return col <= 3 ? 1 : pow_sign(col - 1);
        return pow_sign(col);
    }
    switch (row) {
        case 1:
            return pow_sign(col - 1);  // columns 1..3 are zero anyway
        case 2:
            return col <= 3 ? (col == 2 ? -1 : 1) : pow_sign(col - 1);
        case 3:
            return col <= 3 ? (col == 1 ? -1 : 1) : pow_sign(col);
        default:
            return col <= 3 ? (col == 3 ? -1 : 1) : pow_sign(col - 1);
    }
}

}  // namespace detail

// The three differentials in the resolution module's row/column order.
// Odd case (n = 2m + 3):
//   d3: rows 1..3 give the u-matrix (u_{k,j}), rows >= 4 the entries of
//       C with orientation (row-3, col);
//   d2: rows 1..3 carry [C^(m)]_top on the diagonal of columns 1..3 and
//       [C^(m-1)^u_r]_{hat g_{j-3}} in columns j >= 4; row 4 carries
//       [C^(m-1)^u_a^u_b]_top ({a,b} complementary to the column) in
//       columns 1..3 and [C^(m-2)^u1^u2^u3]_{hat g_{j-3}} (zero when
//       m = 1) in columns j >= 4;
//   d1: ([C^(m-1)^u2^u3]_top, [C^(m-1)^u1^u3]_top,
//        [C^(m-1)^u1^u2]_top, [C^(m)]_top).
// Even case (n = 2m + 4):
//   d3: as in the odd case;
//   d2: row 1 is zero in columns 1..3 and [C^(m)]_{hat g_{j-3}} in
//       columns j >= 4; rows 2..4 carry top coefficients of C^(m)^u_k
//       in columns 1..3 (in the pattern of the resolution's entries) and
//       [C^(m-1)^u_a^u_b]_{hat g_{j-3}} in columns j >= 4;
//   d1: ([C^(m-1)^u1^u2^u3]_top, [C^(m)^u3]_top, [C^(m)^u2]_top,
//        [C^(m)^u1]_top).
inline EquivariantDifferentials equivariant_differentials(int m, Parity parity) {
    int N = equivariant_rank(m, parity);
    int n = N + 3;
    EquivariantDifferentials D;
    D.m = m;
    D.parity = parity;
    D.n = n;
    auto u = [&](int k) { return detail::u_form(N, k); };
    auto var = [](int i, int j) { return Polynomial::variable(VariableId(i, j)); };
    auto signed_p = [](int s, Polynomial p) { return s > 0 ? p : -p; };
    auto s1 = [&](int c) { return detail::equivariant_sign_d1(parity, c); };
    auto s2 = [&](int r, int c) { return detail::equivariant_sign_d2(parity, r, c); };

    // d3 is the same in both cases: u-matrix on top, oriented C below.
    D.d3 = PolyMatrix(n, N);
    for (int k = 1; k <= 3; ++k) {
        for (int j = 1; j <= N; ++j) D.d3.at(k, j) = var(k, j + 3);
    }
    for (int a = 1; a <= N; ++a) {
        for (int j = 1; j <= N; ++j) {
            if (a < j) {
                D.d3.at(a + 3, j) = var(a + 3, j + 3);
            } else if (a > j) {
                D.d3.at(a + 3, j) = -var(j + 3, a + 3);
            }
        }
    }

    D.d2 = PolyMatrix(4, n);
    D.d1 = PolyMatrix(1, 4);
    if (parity == Parity::odd) {
        ExteriorElement Cm = build_C_power(m, parity, m);
        ExteriorElement Cm1 = build_C_power(m, parity, m - 1);
        Polynomial x_top = Cm.top_coefficient();
        std::array<Polynomial, 4> pair_top = {
            Polynomial(),  // unused slot; index by the omitted letter
            wedge(wedge(Cm1, u(2)), u(3)).top_coefficient(),
            wedge(wedge(Cm1, u(1)), u(3)).top_coefficient(),
            wedge(wedge(Cm1, u(1)), u(2)).top_coefficient()};
        for (int r = 1; r <= 3; ++r) {
            D.d2.at(r, r) = signed_p(s2(r, r), x_top);
        }
        for (int c = 1; c <= 3; ++c) {
            D.d2.at(4, c) = signed_p(s2(4, c), pair_top[c]);
        }
        std::array<ExteriorElement, 3> v = {wedge(Cm1, u(1)), wedge(Cm1, u(2)),
                                            wedge(Cm1, u(3))};
        for (int j = 4; j <= n; ++j) {
            for (int r = 1; r <= 3; ++r) {
                D.d2.at(r, j) = signed_p(s2(r, j), v[r - 1].hat_coefficient(j - 3));
            }
        }
        if (m >= 2) {
            ExteriorElement w =
                wedge(wedge(wedge(build_C_power(m, parity, m - 2), u(1)), u(2)), u(3));
            for (int j = 4; j <= n; ++j) {
                D.d2.at(4, j) = signed_p(s2(4, j), w.hat_coefficient(j - 3));
            }
        }
        D.d1.at(1, 1) = signed_p(s1(1), pair_top[1]);
        D.d1.at(1, 2) = signed_p(s1(2), pair_top[2]);
        D.d1.at(1, 3) = signed_p(s1(3), pair_top[3]);
        D.d1.at(1, 4) = signed_p(s1(4), x_top);
    } else {
        ExteriorElement Cm = build_C_power(m, parity, m);
        ExteriorElement Cm1 = build_C_power(m, parity, m - 1);
        // Top coefficients [C^(m)^u_k]_top, indexed by k.
        std::array<Polynomial, 4> xu = {Polynomial(), wedge(Cm, u(1)).top_coefficient(),
                                        wedge(Cm, u(2)).top_coefficient(),
                                        wedge(Cm, u(3)).top_coefficient()};
        Polynomial x1 = wedge(wedge(wedge(Cm1, u(1)), u(2)), u(3)).top_coefficient();
        // Columns 1..3 of rows 2..4, mirroring the resolution's pattern
        // (zero where the resolution is zero; the nonzero entry at
        // (r, c) involves u_k with k determined by the pattern).
        D.d2.at(2, 1) = signed_p(s2(2, 1), xu[2]);
        D.d2.at(2, 2) = signed_p(s2(2, 2), xu[1]);
        D.d2.at(3, 1) = signed_p(s2(3, 1), xu[3]);
        D.d2.at(3, 3) = signed_p(s2(3, 3), xu[1]);
        D.d2.at(4, 2) = signed_p(s2(4, 2), xu[3]);
        D.d2.at(4, 3) = signed_p(s2(4, 3), xu[2]);
        // Rows 2..4 pair tables for columns >= 4: row 2 uses u1^u2,
        // row 3 uses u1^u3, row 4 uses u2^u3.
        std::array<ExteriorElement, 3> v = {wedge(wedge(Cm1, u(1)), u(2)),
                                            wedge(wedge(Cm1, u(1)), u(3)),
                                            wedge(wedge(Cm1, u(2)), u(3))};
        for (int j = 4; j <= n; ++j) {
            D.d2.at(1, j) = signed_p(s2(1, j), Cm.hat_coefficient(j - 3));
            for (int r = 2; r <= 4; ++r) {
                D.d2.at(r, j) = signed_p(s2(r, j), v[r - 2].hat_coefficient(j - 3));
            }
        }
        D.d1.at(1, 1) = signed_p(s1(1), x1);
        D.d1.at(1, 2) = signed_p(s1(2), xu[3]);
        D.d1.at(1, 3) = signed_p(s1(3), xu[2]);
        D.d1.at(1, 4) = signed_p(s1(4), xu[1]);
    }
    return D;
}

// Entrywise equality of the equivariant differentials (signs included)
// with the zero-block resolution matrices.  On failure, if `detail_out`
// is given it receives the first differing entry.
inline bool substitution_check(int m, Parity parity, std::string* detail_out = nullptr) {
    EquivariantDifferentials D = equivariant_differentials(m, parity);
    ResolutionComplex R = build(D.n, parity, Variant::zero_block);
    struct Pair {
        const char* name;
        const PolyMatrix* got;
        const PolyMatrix* want;
    };
    for (const Pair& p : {Pair{"d3", &D.d3, &R.d3}, Pair{"d2", &D.d2, &R.d2},
                          Pair{"d1", &D.d1, &R.d1}}) {
        for (int r = 1; r <= p.want->rows(); ++r) {
            for (int c = 1; c <= p.want->cols(); ++c) {
                if (p.got->at(r, c) != p.want->at(r, c)) {
                    if (detail_out != nullptr) {
                        *detail_out = std::string(p.name) + "(" + std::to_string(r) +
                                      ", " + std::to_string(c) +
                                      "): got " + p.got->at(r, c).to_string() +
                                      ", want " + p.want->at(r, c).to_string();
                    }
                    return false;
                }
            }
        }
    }
    return true;
}

struct Bidegree {
    int c = 0;  // degree in the c-variables (both indices >= 4)
    int u = 0;  // degree in the u-variables (first index <= 3)
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

// Twists (as positive bidegrees; the graded resolution uses their
// negatives) of the free modules F1 (components 1..4), F2 (components
// 1..n) and F3, read off the graded displays:
//   odd:  F1 = (m-1,2) x3, (m,0);  F2 = (2m-1,2) x3, (2m-2,3) x(n-3);
//         F3 = (2m-1,3)
//   even: F1 = (m-1,3), (m,1) x3;  F2 = (2m,2) x3, (2m-1,3) x(n-3);
//         F3 = (2m,3)
inline Bidegree twist_F1(int m, Parity parity, int comp) {
    if (parity == Parity::odd) {
        return comp <= 3 ? Bidegree{m - 1, 2} : Bidegree{m, 0};
    }
    return comp == 1 ? Bidegree{m - 1, 3} : Bidegree{m, 1};
}
inline Bidegree twist_F2(int m, Parity parity, int comp) {
    if (parity == Parity::odd) {
        return comp <= 3 ? Bidegree{2 * m - 1, 2} : Bidegree{2 * m - 2, 3};
    }
    return comp <= 3 ? Bidegree{2 * m, 2} : Bidegree{2 * m - 1, 3};
}
inline Bidegree twist_F3(int m, Parity parity) {
    return parity == Parity::odd ? Bidegree{2 * m - 1, 3} : Bidegree{2 * m, 3};
}

// Every entry of every differential is bihomogeneous of the bidegree
// dictated by the twists (zero entries are exempt), and no entry has a
// constant term, so the complex stays minimal after base change to any
// field.
inline bool bidegree_check(int m, Parity parity) {
    EquivariantDifferentials D = equivariant_differentials(m, parity);
    auto is_c_var = [](VariableId v) { return v.i >= 4; };
    auto entry_ok = [&](const Polynomial& p, Bidegree want) {
        if (p.is_zero()) return true;
        auto got = p.bidegree(is_c_var);
        if (!got || got->first != want.c || got->second != want.u) return false;
        return want.c + want.u > 0;  // no constant terms
    };
    for (int c = 1; c <= 4; ++c) {
        if (!entry_ok(D.d1.at(1, c), twist_F1(m, parity, c))) return false;
    }
    for (int r = 1; r <= 4; ++r) {
        for (int c = 1; c <= D.n; ++c) {
            Bidegree f2 = twist_F2(m, parity, c);
            Bidegree f1 = twist_F1(m, parity, r);
            if (!entry_ok(D.d2.at(r, c), Bidegree{f2.c - f1.c, f2.u - f1.u})) {
                return false;
            }
        }
    }
    Bidegree f3 = twist_F3(m, parity);
    for (int r = 1; r <= D.n; ++r) {
        Bidegree f2 = twist_F2(m, parity, r);
        for (int c = 1; c <= D.n - 3; ++c) {
            if (!entry_ok(D.d3.at(r, c), Bidegree{f3.c - f2.c, f3.u - f2.u})) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace pfres
