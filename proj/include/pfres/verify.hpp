/*
 * verify.hpp
 * ----------
 * Named verification suites over parameter ranges.  Each suite runs a
 * family of symbolic or randomized checks and reports every failure with
 * enough context to reproduce it.  The CLI and the acceptance driver are
 * thin wrappers around these functions.
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pfres/brill.hpp"
#include "pfres/equivariant.hpp"
#include "pfres/identities.hpp"
#include "pfres/modp.hpp"
#include "pfres/resolution.hpp"
#include "pfres/schubert.hpp"

namespace pfres {

struct SuiteResult {
    std::string suite;
    int checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

namespace detail {

inline std::string word_str(const Word& w) {
    std::string s = "{";
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k > 0) s += ",";
        s += std::to_string(w[k]);
    }
    return s + "}";
}

// All sorted k-subsets of {1..n}.
inline std::vector<Word> subsets_of_size(int n, int k) {
    std::vector<Word> out;
    Word cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = next; i <= n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

inline const char* variant_name(Variant v) {
    return v == Variant::generic ? "generic" : "zero-block";
}

}  // namespace detail

// Exhaustive sweep of the expansion lemmas over both matrices of size n.
inline SuiteResult suite_appendix_a(const std::vector<int>& ns) {
    SuiteResult res{"appendix-a"};
    for (int n : ns) {
        for (Variant v : {Variant::generic, Variant::zero_block}) {
            SkewMatrix T = v == Variant::generic ? generic_skew(n) : zero_block_skew(n);
            auto tag = [&](const std::string& lemma, const Word& u, int l) {
                std::ostringstream os;
                os << lemma << " n=" << n << " " << detail::variant_name(v)
                   << " u=" << detail::word_str(u) << " l=" << l;
                return os.str();
            };
            for (int k = 1; k <= n; ++k) {
                for (const Word& u : detail::subsets_of_size(n, k)) {
                    for (int l = 1; l <= k; ++l) {
                        if (k % 2 == 0) {
                            res.expect(check_lemma(T, "exp", u, l), tag("exp", u, l));
                        }
                        res.expect(check_lemma(T, "pf1-2", u, l), tag("pf1-2", u, l));
                        res.expect(check_lemma(T, "pf3-1", u, l), tag("pf3-1", u, l));
                        if (l <= k - 1) {
                            res.expect(check_lemma(T, "421-even", u, l),
                                       tag("421-even", u, l));
                        }
                    }
                    res.expect(check_lemma(T, "pf1-1", u), tag("pf1-1", u, 0));
                    if (k == 6) {
                        res.expect(check_lemma(T, "531-odd", u), tag("531-odd", u, 0));
                        res.expect(check_lemma(T, "42-even", u), tag("42-even", u, 0));
                    }
                }
            }
            // The five-index lemma: u < x < y, v < w < x, all distinct.
            for (int u0 = 1; u0 <= n; ++u0) {
                for (int v0 = 1; v0 <= n; ++v0) {
                    for (int w0 = v0 + 1; w0 <= n; ++w0) {
                        for (int x0 = w0 + 1; x0 <= n; ++x0) {
                            if (u0 >= x0 || u0 == v0 || u0 == w0) continue;
                            for (int y0 = x0 + 1; y0 <= n; ++y0) {
                                if (y0 == u0) continue;
                                Word q = {u0, v0, w0, x0, y0};
                                res.expect(check_lemma(T, "51-odd", q),
                                           tag("51-odd", q, 0));
                            }
                        }
                    }
                }
            }
        }
    }
    return res;
}

// Symbolic Brill minors for all index pairs up to size 4, plus the
// closed forms for the maximal minors of d3 over all row triples.
inline SuiteResult suite_brill(const std::vector<int>& ns) {
    SuiteResult res{"brill"};
    for (int n : ns) {
        SkewMatrix T = generic_skew(n);
        for (int m = 1; m <= 4 && m <= n; ++m) {
            for (const Word& rho : detail::subsets_of_size(n, m)) {
                for (const Word& sigma : detail::subsets_of_size(n, m)) {
                    bool ok = brill_minor(T, rho, sigma) ==
                              det_oracle(skew_submatrix(T, rho, sigma));
                    std::ostringstream os;
                    os << "brill n=" << n << " rho=" << detail::word_str(rho)
                       << " sigma=" << detail::word_str(sigma);
                    res.expect(ok, os.str());
                }
            }
        }
        Word cols;
        for (int j = 4; j <= n; ++j) cols.push_back(j);
        for (const Word& r : detail::subsets_of_size(n, 3)) {
            Word rows;
            for (int i = 1; i <= n; ++i) {
                if (i != r[0] && i != r[1] && i != r[2]) rows.push_back(i);
            }
            bool ok = d3_minor_formula(T, r) ==
                      det_oracle(skew_submatrix(T, rows, cols));
            std::ostringstream os;
            os << "d3-minor n=" << n << " r=" << detail::word_str(r);
            res.expect(ok, os.str());
        }
    }
    return res;
}

// Just the closed forms for the maximal minors of d3 over all row
// triples, for sizes where the full pair sweep is too expensive.
inline SuiteResult suite_d3_minor(const std::vector<int>& ns) {
    SuiteResult res{"d3-minor"};
    for (int n : ns) {
        SkewMatrix T = generic_skew(n);
        Word cols;
        for (int j = 4; j <= n; ++j) cols.push_back(j);
        for (const Word& r : detail::subsets_of_size(n, 3)) {
            Word rows;
            for (int i = 1; i <= n; ++i) {
                if (i != r[0] && i != r[1] && i != r[2]) rows.push_back(i);
            }
            bool ok = d3_minor_formula(T, r) ==
                      det_oracle(skew_submatrix(T, rows, cols));
            std::ostringstream os;
            os << "d3-minor n=" << n << " r=" << detail::word_str(r);
            res.expect(ok, os.str());
        }
    }
    return res;
}

// Randomized Brill trials over Z/p for sizes where the symbolic sweep is
// too expensive.
inline SuiteResult suite_brill_random(const std::vector<int>& ns, std::uint64_t seed,
                                      int trials, std::int64_t p) {
    SuiteResult res{"brill-random"};
    for (int n : ns) {
        SkewMatrix T = generic_skew(n);
        ModpSkew S(T, random_point(n, seed, p), p);
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        for (int t = 0; t < trials; ++t) {
            int m = 1 + static_cast<int>(rng() % n);
            auto pick = [&]() {
                std::vector<int> all;
                for (int i = 1; i <= n; ++i) all.push_back(i);
                std::shuffle(all.begin(), all.end(), rng);
                Word w(all.begin(), all.begin() + m);
                std::sort(w.begin(), w.end());
                return w;
            };
            Word rho = pick(), sigma = pick();
            // Numeric determinant of the specialized submatrix.
            ModpMatrix M(m, m, p);
            for (int a = 1; a <= m; ++a) {
                for (int b = 1; b <= m; ++b) {
                    M.at(a, b) = rho[a - 1] == sigma[b - 1]
                                     ? 0
                                     : S.at(rho[a - 1], sigma[b - 1]);
                }
            }
            std::int64_t det = M.determinant();
            // Numeric Brill sum.
            std::int64_t total = 0;
            for (std::uint32_t sub = 0; sub < (std::uint32_t(1) << m); ++sub) {
                if (std::popcount(sub) % 2 != 0) continue;
                int k = std::popcount(sub) / 2;
                Word omega, rest;
                for (int q = 0; q < m; ++q) {
                    ((sub >> q) & 1 ? omega : rest).push_back(rho[q]);
                }
                Word rearranged = omega;
                rearranged.insert(rearranged.end(), rest.begin(), rest.end());
                int sgn = word_sign(rho, rearranged);
                if (sgn == 0) continue;
                Word rest_sigma = rest;
                rest_sigma.insert(rest_sigma.end(), sigma.begin(), sigma.end());
                std::int64_t prod =
                    (S.pfaffian_word_value(omega) * S.pfaffian_word_value(rest_sigma)) %
                    p;
                if (sgn * (k % 2 == 0 ? 1 : -1) < 0) prod = (p - prod) % p;
                total = (total + prod) % p;
            }
            if ((m / 2) % 2 != 0) total = (p - total) % p;
            std::ostringstream os;
            os << "brill-random n=" << n << " trial=" << t
               << " rho=" << detail::word_str(rho)
               << " sigma=" << detail::word_str(sigma);
            res.expect(total == det, os.str());
        }
    }
    return res;
}

inline SuiteResult suite_complex(const std::vector<int>& ns) {
    SuiteResult res{"complex"};
    for (int n : ns) {
        for (Variant v : {Variant::generic, Variant::zero_block}) {
            std::string why;
            bool ok = check_complex(build(n, v), &why);
            std::ostringstream os;
            os << "complex n=" << n << " " << detail::variant_name(v);
            if (!ok) os << ": " << why;
            res.expect(ok, os.str());
        }
    }
    return res;
}

// All minor-product identities; also asserts that the sign is constant
// across the four s-triples for each fixed r.
inline SuiteResult suite_minor_product(const std::vector<int>& ns) {
    SuiteResult res{"minor-product"};
    const std::vector<std::vector<int>> s_triples = {
        {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    for (int n : ns) {
        ResolutionComplex C = build(n, Variant::generic);
        for (const Word& r : detail::subsets_of_size(n, 3)) {
            int common = 0;
            for (const auto& s : s_triples) {
                std::ostringstream os;
                os << "minor-product n=" << n << " r=" << detail::word_str(r)
                   << " s=" << detail::word_str(s);
                int sign = 0;
                try {
                    sign = check_minor_product(C, r, s);
                } catch (const std::exception& e) {
                    res.expect(false, os.str() + ": " + e.what());
                    continue;
                }
                res.expect(sign == 1 || sign == -1, os.str());
                if (common == 0) common = sign;
                res.expect(sign == common, os.str() + " (sign varies across s)");
            }
        }
    }
    return res;
}

inline SuiteResult suite_ideal_equality(const std::vector<int>& ns) {
    SuiteResult res{"ideal-equality"};
    for (int n : ns) {
        res.expect(check_ideal_equality(n, parity_of(n)),
                   "ideal-equality n=" + std::to_string(n));
    }
    return res;
}

inline SuiteResult suite_change_of_basis(const std::vector<int>& ns) {
    SuiteResult res{"change-of-basis"};
    for (int n : ns) {
        res.expect(check_change_of_basis(n, parity_of(n)),
                   "change-of-basis n=" + std::to_string(n));
    }
    return res;
}

inline SuiteResult suite_dg_products(const std::vector<int>& ns) {
    SuiteResult res{"dg-products"};
    for (int n : ns) {
        res.expect(check_dg_products(n, parity_of(n)),
                   "dg-products n=" + std::to_string(n));
    }
    return res;
}

inline SuiteResult suite_regseq(const std::vector<int>& ns) {
    SuiteResult res{"regseq"};
    for (int n : ns) {
        res.expect(check_regseq_expansions(n, parity_of(n)),
                   "regseq n=" + std::to_string(n));
    }
    return res;
}

// Equivariant substitution + bidegree checks; the parameter m is derived
// from n (n = 2m+3 odd, n = 2m+4 even).
inline SuiteResult suite_equivariant(const std::vector<int>& ns) {
    SuiteResult res{"equivariant"};
    for (int n : ns) {
        Parity p = parity_of(n);
        int m = p == Parity::odd ? (n - 3) / 2 : (n - 4) / 2;
        if (m < 1) continue;
        std::string why;
        bool sub = substitution_check(m, p, &why);
        std::ostringstream os;
        os << "equivariant-substitution n=" << n << " m=" << m;
        if (!sub) os << ": " << why;
        res.expect(sub, os.str());
        res.expect(bidegree_check(m, p),
                   "equivariant-bidegree n=" + std::to_string(n));
        // The equivariant complex composes to zero, via the resolution
        // checker on the substituted matrices.
        EquivariantDifferentials D = equivariant_differentials(m, p);
        ResolutionComplex R = build(D.n, p, Variant::zero_block);
        R.d3 = D.d3;
        R.d2 = D.d2;
        R.d1 = D.d1;
        res.expect(check_complex(R), "equivariant-complex n=" + std::to_string(n));
    }
    return res;
}

inline SuiteResult suite_schubert(const std::vector<int>& ns) {
    SuiteResult res{"schubert"};
    for (int n : ns) {
        if (n <= 10) {
            for (ParityClass pc : {ParityClass::even_subsets, ParityClass::odd_subsets}) {
                SubsetPoset P(n, pc);
                res.expect(P.elements().size() == (std::size_t(1) << (n - 1)),
                           "poset-cardinality n=" + std::to_string(n));
            }
        }
        if (n < 5) continue;
        SkewMatrix X = generic_skew(n);
        auto w2 = schubert_ideal_generators(n, SchubertIdeal::w_double_prime, X);
        ResolutionComplex C = build(n, Variant::generic);
        bool match = w2.size() == 4;
        for (int k = 0; match && k < 4; ++k) {
            const Polynomial& want = C.d1.at(1, k + 1);
            match = (w2[k] == want) || (w2[k] == -want);
        }
        res.expect(match, "schubert-w2-vs-d1 n=" + std::to_string(n));
        auto rv = mapping_cone_format(n).aci.rank_vector();
        res.expect(rv == std::vector<int>({1, 4, n, n - 3}),
                   "schubert-aci-format n=" + std::to_string(n));
    }
    return res;
}

inline SuiteResult suite_rank(const std::vector<int>& ns, std::uint64_t seed, int votes,
                              std::int64_t prime) {
    SuiteResult res{"rank"};
    for (int n : ns) {
        ResolutionComplex C = build(n, Variant::generic);
        RankTriple r = majority_rank(C, seed, votes, prime);
        std::ostringstream os;
        os << "rank n=" << n << " got (" << r.r3 << ", " << r.r2 << ", " << r.r1 << ")";
        res.expect(r.r3 == n - 3 && r.r2 == 3 && r.r1 == 1, os.str());
        res.expect(check_column_independence(C),
                   "column-independence n=" + std::to_string(n));
    }
    return res;
}

}  // namespace pfres
