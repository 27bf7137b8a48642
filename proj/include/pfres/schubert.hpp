/*
 * schubert.hpp
 * ------------
 * Combinatorics of the two codimension-3 Schubert ideals: the minuscule
 * poset of fixed-cardinality-parity subsets of {1..n}, the Weyl-group
 * action on it, the dictionary from spinor coordinates to Pfaffians, the
 * generator lists of the two ideals, and the graded formats obtained
 * from the mapping cone.
 *
 * Subsets are kept sorted ascending.  The poset order is the reflexive-
 * transitive closure of the generating inequalities
 *
 *   I <= (I \ {i}) u {i+1}   (raise one element; labeled s_i), and
 *   I <= I u {n-1, n}        (when disjoint; labeled s_n),
 *
 * materialized over the full element set.
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfres/pfaffian.hpp"

namespace pfres {

using Subset = std::vector<int>;  // sorted ascending

// The action of the Weyl-group generator s_i on a subset of {1..n}:
// s_i for i <= n-1 swaps the letters i and i+1; s_n adds {n-1, n} when
// neither is present and removes both when both are, fixing the subset
// otherwise.
inline Subset weyl_action(int i, const Subset& I, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("weyl_action: bad index");
    std::set<int> s(I.begin(), I.end());
    if (i <= n - 1) {
        bool has_i = s.count(i) > 0;
        bool has_j = s.count(i + 1) > 0;
        if (has_i != has_j) {
            if (has_i) {
                s.erase(i);
                s.insert(i + 1);
            } else {
                s.erase(i + 1);
                s.insert(i);
            }
        }
    } else {
        bool a = s.count(n - 1) > 0;
        bool b = s.count(n) > 0;
        if (a && b) {
            s.erase(n - 1);
            s.erase(n);
        } else if (!a && !b) {
            s.insert(n - 1);
            s.insert(n);
        }
    }
    return Subset(s.begin(), s.end());
}

enum class ParityClass { even_subsets, odd_subsets };

// The poset of all subsets of {1..n} whose cardinality has the given
// parity, with the order generated as described above.
class SubsetPoset {
  public:
    struct Cover {
        int from = 0;   // element indices into elements()
        int to = 0;
        int label = 0;  // the reflection index s_label realizing the step
    };

    SubsetPoset(int n, ParityClass parity_class) : n_(n), class_(parity_class) {
        if (n < 2 || n > 20) throw std::invalid_argument("SubsetPoset: bad n");
        int want = parity_class == ParityClass::even_subsets ? 0 : 1;
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
            if (std::popcount(mask) % 2 != want) continue;
            Subset I;
            for (int i = 1; i <= n; ++i) {
                if (mask & (std::uint32_t(1) << (i - 1))) I.push_back(i);
            }
            index_[I] = static_cast<int>(elements_.size());
            elements_.push_back(std::move(I));
        }
        build_order();
    }

    int n() const { return n_; }
    ParityClass parity_class() const { return class_; }
    const std::vector<Subset>& elements() const { return elements_; }

    int index_of(const Subset& I) const {
        auto it = index_.find(I);
        if (it == index_.end()) {
            throw std::invalid_argument("SubsetPoset: subset not in poset");
        }
        return it->second;
    }

    bool leq(const Subset& I, const Subset& J) const {
        return closure_[index_of(I)][index_of(J)];
    }

    // The covering relations of the order, each tagged with a generator
    // label realizing the step.
    const std::vector<Cover>& covers() const { return covers_; }

    // Hasse diagram in DOT format, edges labeled s_i, element order and
    // edge order canonical (by element index).
    std::string to_dot() const {
        std::ostringstream os;
        os << "digraph poset {\n";
        os << "  rankdir=BT;\n";
        for (std::size_t k = 0; k < elements_.size(); ++k) {
            os << "  e" << k << " [label=\"" << subset_name(elements_[k]) << "\"];\n";
        }
        for (const Cover& c : covers_) {
            os << "  e" << c.from << " -> e" << c.to << " [label=\"s" << c.label
               << "\"];\n";
        }
        os << "}\n";
        return os.str();
    }

    static std::string subset_name(const Subset& I) {
        if (I.empty()) return "{}";
        std::string s = "{";
        for (std::size_t k = 0; k < I.size(); ++k) {
            if (k > 0) s += ",";
            s += std::to_string(I[k]);
        }
        return s + "}";
    }

  private:
    void build_order() {
        int N = static_cast<int>(elements_.size());
        // Generating relations, with labels.
        struct Edge {
            int to;
            int label;
        };
        std::vector<std::vector<Edge>> gen(N);
        for (int k = 0; k < N; ++k) {
            const Subset& I = elements_[k];
            std::set<int> s(I.begin(), I.end());
            for (int i = 1; i <= n_ - 1; ++i) {
                if (s.count(i) && !s.count(i + 1)) {
                    Subset J = I;
                    *std::find(J.begin(), J.end(), i) = i + 1;
                    std::sort(J.begin(), J.end());
                    gen[k].push_back({index_of(J), i});
                }
            }
            if (!s.count(n_ - 1) && !s.count(n_)) {
                Subset J = I;
                J.push_back(n_ - 1);
                J.push_back(n_);
                std::sort(J.begin(), J.end());
                gen[k].push_back({index_of(J), n_});
            }
        }
        // Reflexive-transitive closure.
        closure_.assign(N, std::vector<bool>(N, false));
        for (int k = 0; k < N; ++k) {
            // Depth-first reachability from k.
            std::vector<int> stack = {k};
            closure_[k][k] = true;
            while (!stack.empty()) {
                int a = stack.back();
                stack.pop_back();
                for (const Edge& e : gen[a]) {
                    if (!closure_[k][e.to]) {
                        closure_[k][e.to] = true;
                        stack.push_back(e.to);
                    }
                }
            }
        }
        // Covers: generating edges that are not shortcut by a longer chain.
        for (int k = 0; k < N; ++k) {
            for (const Edge& e : gen[k]) {
                bool shortcut = false;
                for (int mid = 0; mid < N && !shortcut; ++mid) {
                    if (mid == k || mid == e.to) continue;
                    if (closure_[k][mid] && closure_[mid][e.to]) shortcut = true;
                }
                if (!shortcut) covers_.push_back({k, e.to, e.label});
            }
        }
        std::sort(covers_.begin(), covers_.end(), [](const Cover& a, const Cover& b) {
            return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
        });
    }

    int n_;
    ParityClass class_;
    std::vector<Subset> elements_;
    std::map<Subset, int> index_;
    std::vector<std::vector<bool>> closure_;
    std::vector<Cover> covers_;
};

inline bool poset_leq(const SubsetPoset& P, const Subset& I, const Subset& J) {
    return P.leq(I, J);
}

// The Pfaffian restriction of the spinor coordinate attached to I:
// delete rows and columns n+1-i for i in I.
inline Polynomial spinor_to_pfaffian(const Subset& I, const SkewMatrix& X) {
    Word deleted;
    for (int i : I) deleted.push_back(X.size() + 1 - i);
    return comp_pfaffian(X, deleted);
}

enum class SchubertIdeal { w_prime, w_double_prime };

namespace detail {

// The subsets indexing the q-generators, produced by applying the
// appropriate Weyl words to the base element (the empty set when n is
// even, {n} when n is odd).
inline std::vector<Subset> schubert_subsets(int n, SchubertIdeal which) {
    bool odd = n % 2 != 0;
    Subset cur = odd ? Subset{n} : Subset{};
    std::vector<Subset> out = {cur};
    std::vector<int> word;
    if (which == SchubertIdeal::w_double_prime) {
        word = odd ? std::vector<int>{n - 1, n - 2, n}
                   : std::vector<int>{n, n - 2, n - 1};
    } else if (odd) {
        for (int i = n - 1; i >= 1; --i) word.push_back(i);
    } else {
        word.push_back(n);
        for (int i = n - 2; i >= 1; --i) word.push_back(i);
    }
    for (int i : word) {
        cur = weyl_action(i, cur, n);
        out.push_back(cur);
    }
    return out;
}

}  // namespace detail

// Generator lists of the two ideals, as Pfaffian restrictions.  The
// w' ideal has n generators (for even n the first, Pf(X), is redundant
// but retained as listed); the w'' ideal has 4.
inline std::vector<Polynomial> schubert_ideal_generators(int n, SchubertIdeal which,
                                                         const SkewMatrix& X) {
    if (n < 4 || X.size() != n) {
        throw std::invalid_argument("schubert_ideal_generators: bad parameters");
    }
    std::vector<Polynomial> gens;
    for (const Subset& I : detail::schubert_subsets(n, which)) {
        gens.push_back(spinor_to_pfaffian(I, X));
    }
    return gens;
}

struct GradedFormat {
    // Per homological degree 0..3, the (rank, internal degree) pairs.
    std::vector<std::vector<std::pair<int, int>>> summands;

    std::vector<int> rank_vector() const {
        std::vector<int> out;
        for (const auto& deg : summands) {
            int total = 0;
            for (const auto& [rank, d] : deg) total += rank;
            out.push_back(total);
        }
        return out;
    }
};

struct MappingConeFormats {
    GradedFormat gorenstein;
    GradedFormat aci;
};

// The graded formats of the resolutions of the two ideals, read off the
// mapping cone.  With n = 2m+2 (even) or n = 2m+3 (odd):
//   even Gorenstein: 0 -> R(-2m-1) -> R^{2m+1}(-m-1) -> R^{2m+1}(-m) -> R
//   even ACI:  0 -> R^{2m-1}(-2m-1) -> R^{2m+2}(-2m) -> R(-m-1)+R^3(-m) -> R
//   odd Gorenstein:  0 -> R(-2m-3) -> R^{2m+3}(-m-2) -> R^{2m+3}(-m-1) -> R
//   odd ACI: 0 -> R^{2m}(-2m-2) -> R^{2m+3}(-2m-1) -> R(-m)+R^3(-m-1) -> R
inline MappingConeFormats mapping_cone_format(int n) {
    if (n < 5) throw std::invalid_argument("mapping_cone_format: need n >= 5");
    MappingConeFormats out;
    if (n % 2 == 0) {
        int m = (n - 2) / 2;
        out.gorenstein.summands = {{{1, 0}},
                                   {{2 * m + 1, -m}},
                                   {{2 * m + 1, -m - 1}},
                                   {{1, -2 * m - 1}}};
        out.aci.summands = {{{1, 0}},
                            {{1, -m - 1}, {3, -m}},
                            {{2 * m + 2, -2 * m}},
                            {{2 * m - 1, -2 * m - 1}}};
    } else {
        int m = (n - 3) / 2;
        out.gorenstein.summands = {{{1, 0}},
                                   {{2 * m + 3, -m - 1}},
                                   {{2 * m + 3, -m - 2}},
                                   {{1, -2 * m - 3}}};
        out.aci.summands = {{{1, 0}},
                            {{1, -m}, {3, -m - 1}},
                            {{2 * m + 3, -2 * m - 1}},
                            {{2 * m, -2 * m - 2}}};
    }
    return out;
}

}  // namespace pfres
