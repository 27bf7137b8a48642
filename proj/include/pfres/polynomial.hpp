/*
 * polynomial.hpp
 * --------------
 * Sparse multivariate polynomials over arbitrary-precision integers.
 *
 * The variable set is { t_{ij} : 1 <= i < j <= n } for some ambient n;
 * a variable is identified by the ordered pair (i, j).  Monomials map
 * variables to positive exponents; polynomials map monomials to nonzero
 * integer coefficients.  Every operation returns canonical form: no zero
 * coefficients and no zero exponents are ever stored.
 *
 * The monomial order is graded lexicographic: higher total degree first,
 * ties broken lexicographically on the exponent vector with variables
 * ordered by (i, j).  to_string() lists terms in descending order, each
 * term printed as [sign]coeff*t_i_j[*t_k_l...], with unit coefficients
 * elided and exponents written as repeated factors.  The zero polynomial
 * prints as "0".
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pfres {

using Integer = boost::multiprecision::cpp_int;

// Identifies the variable t_{ij}; requires i < j.
struct VariableId {
    int i = 0;
    int j = 0;

    VariableId() = default;
    VariableId(int i_, int j_) : i(i_), j(j_) {
        if (i < 1 || j <= i) {
            throw std::invalid_argument("VariableId requires 1 <= i < j");
        }
    }

    friend bool operator==(const VariableId& a, const VariableId& b) {
        return a.i == b.i && a.j == b.j;
    }
    friend bool operator!=(const VariableId& a, const VariableId& b) {
        return !(a == b);
    }
    friend bool operator<(const VariableId& a, const VariableId& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }

    std::string name() const {
        return "t_" + std::to_string(i) + "_" + std::to_string(j);
    }
};

// A power product of variables.  The exponent map is kept sorted by
// variable and never stores a zero exponent.
class Monomial {
  public:
    using ExponentMap = std::vector<std::pair<VariableId, int>>;

    Monomial() = default;

    explicit Monomial(ExponentMap exps) : exps_(std::move(exps)) {
        std::sort(exps_.begin(), exps_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t k = 0; k < exps_.size(); ++k) {
            if (exps_[k].second <= 0) {
                throw std::invalid_argument("Monomial exponents must be positive");
            }
            if (k > 0 && !(exps_[k - 1].first < exps_[k].first)) {
                throw std::invalid_argument("Monomial has a repeated variable");
            }
        }
    }

    static Monomial variable(VariableId v) { return Monomial(ExponentMap{{v, 1}}); }

    const ExponentMap& exponents() const { return exps_; }
    bool is_constant() const { return exps_.empty(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }

    int degree_in(const std::function<bool(VariableId)>& pred) const {
        int d = 0;
        for (const auto& [v, e] : exps_) {
            if (pred(v)) d += e;
        }
        return d;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial out;
        auto a = exps_.begin();
        auto b = other.exps_.begin();
        while (a != exps_.end() || b != other.exps_.end()) {
            if (b == other.exps_.end() || (a != exps_.end() && a->first < b->first)) {
                out.exps_.push_back(*a++);
            } else if (a == exps_.end() || b->first < a->first) {
                out.exps_.push_back(*b++);
            } else {
                out.exps_.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }

    // Graded lexicographic order: compare total degree, then the exponent
    // vectors variable by variable.  A variable that is present beats one
    // that is absent at the same position of the (i, j)-sorted support.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.total_degree();
        int db = b.total_degree();
        if (da != db) return da < db;
        auto x = a.exps_.begin();
        auto y = b.exps_.begin();
        while (x != a.exps_.end() && y != b.exps_.end()) {
            if (x->first != y->first) {
                // The lexicographically earlier variable carries a positive
                // exponent in exactly one of the monomials; that monomial is
                // the larger one in lex order.
                return y->first < x->first;
            }
            if (x->second != y->second) return x->second < y->second;
            ++x;
            ++y;
        }
        return x == a.exps_.end() && y != b.exps_.end();
    }

    std::string to_string() const {
        if (exps_.empty()) return "1";
        std::string s;
        bool first = true;
        for (const auto& [v, e] : exps_) {
            for (int k = 0; k < e; ++k) {
                if (!first) s += "*";
                s += v.name();
                first = false;
            }
        }
        return s;
    }

  private:
    ExponentMap exps_;
};

// A sparse polynomial in the t_{ij} with Integer coefficients.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Integer>;

    Polynomial() = default;

    Polynomial(Integer c) {  // NOLINT: implicit by design, constants embed
        if (c != 0) terms_[Monomial()] = std::move(c);
    }
    Polynomial(int c) : Polynomial(Integer(c)) {}

    static Polynomial variable(VariableId v) {
        Polynomial p;
        p.terms_[Monomial::variable(v)] = 1;
        return p;
    }

    static Polynomial term(Integer c, Monomial m) {
        Polynomial p;
        if (c != 0) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    Polynomial& operator+=(const Polynomial& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial out;
        for (const auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                out.add_term(ma * mb, ca * cb);
            }
        }
        return out;
    }

    Polynomial& operator*=(const Polynomial& other) {
        *this = *this * other;
        return *this;
    }

    // All variables occurring with nonzero exponent, sorted by (i, j).
    std::vector<VariableId> support() const {
        std::vector<VariableId> vars;
        for (const auto& [m, c] : terms_) {
            for (const auto& [v, e] : m.exponents()) vars.push_back(v);
        }
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return vars;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    // Full evaluation at integer values; every variable in the support must
    // be assigned, otherwise the result would be a polynomial rather than a
    // number, which we treat as a caller error.
    Integer evaluate(const std::map<VariableId, Integer>& values) const {
        Integer total = 0;
        for (const auto& [m, c] : terms_) {
            Integer prod = c;
            for (const auto& [v, e] : m.exponents()) {
                auto it = values.find(v);
                if (it == values.end()) {
                    throw std::invalid_argument("evaluate: no value for " + v.name());
                }
                for (int k = 0; k < e; ++k) prod *= it->second;
            }
            total += prod;
        }
        return total;
    }

    // Evaluation in Z/p with values reduced mod p; returns a value in [0, p).
    std::int64_t evaluate_mod(const std::map<VariableId, std::int64_t>& values,
                              std::int64_t p) const {
        if (p <= 1) throw std::invalid_argument("evaluate_mod: modulus must exceed 1");
        std::int64_t total = 0;
        for (const auto& [m, c] : terms_) {
            std::int64_t prod = static_cast<std::int64_t>(c % p);
            if (prod < 0) prod += p;
            for (const auto& [v, e] : m.exponents()) {
                auto it = values.find(v);
                if (it == values.end()) {
                    throw std::invalid_argument("evaluate_mod: no value for " + v.name());
                }
                std::int64_t x = it->second % p;
                if (x < 0) x += p;
                for (int k = 0; k < e; ++k) prod = (prod * x) % p;
            }
            total = (total + prod) % p;
        }
        return total;
    }

    // Simultaneous substitution of polynomials for variables.  Every
    // variable in the support must be mapped.
    Polynomial substitute(const std::map<VariableId, Polynomial>& images) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            Polynomial prod(c);
            for (const auto& [v, e] : m.exponents()) {
                auto it = images.find(v);
                if (it == images.end()) {
                    throw std::invalid_argument("substitute: no image for " + v.name());
                }
                for (int k = 0; k < e; ++k) prod *= it->second;
            }
            out += prod;
        }
        return out;
    }

    // Bidegree with respect to a two-class partition of the variables:
    // classify(v) == true selects the first class.  Returns the common
    // (first-class degree, second-class degree) of all terms, or nullopt
    // if the polynomial is not bihomogeneous.  Zero is bihomogeneous of
    // every bidegree; we report (0, 0) for it.
    std::optional<std::pair<int, int>> bidegree(
        const std::function<bool(VariableId)>& classify) const {
        std::optional<std::pair<int, int>> result;
        for (const auto& [m, c] : terms_) {
            int d1 = m.degree_in(classify);
            int d2 = m.total_degree() - d1;
            if (!result) {
                result = {d1, d2};
            } else if (*result != std::make_pair(d1, d2)) {
                return std::nullopt;
            }
        }
        if (!result) result = {0, 0};
        return result;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        // terms_ is sorted ascending in the monomial order; print descending.
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Integer& c = it->second;
            bool negative = c < 0;
            Integer abs_c = negative ? Integer(-c) : c;
            if (s.empty()) {
                if (negative) s += "-";
            } else {
                s += negative ? " - " : " + ";
            }
            std::ostringstream os;
            if (abs_c != 1 || it->first.is_constant()) {
                os << abs_c;
                if (!it->first.is_constant()) os << "*";
            }
            if (!it->first.is_constant()) os << it->first.to_string();
            s += os.str();
        }
        return s;
    }

  private:
    void add_term(const Monomial& m, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

}  // namespace pfres
