/*
 * io.hpp
 * ------
 * Serialization of complexes and equivariant data: JSON (canonical
 * polynomial strings) and LaTeX matrix display.
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#pragma once

#include <string>

#include <json.hpp>

#include "pfres/equivariant.hpp"
#include "pfres/matrix.hpp"
#include "pfres/resolution.hpp"

namespace pfres {

namespace detail {

inline nlohmann::json matrix_to_json(const PolyMatrix& M) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 1; r <= M.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 1; c <= M.cols(); ++c) row.push_back(M.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

// A polynomial in LaTeX form: t_1_2 becomes t_{12}.
inline std::string latex_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Integer& c = it->second;
        bool negative = c < 0;
        Integer abs_c = negative ? Integer(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::ostringstream os;
        if (abs_c != 1 || it->first.is_constant()) os << abs_c;
        for (const auto& [v, e] : it->first.exponents()) {
            std::string var = "t_{" + std::to_string(v.i) + std::to_string(v.j) + "}";
            if (e == 1) {
                os << var;
            } else {
                os << var << "^{" << e << "}";
            }
        }
        out += os.str();
    }
    return out;
}

inline std::string latex_matrix(const PolyMatrix& M) {
    std::string out = "\\begin{pmatrix}\n";
    for (int r = 1; r <= M.rows(); ++r) {
        for (int c = 1; c <= M.cols(); ++c) {
            out += latex_polynomial(M.at(r, c));
            out += (c < M.cols()) ? " & " : "";
        }
        out += (r < M.rows()) ? " \\\\\n" : "\n";
    }
    out += "\\end{pmatrix}\n";
    return out;
}

}  // namespace detail

inline nlohmann::json to_json(const ResolutionComplex& C) {
    nlohmann::json j;
    j["n"] = C.n;
    j["parity"] = C.parity == Parity::odd ? "odd" : "even";
    j["variant"] = C.variant == Variant::generic ? "generic" : "zero-block";
    j["d3"] = detail::matrix_to_json(C.d3);
    j["d2"] = detail::matrix_to_json(C.d2);
    j["d1"] = detail::matrix_to_json(C.d1);
    return j;
}

inline nlohmann::json to_json(const EquivariantDifferentials& D) {
    nlohmann::json j;
    j["n"] = D.n;
    j["parity"] = D.parity == Parity::odd ? "odd" : "even";
    j["m"] = D.m;
    j["d3"] = detail::matrix_to_json(D.d3);
    j["d2"] = detail::matrix_to_json(D.d2);
    j["d1"] = detail::matrix_to_json(D.d1);
    nlohmann::json grading;
    auto pair_json = [](Bidegree b) {
        return nlohmann::json::array({-b.c, -b.u});  // twists are negative
    };
    nlohmann::json f1 = nlohmann::json::array();
    for (int c = 1; c <= 4; ++c) f1.push_back(pair_json(twist_F1(D.m, D.parity, c)));
    nlohmann::json f2 = nlohmann::json::array();
    for (int c = 1; c <= D.n; ++c) f2.push_back(pair_json(twist_F2(D.m, D.parity, c)));
    grading["F0"] = nlohmann::json::array({nlohmann::json::array({0, 0})});
    grading["F1"] = std::move(f1);
    grading["F2"] = std::move(f2);
    grading["F3"] = nlohmann::json::array({pair_json(twist_F3(D.m, D.parity))});
    j["grading"] = std::move(grading);
    return j;
}

inline std::string to_latex(const ResolutionComplex& C) {
    return "% d1\n" + detail::latex_matrix(C.d1) + "% d2\n" +
           detail::latex_matrix(C.d2) + "% d3\n" + detail::latex_matrix(C.d3);
}

inline std::string to_text(const ResolutionComplex& C) {
    std::ostringstream os;
    auto dump = [&](const char* name, const PolyMatrix& M) {
        os << name << " (" << M.rows() << " x " << M.cols() << "):\n";
        for (int r = 1; r <= M.rows(); ++r) {
            for (int c = 1; c <= M.cols(); ++c) {
                os << "  [" << r << "," << c << "] " << M.at(r, c).to_string() << "\n";
            }
        }
    };
    dump("d1", C.d1);
    dump("d2", C.d2);
    dump("d3", C.d3);
    return os.str();
}

}  // namespace pfres
