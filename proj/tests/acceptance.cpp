/*
 * acceptance.cpp
 * --------------
 * The acceptance gate: ten criteria, one pass/fail line each.  Every
 * criterion has a wall-clock budget; exceeding it is a failure.  Exit
 * code 0 iff all criteria pass.
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pfres/verify.hpp"

using namespace pfres;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ");
        detail += "over budget of " + std::to_string(budget_seconds) + "s";
    }
    if (!ok) ++failures;
    std::printf("%s  criterion %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), elapsed, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
}

bool from_suite(const SuiteResult& r, std::string& detail) {
    if (!r.passed()) detail = r.failures.front();
    return r.passed();
}

}  // namespace

int main() {
    criterion(1, "complex condition, n in {5,6,7,8,9}, both variants", 10.0,
              [](std::string& d) {
                  return from_suite(suite_complex({5, 6, 7, 8, 9}), d);
              });

    criterion(2, "expansion lemmas, exhaustive, n <= 7, both matrices", 60.0,
              [](std::string& d) {
                  return from_suite(suite_appendix_a({5, 6, 7}), d);
              });

    criterion(3, "determinant formula, symbolic n <= 7 and 1000 trials n in {8,9}",
              120.0, [](std::string& d) {
                  SuiteResult sym = suite_brill({5, 6, 7});
                  if (!sym.passed()) return from_suite(sym, d);
                  return from_suite(suite_brill_random({8, 9}, 0, 1000, 32003), d);
              });

    criterion(4, "closed-form d3 minors, all triples, n in {5,6,7,8}", 60.0,
              [](std::string& d) {
                  return from_suite(suite_d3_minor({5, 6, 7, 8}), d);
              });

    criterion(5, "minor products, all (r, s), n in {5,6,7,8}", 600.0,
              [](std::string& d) {
                  return from_suite(suite_minor_product({5, 6, 7, 8}), d);
              });

    criterion(6, "ideal equality and change of basis, n in {5,6,7,8}", 30.0,
              [](std::string& d) {
                  SuiteResult a = suite_ideal_equality({5, 6, 7, 8});
                  if (!a.passed()) return from_suite(a, d);
                  return from_suite(suite_change_of_basis({5, 6, 7, 8}), d);
              });

    criterion(7, "DG products, n in {5,6,7,8}", 30.0, [](std::string& d) {
        return from_suite(suite_dg_products({5, 6, 7, 8}), d);
    });

    criterion(8, "specialized ranks (n-3, 3, 1), n in {5..10}", 10.0,
              [](std::string& d) {
                  return from_suite(suite_rank({5, 6, 7, 8, 9, 10}, 0, 5, 32003), d);
              });

    criterion(9, "equivariant substitution and bidegrees, m in {1,2,3}", 60.0,
              [](std::string& d) {
                  for (Parity p : {Parity::odd, Parity::even}) {
                      for (int m : {1, 2, 3}) {
                          if (!substitution_check(m, p, &d)) return false;
                          if (!bidegree_check(m, p)) {
                              d = "bidegree m=" + std::to_string(m);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(10, "Schubert posets, ideals, and formats", 10.0, [](std::string& d) {
        SuiteResult r = suite_schubert({4, 5, 6, 7, 8, 9, 10});
        if (!r.passed()) return from_suite(r, d);
        // The n = 4 diagram, exactly.
        SubsetPoset P(4, ParityClass::even_subsets);
        std::set<std::string> got;
        for (const auto& c : P.covers()) {
            got.insert(SubsetPoset::subset_name(P.elements()[c.from]) + ">" +
                       SubsetPoset::subset_name(P.elements()[c.to]) + ":s" +
                       std::to_string(c.label));
        }
        std::set<std::string> want = {
            "{}>{3,4}:s4",    "{2,4}>{3,4}:s2", "{1,4}>{2,4}:s1",
            "{2,3}>{2,4}:s3", "{1,3}>{1,4}:s3", "{1,3}>{2,3}:s1",
            "{1,2}>{1,3}:s2", "{1,2}>{1,2,3,4}:s4"};
        if (got != want) {
            d = "n=4 diagram mismatch";
            return false;
        }
        return true;
    });

    std::printf("%s: %d of 10 criteria passed\n", failures == 0 ? "PASS" : "FAIL",
                10 - failures);
    return failures == 0 ? 0 : 1;
}
