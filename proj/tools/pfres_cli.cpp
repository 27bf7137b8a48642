/*
 * pfres_cli.cpp
 * -------------
 * Command-line driver: build complexes and export them, run the
 * verification suites, specialize and rank, and emit Schubert-ideal
 * data.  Exit codes: 0 success, 1 verification failure, 2 usage error.
 *
 * Distributed under the MIT license; see LICENSE at the project root.
 */
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfres/io.hpp"
#include "pfres/verify.hpp"

namespace {

using namespace pfres;

// Parses "5", "5,6,7" and "5..8" into a sorted list.
std::vector<int> parse_range(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - pos);
        std::size_t dots = piece.find("..");
        if (dots != std::string::npos) {
            int lo = std::stoi(piece.substr(0, dots));
            int hi = std::stoi(piece.substr(dots + 2));
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        } else if (!piece.empty()) {
            out.push_back(std::stoi(piece));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

Parity parse_parity(const std::string& s, int n) {
    if (s == "odd") return Parity::odd;
    if (s == "even") return Parity::even;
    return parity_of(n);
}

int report(const SuiteResult& r) {
    std::cout << "suite " << r.suite << ": " << r.checks << " checks, "
              << r.failures.size() << " failures\n";
    for (const std::string& f : r.failures) std::cout << "  FAIL " << f << "\n";
    return r.failures.empty() ? 0 : 1;
}

int cmd_build(int n, const std::string& parity_str, const std::string& variant_str,
              const std::string& format) {
    Parity parity = parse_parity(parity_str, n);
    Variant variant =
        variant_str == "zero-block" ? Variant::zero_block : Variant::generic;
    ResolutionComplex C = build(n, parity, variant);
    if (format == "json") {
        std::cout << to_json(C).dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << to_latex(C);
    } else {
        std::cout << to_text(C);
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::vector<int>& ns,
               std::uint64_t seed) {
    int rc = 0;
    auto run = [&](const SuiteResult& r) { rc |= report(r); };
    bool all = suite == "all";
    if (all || suite == "appendix-a") {
        std::vector<int> capped;
        for (int n : ns) {
            if (n <= 7) capped.push_back(n);
        }
        run(suite_appendix_a(capped));
    }
    if (all || suite == "brill") {
        std::vector<int> symbolic, randomized;
        for (int n : ns) (n <= 7 ? symbolic : randomized).push_back(n);
        run(suite_brill(symbolic));
        if (!randomized.empty()) {
            run(suite_brill_random(randomized, seed, 1000, 32003));
        }
    }
    if (all || suite == "complex") run(suite_complex(ns));
    if (all || suite == "minor-product") run(suite_minor_product(ns));
    if (all || suite == "ideal-equality") run(suite_ideal_equality(ns));
    if (all || suite == "change-of-basis") run(suite_change_of_basis(ns));
    if (all || suite == "dg-products") run(suite_dg_products(ns));
    if (all || suite == "regseq") run(suite_regseq(ns));
    if (all || suite == "equivariant") run(suite_equivariant(ns));
    if (all || suite == "schubert") run(suite_schubert(ns));
    if (all || suite == "rank") run(suite_rank(ns, seed, 5, 32003));
    return rc;
}

int cmd_rank(int n, const std::string& parity_str, const std::string& variant_str,
             std::int64_t prime, std::uint64_t seed, int votes) {
    Parity parity = parse_parity(parity_str, n);
    Variant variant =
        variant_str == "zero-block" ? Variant::zero_block : Variant::generic;
    ResolutionComplex C = build(n, parity, variant);
    RankTriple r = majority_rank(C, seed, votes, prime);
    std::cout << "(" << r.r3 << ", " << r.r2 << ", " << r.r1 << ")\n";
    return (r.r3 == n - 3 && r.r2 == 3 && r.r1 == 1) ? 0 : 1;
}

int cmd_schubert(int n, bool poset, const std::string& format,
                 const std::string& ideal) {
    if (poset) {
        SubsetPoset P(n, ParityClass::even_subsets);
        if (format == "dot") {
            std::cout << P.to_dot();
        } else {
            for (const Subset& I : P.elements()) {
                std::cout << SubsetPoset::subset_name(I) << "\n";
            }
        }
        return 0;
    }
    SchubertIdeal which =
        (ideal == "w2" || ideal == "w-double-prime") ? SchubertIdeal::w_double_prime
                                                     : SchubertIdeal::w_prime;
    SkewMatrix X = generic_skew(n);
    auto gens = schubert_ideal_generators(n, which, X);
    nlohmann::json j;
    j["n"] = n;
    j["ideal"] = which == SchubertIdeal::w_double_prime ? "w-double-prime" : "w-prime";
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t k = 0; k < gens.size(); ++k) {
        nlohmann::json g;
        g["polynomial"] = gens[k].to_string();
        if (which == SchubertIdeal::w_prime && n % 2 == 0 && k == 0) {
            g["redundant"] = true;
        }
        list.push_back(std::move(g));
    }
    j["generators"] = std::move(list);
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pfaffian resolutions: build, verify, rank, schubert"};
    app.require_subcommand(1);

    int n = 5;
    std::string parity = "auto";
    std::string variant = "generic";
    std::string format = "text";
    std::string suite = "all";
    std::string n_range = "5..8";
    std::string ideal = "w1";
    std::uint64_t seed = 0;
    std::int64_t prime = 32003;
    int votes = 5;
    bool poset = false;

    CLI::App* b = app.add_subcommand("build", "Build a complex and print it");
    b->add_option("--n", n, "Matrix size (>= 5)")->required();
    b->add_option("--parity", parity, "odd|even (default: from n)");
    b->add_option("--variant", variant, "generic|zero-block");
    b->add_option("--format", format, "json|latex|text");

    CLI::App* v = app.add_subcommand("verify", "Run a verification suite");
    v->add_option("--suite", suite,
                  "appendix-a|brill|complex|minor-product|ideal-equality|"
                  "change-of-basis|dg-products|regseq|equivariant|schubert|rank|all");
    v->add_option("--n", n_range, "Sizes, e.g. 5,6,7 or 5..8");
    v->add_option("--seed", seed, "Seed for randomized checks");

    CLI::App* r = app.add_subcommand("rank", "Specialize and rank");
    r->add_option("--n", n, "Matrix size (>= 5)")->required();
    r->add_option("--parity", parity, "odd|even (default: from n)");
    r->add_option("--variant", variant, "generic|zero-block");
    r->add_option("--prime", prime, "Prime modulus");
    r->add_option("--seed", seed, "Base seed");
    r->add_option("--votes", votes, "Number of seeds in the majority vote");

    CLI::App* s = app.add_subcommand("schubert", "Poset and ideal generators");
    s->add_option("--n", n, "Matrix size")->required();
    s->add_flag("--poset", poset, "Emit the even-subset poset");
    s->add_option("--format", format, "dot|text|json");
    s->add_option("--ideal", ideal, "w1|w2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (b->parsed()) {
            if ((parse_parity(parity, n) == Parity::odd && (n < 5 || n % 2 == 0)) ||
                (parse_parity(parity, n) == Parity::even && (n < 6 || n % 2 != 0))) {
                std::cerr << "build: invalid (n, parity) combination\n";
                return 2;
            }
            return cmd_build(n, parity, variant, format);
        }
        if (v->parsed()) {
            const std::vector<std::string> known = {
                "appendix-a",      "brill",       "complex", "minor-product",
                "ideal-equality",  "change-of-basis", "dg-products", "regseq",
                "equivariant",     "schubert",    "rank",    "all"};
            if (std::find(known.begin(), known.end(), suite) == known.end()) {
                std::cerr << "verify: unknown suite " << suite << "\n";
                return 2;
            }
            std::vector<int> ns = parse_range(n_range);
            if (ns.empty()) {
                std::cerr << "verify: empty size range\n";
                return 2;
            }
            return cmd_verify(suite, ns, seed);
        }
        if (r->parsed()) {
            if (!is_prime(prime)) {
                std::cerr << "rank: modulus " << prime << " is not prime\n";
                return 2;
            }
            return cmd_rank(n, parity, variant, prime, seed, votes);
        }
        if (s->parsed()) {
            return cmd_schubert(n, poset, format, ideal);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
