// qmac command-line interface.
//
// Subcommands:
//   poly              one-row Macdonald polynomial (explicit formula and/or
//                     triangular eigen-solver), JSON or pretty term list
//   eigencheck        exact verification that E P = c P
//   contour           full-cycle contour integral vs residue sum vs
//                     normalization * polynomial, at seeded random y
//   verify-identities seeded numeric/exact checks of the supporting
//                     identities
//
// Exit codes: 0 success, 2 usage error, 3 mathematical mismatch,
// 4 quadrature non-convergence.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "qmac/qmac.hpp"

namespace {

using qmac::json;

int emit_poly(int lambda, int n, int k, const std::string& method, const std::string& format) {
    std::optional<qmac::laurent_f> poly;
    if (method == "corollary" || method == "both")
        poly = qmac::one_row_polynomial(lambda, n, k);
    if (method == "eigensolve" || method == "both") {
        auto solved = qmac::macdonald_polynomial(qmac::partition{lambda}, n, k);
        if (poly && !(*poly == solved)) {
            std::cerr << "mismatch: explicit formula and eigen-solver disagree for lambda="
                      << lambda << " n=" << n << " k=" << k << "\n";
            return 3;
        }
        if (!poly) poly = std::move(solved);
    }
    if (format == "pretty") {
        std::cout << "P_(" << lambda << ",0,...) with n=" << n << ", k=" << k
                  << "; coefficients in v = q^(1/2)\n";
        std::cout << qmac::to_pretty(*poly);
        return 0;
    }
    json out;
    out["command"] = "poly";
    out["lambda"] = lambda;
    out["n"] = n;
    out["k"] = k;
    out["method"] = method;
    out["variable"] = "v = q^(1/2)";
    out["terms"] = qmac::to_json(*poly);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_eigencheck(int lambda, int n, int k, bool perturb) {
    auto p = qmac::one_row_polynomial(lambda, n, k);
    if (perturb)
        p += qmac::monomial_symmetric<qmac::vfrac>(qmac::partition{lambda + 1}, n);
    const auto lhs = qmac::macdonald_operator(p, k);
    const auto rhs = p.scaled(qmac::vfrac(
        qmac::macdonald_eigenvalue(qmac::partition{lambda}, n, k)));

    json out;
    out["command"] = "eigencheck";
    out["lambda"] = lambda;
    out["n"] = n;
    out["k"] = k;
    out["perturbed"] = perturb;
    const bool pass = lhs == rhs;
    out["pass"] = pass;
    if (!pass) {
        // first differing monomial in descending lex order
        const auto diff = lhs - rhs;
        const auto& [e, c] = *diff.terms().begin();
        json fd;
        fd["y_exp"] = e;
        fd["lhs_coeff"] = lhs.coeff(e).str();
        fd["rhs_coeff"] = rhs.coeff(e).str();
        out["first_diff"] = std::move(fd);
    }
    std::cout << out.dump(2) << "\n";
    return pass ? 0 : 3;
}

int run_contour(int lambda, int n, int k, double q, std::uint64_t seed,
                std::optional<double> radius, int nodes) {
    qmac::point_sampler rng(seed);
    const auto y = rng.y_vector_for_contour(lambda, n, k, q);
    const qmac::qjp_spec spec(lambda, n, k, q, y);
    const double r = radius.value_or(spec.default_radius());

    json out;
    out["command"] = "contour";
    out["lambda"] = lambda;
    out["n"] = n;
    out["k"] = k;
    out["q"] = q;
    out["seed"] = seed;
    try {
        qmac::quad_stats stats;
        const qmac::complex value = qmac::contour_integral(spec, r, nodes, &stats);

        const auto poly = qmac::one_row_polynomial(lambda, n, k);
        const qmac::complex expect =
            qmac::contour_normalization(lambda, k).eval_q(qmac::complex(q, 0.0)) *
            poly.eval(qmac::complex(q, 0.0), y);
        const qmac::complex rsum =
            qmac::residue_solution_sum(lambda, n, k, qmac::complex(q, 0.0), y);

        const double res_poly = std::abs(value - expect) / std::max(1.0, std::abs(expect));
        const double res_residues = std::abs(value - rsum) / std::max(1.0, std::abs(value));

        out["radius"] = stats.radius;
        out["nodes_used"] = stats.nodes_used;
        out["value_re"] = value.real();
        out["value_im"] = value.imag();
        out["residual_vs_polynomial"] = res_poly;
        out["residual_vs_residues"] = res_residues;
        const bool pass = res_poly < 1e-8 && res_residues < 1e-8;
        out["pass"] = pass;
        std::cout << out.dump(2) << "\n";
        return pass ? 0 : 3;
    } catch (const qmac::no_convergence& e) {
        out["error"] = std::string("no_convergence: ") + e.what();
        out["last_diff"] = e.last_diff;
        out["prev_diff"] = e.prev_diff;
        std::cout << out.dump(2) << "\n";
        return 4;
    }
}

int run_identities(int n, int k, int trials, std::uint64_t seed, const std::string& which,
                   int lambda_max) {
    std::vector<qmac::identity_report> reports;
    auto want = [&](const std::string& name) { return which == "all" || which == name; };
    if (want("sign-term-sum")) reports.push_back(qmac::check_sign_term_sum(n, k, trials, seed));
    if (want("sign-term-sum-inversion"))
        reports.push_back(qmac::check_sign_term_sum_inversion(n, k, trials, seed));
    if (want("deformed-sum")) reports.push_back(qmac::check_deformed_sum(n, k, trials, seed));
    if (want("deformed-sum-limit"))
        reports.push_back(qmac::check_deformed_sum_limit(n, k, std::min(trials, 20), seed));
    if (want("deformed-sum-residue"))
        reports.push_back(qmac::check_deformed_sum_residue(n, k, std::min(trials, 20), seed));
    if (want("poincare"))
        for (auto& rep : qmac::check_poincare(n, k, trials, seed)) reports.push_back(rep);
    if (want("q-binomial")) reports.push_back(qmac::check_q_binomial(k, lambda_max));
    if (reports.empty()) {
        std::cerr << "unknown identity: " << which << "\n";
        return 2;
    }

    bool all_pass = true;
    json arr = json::array();
    for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass && (!rep.exact_checked || rep.exact_pass);
        arr.push_back(qmac::to_json(rep));
    }
    json out;
    out["command"] = "verify-identities";
    out["n"] = n;
    out["k"] = k;
    out["trials"] = trials;
    out["seed"] = seed;
    out["all_pass"] = all_pass;
    out["reports"] = std::move(arr);
    std::cout << out.dump(2) << "\n";
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macdonald q-difference operator toolkit (hyperoctahedral type)"};
    app.require_subcommand(1);

    int lambda = 0, n = 1, k = 1, nodes = 64, trials = 100, lambda_max = 6;
    double q = 0.3;
    std::uint64_t seed = 0;
    std::string method = "corollary", format = "json", which = "all";
    std::optional<double> radius;
    bool perturb = false;

    auto* poly = app.add_subcommand("poly", "one-row Macdonald polynomial");
    poly->add_option("--lambda", lambda, "row size (>= 0)")->required();
    poly->add_option("--n", n, "number of variables (>= 1)")->required();
    poly->add_option("--k", k, "t = q^k exponent (>= 1)")->required();
    poly->add_option("--method", method)->check(CLI::IsMember({"corollary", "eigensolve", "both"}));
    poly->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

    auto* eig = app.add_subcommand("eigencheck", "exact check of E P = c P");
    eig->add_option("--lambda", lambda)->required();
    eig->add_option("--n", n)->required();
    eig->add_option("--k", k)->required();
    eig->add_flag("--perturb", perturb, "corrupt the polynomial; must then fail (exit 3)");

    auto* cont = app.add_subcommand("contour", "contour integral vs residues vs polynomial");
    cont->add_option("--lambda", lambda)->required();
    cont->add_option("--n", n)->required();
    cont->add_option("--k", k)->required();
    cont->add_option("--q", q, "0 < q < 1")->required();
    cont->add_option("--seed", seed);
    cont->add_option("--radius", radius, "contour radius (default: 1.1 * outermost pole)");
    cont->add_option("--nodes", nodes, "starting quadrature nodes");

    auto* ver = app.add_subcommand("verify-identities", "seeded identity checks");
    ver->add_option("--n", n)->required();
    ver->add_option("--k", k)->required();
    ver->add_option("--trials", trials);
    ver->add_option("--seed", seed);
    ver->add_option("--identity", which,
                    "all | sign-term-sum | sign-term-sum-inversion | deformed-sum | "
                    "deformed-sum-limit | deformed-sum-residue | poincare | q-binomial");
    ver->add_option("--lambda-max", lambda_max, "q-binomial truncation degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (poly->parsed()) {
            if (lambda < 0 || n < 1 || k < 1) {
                std::cerr << "invalid arguments: need lambda >= 0, n >= 1, k >= 1\n";
                return 2;
            }
            return emit_poly(lambda, n, k, method, format);
        }
        if (eig->parsed()) {
            if (lambda < 0 || n < 1 || k < 1) {
                std::cerr << "invalid arguments: need lambda >= 0, n >= 1, k >= 1\n";
                return 2;
            }
            return run_eigencheck(lambda, n, k, perturb);
        }
        if (cont->parsed()) {
            if (lambda < 0 || n < 1 || k < 1 || !(q > 0.0 && q < 1.0)) {
                std::cerr << "invalid arguments: need lambda >= 0, n >= 1, k >= 1, 0 < q < 1\n";
                return 2;
            }
            if (nodes < 2) {
                std::cerr << "invalid arguments: need nodes >= 2\n";
                return 2;
            }
            return run_contour(lambda, n, k, q, seed, radius, nodes);
        }
        if (ver->parsed()) {
            if (n < 1 || n > 4 || k < 1 || trials < 1) {
                std::cerr << "invalid arguments: need 1 <= n <= 4, k >= 1, trials >= 1\n";
                return 2;
            }
            return run_identities(n, k, trials, seed, which, lambda_max);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const qmac::no_convergence& e) {
        std::cerr << "no convergence: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
