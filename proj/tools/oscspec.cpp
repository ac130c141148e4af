// oscspec: point spectra of the cubic Dirac operator family on compact
// quotients of the 4-dimensional oscillator group by basic lattices.
//
// Subcommands:
//   spectrum      eigenvalues of -Omega or D^t with summand multiplicities
//   verify        numerical verification suites for the library invariants
//   accumulation  shifted-lattice eigenvalue clusters near the real line
//
// Exit codes: 0 success, 1 verification failure, 2 invalid spin structure,
// 3 internal route-consistency failure.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "oscdirac/spectrum_doc.hpp"
#include "oscdirac/verify.hpp"
#include "oscdirac/version.hpp"

using namespace oscdirac;

namespace {

int run_spectrum(int r, int kappa, const std::string& mu_tok, const std::string& nu_tok,
                 const std::string& eps_bits, double t, double cutoff, const std::string& op,
                 const std::string& format) {
    LatticeParams lat = LatticeParams::make_exact(r, kappa, parse_scalar(mu_tok), parse_scalar(nu_tok));
    SpinStructure eps = SpinStructure::parse(eps_bits);
    if (!eps.valid_for(lat)) {
        std::fprintf(stderr, "error: eps=%s is not a homomorphism for r=%d (r*eps3 must be even)\n",
                     eps_bits.c_str(), r);
        return 2;
    }
    SpectrumDocument doc;
    try {
        doc = compute_spectrum_document(lat, eps, op, t, cutoff);
    } catch (const RouteConsistencyError& e) {
        std::fprintf(stderr, "error: route consistency failure: %s\n", e.what());
        return 3;
    }
    std::string text;
    if (format == "json") text = to_json(doc);
    else if (format == "csv") text = to_csv(doc);
    else text = to_table(doc);
    std::fputs(text.c_str(), stdout);
    if (!text.empty() && text.back() != '\n') std::fputc('\n', stdout);
    return 0;
}

int run_verify(const std::string& suite, int trunc, unsigned seed) {
    auto checks = verify_suite(suite, trunc, seed);
    bool ok = true;
    for (const auto& c : checks) {
        std::printf("%-6s %-70s measured %.3e  (tol %.1e)\n", c.pass ? "[ok]" : "[FAIL]", c.name.c_str(),
                    c.measured, c.threshold);
        ok = ok && c.pass;
    }
    if (!ok) {
        for (const auto& c : checks)
            if (!c.pass) {
                std::fprintf(stderr, "verification failed: %s\n", c.name.c_str());
                break;
            }
        return 1;
    }
    std::printf("all %zu checks passed\n", checks.size());
    return 0;
}

int run_accumulation(const std::string& utilde_tok, int count, int r, int kappa) {
    LatticeParams lat = LatticeParams::make_exact(r, kappa, parse_scalar("0"), parse_scalar("1"));
    SpinStructure eps{0, 0, 0, kappa % 2};
    ScalarInput utilde = parse_scalar(utilde_tok);
    auto res = shifted_spectrum(lat, eps, utilde, count);
    if (res.rational_warning)
        std::fprintf(stderr,
                     "warning: utilde appears rational; the eigenvalue family is finite near zero and no "
                     "accumulation point is expected\n");
    std::printf("beta = %s\n", format_sig15(res.beta).c_str());
    if (!res.convergents.empty()) {
        std::printf("convergents n'/m' of utilde and their eigenvalues -4 beta m'(n' - utilde m'):\n");
        for (const auto& c : res.convergents)
            std::printf("  m'=%-8lld n'=%-8lld eigenvalue %s\n", static_cast<long long>(c.m),
                        static_cast<long long>(c.n), format_sig15(c.value).c_str());
    }
    std::printf("%zu eigenvalues closest to zero:\n", res.eigenvalues.size());
    for (double v : res.eigenvalues) std::printf("  %s\n", format_sig15(v).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"point spectra of cubic Dirac operators on oscillator-group quotients"};
    app.set_version_flag("--version", std::string("oscspec ") + kVersion);
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand("spectrum", "compute spec(-Omega) or spec_p(D^t)");
    int r = 1, kappa = 1;
    std::string mu = "0", nu = "1", eps = "0000", op = "casimir", format = "table";
    double t = 1.0 / 3.0, cutoff = 50.0;
    spectrum->add_option("--r", r, "central step parameter r >= 1");
    spectrum->add_option("--kappa", kappa, "R-factor period kappa >= 1");
    spectrum->add_option("--mu", mu, "lattice shape mu (token: p/q, sqrtN, p/q*sqrtN, or float)");
    spectrum->add_option("--nu", nu, "lattice shape nu > 0 (same token forms)");
    spectrum->add_option("--eps", eps, "spin structure bits eps1..eps4, e.g. 0101");
    spectrum->add_option("--t", t, "connection parameter (1/3 = cubic Dirac operator)");
    spectrum->add_option("--cutoff", cutoff, "emit |eigenvalue| <= cutoff");
    spectrum->add_option("--operator", op, "casimir | dirac")
        ->check(CLI::IsMember({"casimir", "dirac"}));
    spectrum->add_option("--format", format, "json | csv | table")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    std::string suite = "all";
    int trunc = 32;
    unsigned seed = 7;
    verify->add_option("--suite", suite, "group|clifford|reps|dirac|lattice|theta|all")
        ->check(CLI::IsMember({"group", "clifford", "reps", "dirac", "lattice", "theta", "all"}));
    verify->add_option("--trunc", trunc, "truncation parameter N for matrix models");
    verify->add_option("--seed", seed, "random seed");

    auto* accumulation = app.add_subcommand("accumulation", "shifted-lattice eigenvalue clusters");
    std::string utilde = "sqrt2";
    int count = 10;
    int ar = 1, akappa = 1;
    accumulation->add_option("--utilde", utilde, "shift parameter (surd token like sqrt2, or float)");
    accumulation->add_option("--count", count, "number of eigenvalues to report");
    accumulation->add_option("--r", ar, "lattice r");
    accumulation->add_option("--kappa", akappa, "lattice kappa");

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) return run_spectrum(r, kappa, mu, nu, eps, t, cutoff, op, format);
        if (verify->parsed()) return run_verify(suite, trunc, seed);
        if (accumulation->parsed()) return run_accumulation(utilde, count, ar, akappa);
    } catch (const InvalidSpinStructure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const RouteConsistencyError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
