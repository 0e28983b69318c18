#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "singquad/accel.hpp"
#include "singquad/analysis.hpp"
#include "singquad/cli.hpp"
#include "singquad/oracle.hpp"
#include "singquad/proofcheck.hpp"
#include "singquad/riemann.hpp"

namespace {

// Always-on requirement: never compiled out in Release.
#define REQUIRE(cond, msg)                                                      \
    do {                                                                        \
        if (!(cond)) {                                                          \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg \
                      << "\n";                                                  \
            std::exit(1);                                                       \
        }                                                                       \
    } while (0)

void requireWithin(double value, double target, double rel, const std::string& what) {
    if (std::fabs(value - target) > rel * std::fabs(target)) {
        std::cerr << "[FAIL] " << what << ": " << value << " vs " << target
                  << " (allowed " << rel * 100.0 << "%)\n";
        std::exit(1);
    }
}

using namespace singquad;

// 1: the 3/2 decay rate of the endpoint-weighted error, with the brute-force
// limit 0.2079 at n = 2^16 for the pure square root on [0, 1].
void runRateCriterion() {
    const std::vector<long> grid = default_grid();
    for (const char* name : {"sqrt1mx", "sqrt1mx_sym", "sqrt_mix_smooth"}) {
        const Integrand& f = corpus_fixture(name);
        const ErrorSequence seq =
            compute_error_sequence(f, SumScheme::kTrapezoidEndpoint, grid);
        const RateFit fit = fit_rate(seq);
        REQUIRE(fit.exponent >= 1.45 && fit.exponent <= 1.55,
                std::string(name) + " fitted exponent " + std::to_string(fit.exponent));
        const double l1 = envelope_constant(seq, 1.5, 64);
        REQUIRE(std::isfinite(l1) && l1 > 0.0,
                std::string(name) + " envelope not finite");
    }

    const Integrand& pure = corpus_fixture("sqrt1mx");
    const long n = 1L << 16;
    const double err = error_R(pure, n, 2.0 / 3.0);
    const double scaled = std::pow(static_cast<double>(n), 1.5) * std::fabs(err);
    requireWithin(scaled, 0.2079, 0.01, "n^(3/2) |R_n| at 2^16");

    std::cout << "[PASS] 1 endpoint-weighted errors decay at the 3/2 rate"
              << " (limit 0.2079 within 1%)\n";
}

// 2: the scaled differences D_n decay at the 1/2 rate and stay below the
// assembled constant at every grid resolution.
void runScaledDifferenceCriterion() {
    const std::vector<long> grid = default_grid();
    for (const auto& f : corpus()) {
        if (f.cls() != IntegrandClass::kP1Item2) continue;
        const ErrorSequence seq = compute_scaled_difference_sequence(f, grid);
        const RateFit fit = fit_rate(seq);
        REQUIRE(fit.exponent >= 0.4 && fit.exponent <= 0.6,
                f.name() + " difference exponent " + std::to_string(fit.exponent));

        const double lbar = lbar_constant(f, 64);
        for (const auto& entry : seq.entries) {
            const double bound =
                lbar / std::sqrt(static_cast<double>(entry.n));
            REQUIRE(std::fabs(entry.value) <= bound,
                    f.name() + " |D_n| above the constant at n = " +
                        std::to_string(entry.n));
        }
    }
    std::cout << "[PASS] 2 scaled differences decay at the 1/2 rate under"
              << " the assembled constants\n";
}

// 3: the proof identities hold to 1e-9, and the weighted integral reproduces
// its closed form (4 sqrt 2 - 6)/3 to 1e-10.
void runIdentityCriterion() {
    for (const auto& f : corpus()) {
        if (f.cls() != IntegrandClass::kP1Item2) continue;
        for (const long n : {8L, 32L, 128L, 512L}) {
            const IdentityReport report = check_item2_identities(f, n, 1e-9);
            REQUIRE(report.all_ok, f.name() + " identity failed at n = " +
                                       std::to_string(n));
        }
    }

    const Integrand& pure = corpus_fixture("sqrt1mx_sym");
    const SymmetrizedFunction s = symmetrize(pure);
    const double worked = (4.0 * std::sqrt(2.0) - 6.0) / 3.0;
    const auto [i1, i2] = integrals_IPhi(s, 1e-12);
    REQUIRE(std::fabs(i1 - worked) <= 1e-10, "I_Phi1 misses its closed form");
    const double via_integral = exact_integral(pure, 1e-12).value - s.phi(0.0);
    REQUIRE(std::fabs(via_integral - worked) <= 1e-10,
            "the integral route misses the closed form");
    (void)i2;

    std::cout << "[PASS] 3 proof identities hold to 1e-9"
              << " (I_Phi1 = (4*sqrt(2)-6)/3 to 1e-10)\n";
}

// 4: the two-sided corridor for the -1/2 family on both domains, with the
// brute-force limit 1.46035 at n = 2^16 on [0, 1].
void runTwoSidedCriterion() {
    const std::vector<long> grid = default_grid();
    for (const char* name : {"inv_sqrt", "inv_sqrt_sym"}) {
        const Integrand& f = corpus_fixture(name);
        const Prop2Certificate cert = prop2_certificate(f, 64);
        REQUIRE(cert.L2star > cert.c1, std::string(name) + " L2star too small");

        const double exact = exact_integral(f, 1e-12).value;
        const long floor_n = std::max<long>(64, cert.min_admissible_n());
        double sum_sup = 0.0;
        for (const long n : grid) {
            const double sum = left_sum(f, n);
            sum_sup = std::max(sum_sup, std::fabs(sum));
            if (n < floor_n) continue;
            const double err = exact - sum;
            const double root = std::sqrt(static_cast<double>(n));
            const double lower =
                cert.L2star / root - cert.l2 / static_cast<double>(n);
            const double upper = cert.L2 / root;
            REQUIRE(lower <= err && err <= upper,
                    std::string(name) + " error left the corridor at n = " +
                        std::to_string(n));
        }
        const double sum_cap =
            std::fabs(exact) + cert.L2 / 8.0 + cert.l2;
        REQUIRE(sum_sup <= sum_cap, std::string(name) + " left sums unbounded");
    }

    const Integrand& unit = corpus_fixture("inv_sqrt");
    const long n = 1L << 16;
    const double err = 2.0 - left_sum(unit, n);
    const double scaled = std::sqrt(static_cast<double>(n)) * err;
    requireWithin(scaled, 1.46035, 0.01, "sqrt(n) error at 2^16");

    std::cout << "[PASS] 4 two-sided -1/2-family corridor holds"
              << " (limit 1.46035 within 1%)\n";
}

// 5: the by-parts split of the left-sum error, with an independent tail
// route, at every admissible grid resolution for every -1/2 fixture.
void runSplitCriterion() {
    const std::vector<long> grid = default_grid();
    for (const auto& f : corpus()) {
        if (f.cls() != IntegrandClass::kP2) continue;
        const Prop2Certificate cert = prop2_certificate(f, 64);
        const long floor_n = std::max<long>(64, cert.min_admissible_n());
        for (const long n : grid) {
            if (n < floor_n) continue;
            const Prop2Decomposition dec = prop2_decomposition(f, n, cert);
            REQUIRE(dec.split_residual <= 1e-10,
                    f.name() + " split residual " +
                        std::to_string(dec.split_residual) + " at n = " +
                        std::to_string(n));
            const double root = std::sqrt(static_cast<double>(n));
            REQUIRE(dec.sigma3 >= cert.L2star / root,
                    f.name() + " tail mass below its floor at n = " +
                        std::to_string(n));
            REQUIRE(dec.sigma2 >= -cert.l2 / static_cast<double>(n),
                    f.name() + " interior mass below its floor at n = " +
                        std::to_string(n));
        }
    }
    std::cout << "[PASS] 5 error split verified against the independent"
              << " tail route (1e-10)\n";
}

// 6: sqrt(n) growth of the symmetric sums for the -3/2 singularity, with the
// partial-sum limit 2.61238, and the trivial cap for bounded integrands.
void runGrowthCriterion() {
    const long n = 1L << 16;
    const double sum = symmetric_sum(corpus_fixture("p3_singular"), n);
    const double scaled = std::fabs(sum) / std::sqrt(static_cast<double>(n));
    requireWithin(scaled, 2.61238, 0.01, "n^(-1/2) symmetric sum at 2^16");

    const std::vector<long> grid = default_grid();
    for (const char* name : {"p3_singular", "p3_bounded", "p3_odd"}) {
        const BoundReport report =
            verify_prop3(corpus_fixture(name), grid, 64);
        REQUIRE(report.holds, std::string(name) + " slope test failed");
    }

    // cos(3x) and x are bounded by 1, so L3 may not exceed 2
    for (const char* name : {"p3_bounded", "p3_odd"}) {
        const ErrorSequence seq = compute_error_sequence(
            corpus_fixture(name), SumScheme::kSymmetric, grid);
        const double l3 = envelope_constant(seq, -0.5, 64);
        REQUIRE(l3 <= 2.0, std::string(name) + " envelope above 2 sup|f|");
    }

    std::cout << "[PASS] 6 symmetric sums grow no faster than sqrt(n)"
              << " (limit 2.61238 within 1%)\n";
}

// 7: the two-point correction cuts the raw error by at least 10x at n = 256
// for every fixture with a genuine square-root term.
void runAccelerationCriterion() {
    for (const auto& f : corpus()) {
        const bool in_family = f.cls() == IntegrandClass::kP1 ||
                               f.cls() == IntegrandClass::kP1Item2;
        if (!in_family || f.c1() == 0.0) continue;
        const AcceleratedEstimate est = extrapolate(f, 256);
        const double exact = *f.exact_integral_hint();
        const double raw_err = std::fabs(est.raw_sum - exact);
        const double corrected_err = std::fabs(est.corrected_value - exact);
        REQUIRE(corrected_err <= 0.1 * raw_err,
                f.name() + " correction gained less than 10x (" +
                    std::to_string(corrected_err / raw_err) + ")");
    }
    std::cout << "[PASS] 7 acceleration gains at least 10x on every"
              << " square-root fixture at n = 256\n";
}

// 8: two full report sweeps are byte-identical.
void runDeterminismCriterion() {
    const auto sweep = []() {
        std::string bytes;
        bytes += run_cli({"corpus", "--format", "json"}).out;
        for (const auto& f : corpus()) {
            bytes += run_cli({"verify", "--fixture", f.name(), "--format",
                              "json"}).out;
        }
        bytes += run_cli({"proofcheck", "--fixture", "sqrt1mx_sym",
                          "--format", "json"}).out;
        bytes += run_cli({"proofcheck", "--fixture", "inv_sqrt", "--format",
                          "json"}).out;
        bytes += run_cli({"extrapolate", "--fixture", "sqrt1mx", "--format",
                          "json"}).out;
        return bytes;
    };
    const std::string first = sweep();
    const std::string second = sweep();
    REQUIRE(!first.empty(), "report sweep produced no output");
    REQUIRE(first == second, "report sweeps differ between runs");
    std::cout << "[PASS] 8 full report sweep is byte-identical across runs\n";
}

}  // namespace

int main() {
    runRateCriterion();
    runScaledDifferenceCriterion();
    runIdentityCriterion();
    runTwoSidedCriterion();
    runSplitCriterion();
    runGrowthCriterion();
    runAccelerationCriterion();
    runDeterminismCriterion();
    return 0;
}
