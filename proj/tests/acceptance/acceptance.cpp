// Acceptance suite. Prints one PASS/FAIL line per criterion.
//
//   polya_acceptance            run every criterion
//   polya_acceptance 3 7        run criteria 3 and 7 only
//
// Exit status is nonzero when any selected criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "polya/bessel.hpp"
#include "polya/borel.hpp"
#include "polya/loop_census.hpp"
#include "polya/quadrature.hpp"
#include "polya/series.hpp"
#include "polya/walk_sim.hpp"

#ifndef POLYA_CLI_PATH
#error "POLYA_CLI_PATH must point at the polya executable"
#endif

using namespace polya;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kDefaultSeed = 20240607;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string failed;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            failed += " [failed: " + what + "]";
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

void c1_oracle_equivalence(Outcome& o)
{
    const auto t0 = Clock::now();
    int checked = 0;
    for (int d = 1; d <= 3; ++d) {
        const Dimension dim(d);
        const auto loops = loop_counts(dim, 8);
        const auto prime = indecomposable_counts(dim, 8);
        for (unsigned n = 0; n <= 8; ++n) {
            o.require(LoopCount(loops[n]) == brute_force_loop_count(dim, n),
                      "loop_count d=" + std::to_string(d) + " n=" + std::to_string(n));
            if (n >= 1)
                o.require(LoopCount(prime[n]) == brute_force_first_return_count(dim, n),
                          "indecomposable d=" + std::to_string(d) + " n=" + std::to_string(n));
            ++checked;
        }
    }
    const double secs = seconds_since(t0);
    o.require(secs < 60.0, "runtime < 60 s");
    o.detail << checked << " (d,n) pairs, " << secs << " s";
}

void c2_fundamental_identity(Outcome& o)
{
    const auto t0 = Clock::now();
    for (int d = 1; d <= 5; ++d)
        o.require(verify_fundamental_identity(Dimension(d), 64),
                  "P*Q = Q-1 through order 64 for d=" + std::to_string(d));
    const double secs = seconds_since(t0);
    o.require(secs < 10.0, "runtime < 10 s");
    o.detail << "d=1..5, order 64, " << secs << " s";
}

void c3_bessel_cross_representation(Outcome& o)
{
    double worst_series = 0.0;
    for (double x = 0.5; x <= 20.0; x += (x < 1.0 ? 0.5 : 1.0))
        worst_series = std::max(worst_series,
                                rel(i_alpha_series(BesselOrder::integer(0), x), i0_integral(x)));
    double worst_scaled = 0.0;
    for (double x = 0.5; x <= 30.0; x += 0.5)
        worst_scaled = std::max(worst_scaled, rel(i0_scaled(x) * std::exp(x), i0_integral(x)));
    o.require(worst_series < 1e-10, "series vs integral < 1e-10");
    o.require(worst_scaled < 1e-10, "scaled identity < 1e-10");
    o.detail << "max rel series/integral " << worst_series << ", scaled " << worst_scaled;
}

void c4_laplace_asymptotic(Outcome& o)
{
    const std::array<double, 4> xs = {10.0, 50.0, 100.0, 200.0};
    std::array<double, 4> ratio{};
    for (std::size_t i = 0; i < xs.size(); ++i)
        ratio[i] = i0_integral(xs[i]) / i0_asymptotic(xs[i]);
    o.require(ratio[3] >= 1.0 && ratio[3] <= 1.001, "ratio at x=200 in [1, 1.001]");
    for (std::size_t i = 1; i < ratio.size(); ++i)
        o.require(ratio[i] < ratio[i - 1], "ratio decreasing");
    o.detail << "ratios " << ratio[0] << ", " << ratio[1] << ", " << ratio[2] << ", " << ratio[3];
}

void c5_integrand_asymptotic(Outcome& o)
{
    const Dimension d3(3);
    const double t = 1e4;
    const double ratio = std::exp(integrand_log(t, 1.0, d3)) / integrand_asymptotic(t, 1.0, d3);
    const double constant = std::pow(3.0 / (2.0 * kPi), 1.5);
    o.require(ratio >= 0.99 && ratio <= 1.01, "ratio in [0.99, 1.01]");
    o.require(rel(asymptotic_constant(d3), constant) < 1e-15, "constant (3/2pi)^{3/2}");
    o.detail << "ratio " << ratio << ", constant " << asymptotic_constant(d3);
}

void c6_polya_constant_d3(Outcome& o)
{
    const Dimension d3(3);
    const auto cfg = QuadratureConfig::defaults_for(d3);
    const double p = *return_probability(d3, cfg).return_probability;
    auto doubled = cfg;
    doubled.split_point *= 2.0;
    const double p2 = *return_probability(d3, doubled).return_probability;
    const auto b = polya_bracket(d3, 64, cfg);

    o.require(b.contains(p), "quadrature p inside the exact bracket");
    o.require(b.width() < 1e-2, "bracket width < 1e-2");
    o.require(std::fabs(p - p2) < 1e-4, "stable to 1e-4 under split doubling");
    o.detail.precision(10);
    o.detail << "p(3) " << p << ", bracket [" << b.lower << ", " << b.upper << "] width "
             << b.width() << ", |p(2N) - p(N)| " << std::fabs(p - p2);
}

void c7_monte_carlo(Outcome& o)
{
    const auto t0 = Clock::now();
    const double p3 = *return_probability(Dimension(3)).return_probability;
    const auto e3 = estimate_return_probability(WalkConfig(Dimension(3), 100000, 200000, kDefaultSeed));
    const auto e1 = estimate_return_probability(WalkConfig(Dimension(1), 10000, 100000, kDefaultSeed));
    const double secs = seconds_since(t0);
    o.require(e3.covers(p3), "d=3 CI covers the quadrature p(3)");
    o.require(e1.p_hat >= 0.98, "d=1 p_hat >= 0.98");
    o.require(secs < 120.0, "runtime < 2 min");
    o.detail.precision(6);
    o.detail << "d=3 p_hat " << e3.p_hat << " CI [" << e3.ci_low << ", " << e3.ci_high << "] vs "
             << p3 << "; d=1 p_hat " << e1.p_hat << "; " << secs << " s";
}

void c8_classification(Outcome& o)
{
    o.require(return_probability(Dimension(1)).recurrent(), "d=1 recurrent");
    o.require(return_probability(Dimension(2)).recurrent(), "d=2 recurrent");
    double prev = 1.0;
    o.detail.precision(8);
    o.detail << "p(3..6) =";
    for (int d = 3; d <= 6; ++d) {
        const auto c = return_probability(Dimension(d));
        const bool transient = c.kind == WalkKind::Transient && c.return_probability.has_value();
        o.require(transient, "d=" + std::to_string(d) + " transient");
        if (!transient)
            continue;
        const double p = *c.return_probability;
        o.require(p > 0.0 && p < 1.0, "p in (0,1)");
        o.require(p < prev, "p strictly decreasing in d");
        prev = p;
        o.detail << " " << p;
    }
}

void c9_tail_integral(Outcome& o)
{
    constexpr double N = 100.0;
    constexpr double far = 1e6;
    for (int d : {3, 4}) {
        const Dimension dim(d);
        const double exponent = 1.0 - 0.5 * d;
        // t = e^s turns the power into a smooth exponential.
        const quad::Integrand f = [exponent](double s) { return std::exp(exponent * s); };
        const double numeric =
            quad::integrate_adaptive(f, std::log(N), std::log(far), {1e-14, 40, 8}).value;
        const double closed = *tail_power_integral(N, dim) - *tail_power_integral(far, dim);
        o.require(rel(closed, numeric) < 1e-6,
                  "closed form vs quadrature on [N, 1e6] for d=" + std::to_string(d));
        o.detail << "d=" << d << " rel " << rel(closed, numeric) << " (int_N^inf "
                 << *tail_power_integral(N, dim) << " vs int_N^1e6 " << numeric << "); ";
    }
    o.require(!tail_power_integral(N, Dimension(1)).has_value(), "d=1 divergent");
    o.require(!tail_power_integral(N, Dimension(2)).has_value(), "d=2 divergent");
    o.detail << "d=1,2 flagged divergent";
}

std::string capture(const std::string& command, int& status)
{
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    status = pclose(pipe);
    return out;
}

void c10_determinism(Outcome& o)
{
    const std::vector<std::string> commands = {
        "loops --d 3 --max-n 16",
        "series --d 3 --max-n 64",
        "bessel",
        "qintegral --d 3",
        "polya --d 1 --d 2 --d 3 --d 4 --d 5 --d 6",
        "mc --d 3 --trials 20000 --horizon 2000 --seed 7",
        "compare --d 3 --trials 20000 --horizon 2000 --seed 7",
    };
    for (const auto& cmd : commands) {
        const std::string full = std::string(POLYA_CLI_PATH) + " " + cmd + " 2>/dev/null";
        int s1 = 0;
        int s2 = 0;
        const auto a = capture(full, s1);
        const auto b = capture(full, s2);
        o.require(s1 == 0 && s2 == 0, "'" + cmd + "' exits 0");
        o.require(!a.empty() && a == b, "'" + cmd + "' byte-identical");
    }
    o.detail << commands.size() << " subcommands run twice";
}

struct Criterion {
    const char* title;
    std::function<void(Outcome&)> run;
};

} // namespace

int main(int argc, char** argv)
{
    const std::map<int, Criterion> criteria = {
        {1, {"oracle equivalence (combinatorics)", c1_oracle_equivalence}},
        {2, {"fundamental identity P(z)Q(z) = Q(z) - 1", c2_fundamental_identity}},
        {3, {"Bessel cross-representation", c3_bessel_cross_representation}},
        {4, {"Laplace asymptotic of I_0", c4_laplace_asymptotic}},
        {5, {"integrand asymptotic, d = 3", c5_integrand_asymptotic}},
        {6, {"Polya constant d = 3 bracket", c6_polya_constant_d3}},
        {7, {"Monte Carlo coverage", c7_monte_carlo}},
        {8, {"recurrence/transience classification", c8_classification}},
        {9, {"tail power integral", c9_tail_integral}},
        {10, {"CLI determinism", c10_determinism}},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.push_back(std::stoi(argv[i]));
    if (selected.empty())
        for (const auto& [id, c] : criteria)
            selected.push_back(id);

    int failures = 0;
    for (int id : selected) {
        const auto it = criteria.find(id);
        if (it == criteria.end()) {
            std::cout << "C" << id << " FAIL unknown criterion\n";
            ++failures;
            continue;
        }
        Outcome o;
        try {
            it->second.run(o);
        }
        catch (const std::exception& e) {
            o.pass = false;
            o.failed += std::string(" [exception: ") + e.what() + "]";
        }
        std::cout << "C" << id << (o.pass ? " PASS " : " FAIL ") << it->second.title << ": "
                  << o.detail.str() << o.failed << std::endl;
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
