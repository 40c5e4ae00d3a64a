#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polya/dimension.hpp"
#include "polya/quadrature.hpp"

namespace polya {

/// Controls for the Borel-transform integral Q(z) = int_0^inf I_0(tz/d)^d e^{-t} dt.
struct QuadratureConfig {
    double split_point;  ///< end of the head interval [0, N]; the tail is [N, inf)
    double abs_tol;      ///< per-piece absolute tolerance of the adaptive rule
    int max_refinements; ///< bisection rounds before ToleranceNotMet

    QuadratureConfig(double split, double tol = 1e-10, int refinements = 40);

    /// split_point = max(50 d, 200): past it the leading asymptotic term is
    /// within 1% of the integrand.
    static QuadratureConfig defaults_for(Dimension d);
};

/// log of I_0(tz/d)^d e^{-t}, evaluated as d log(e^{-x} I_0(x)) + t(z - 1)
/// with x = tz/d, so it never overflows.
double integrand_log(double t, double z, Dimension d);

/// (d / 2pi)^{d/2}.
double asymptotic_constant(Dimension d);

/// (d / 2pi)^{d/2} e^{t(z-1)} (tz)^{-d/2}: the large-t form of the integrand.
double integrand_asymptotic(double t, double z, Dimension d);

/// int_N^inf t^{-d/2} dt = N^{1-d/2} / (d/2 - 1) for d >= 3; std::nullopt
/// (divergent) for d <= 2.
std::optional<double> tail_power_integral(double N, Dimension d);

/// sup over t >= N of integrand(t, 1, d) / integrand_asymptotic(t, 1, d),
/// i.e. (sqrt(2 pi x) e^{-x} I_0(x))^d at x = N/d. The ratio falls
/// monotonically toward 1 for x >= 1, so its value at the split point
/// bounds it on the whole tail.
double envelope_ratio(double N, Dimension d);

/// Rigorous upper bound for int_N^inf I_0(tz/d)^d e^{-t} dt.
/// z = 1 (d >= 3): envelope_ratio * constant * tail_power_integral.
/// z < 1: (e^{-x} I_0(x))^d at x = Nz/d times e^{-(1-z)N} / (1-z).
double tail_upper_bound(double z, Dimension d, double N);

/// Q(z) for 0 <= z < 1, or z = 1 when d >= 3. Throws DivergentIntegral for
/// z = 1 with d <= 2, DomainError outside [0, 1], ToleranceNotMet when the
/// refinement cap is hit.
QuadratureResult q_integral(double z, Dimension d, const QuadratureConfig& cfg);

/// The pieces q_integral adds together, plus the analytic cross-checks.
struct QIntegralParts {
    QuadratureResult head;            ///< [0, split_point]
    QuadratureResult tail;            ///< [split_point, inf), mapped quadrature
    double tail_bound = 0.0;          ///< tail_upper_bound at the split point
    std::optional<double> asymptotic_tail; ///< constant * tail_power_integral, z = 1 only
    int dimension = 1;
};

QIntegralParts q_integral_parts(double z, Dimension d, const QuadratureConfig& cfg);

namespace serial {
QuadratureResult q_integral(double z, Dimension d, const QuadratureConfig& cfg);
} // namespace serial

struct AbelPoint {
    double z;
    QuadratureResult q;
};

/// Q(z) along an ascending list of z in [0, 1).
std::vector<AbelPoint> abel_scan(Dimension d, std::span<const double> zs,
                                 const QuadratureConfig& cfg);

enum class WalkKind { Recurrent, Transient };

struct Classification {
    WalkKind kind;
    std::optional<double> return_probability; ///< present iff Transient, in (0, 1)
    double error_estimate = 0.0;              ///< on return_probability

    bool recurrent() const noexcept { return kind == WalkKind::Recurrent; }
};

/// d <= 2: Recurrent, because the tail integral diverges. d >= 3: Transient
/// with p = 1 - 1/Q(1).
Classification return_probability(Dimension d, const QuadratureConfig& cfg);
Classification return_probability(Dimension d);

/// Two-sided bracket for p(d), d >= 3, from exact partial sums:
///   lower = sum_{n<=N} p_n,
///   upper = 1 - 1/(sum_{n<=N} q_n + remainder_bound),
/// where remainder_bound >= sum_{n>N} q_n combines a quadrature of the
/// Borel remainder on [0, split_point] (plus its error estimate) with the
/// envelope bound on the tail.
struct PolyaBracket {
    double lower;
    double upper;
    double q_partial_sum;
    double remainder_bound;

    double width() const noexcept { return upper - lower; }
    bool contains(double p) const noexcept { return lower <= p && p <= upper; }
};

PolyaBracket polya_bracket(Dimension d, std::size_t order, const QuadratureConfig& cfg);

} // namespace polya
