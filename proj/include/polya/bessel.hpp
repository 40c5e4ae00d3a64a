#pragma once

#include "polya/errors.hpp"

namespace polya {

/// Order of I_alpha. Only integers and half-integers are accepted, so that
/// every Gamma(k + alpha + 1) in the series has a closed form.
class BesselOrder {
public:
    explicit BesselOrder(double alpha);

    static BesselOrder integer(int n) { return BesselOrder(static_cast<double>(n)); }
    static BesselOrder half_integer(int twice_alpha) { return BesselOrder(0.5 * twice_alpha); }

    double value() const noexcept { return 0.5 * twice_; }
    int twice() const noexcept { return twice_; }
    bool is_integer() const noexcept { return twice_ % 2 == 0; }

private:
    int twice_;
};

/// Gamma(x) for x a positive integer or half-integer.
double gamma_integer_or_half(double x);

/// sum_k (x/2)^{2k+alpha} / (k! Gamma(k+alpha+1)). Stops once the next term
/// is below tol * sum; throws NonConvergence after kMaxSeriesTerms terms.
double i_alpha_series(BesselOrder alpha, double x, double tol = 1e-17);

inline constexpr int kMaxSeriesTerms = 1000;

/// Successive composite Gauss-Legendre passes over theta must agree to
/// this relative tolerance in i0_integral and i0_scaled.
inline constexpr double kThetaRelTol = 1e-12;

/// Arguments above this overflow e^{x cos(theta)} in the unscaled integrand.
inline constexpr double kUnscaledLimit = 700.0;

/// (1/pi) * integral_0^pi e^{x cos(theta)} dtheta. Throws OverflowRisk when
/// x > kUnscaledLimit.
double i0_integral(double x);

/// e^{-x} I_0(x) = (1/pi) * integral_0^pi e^{-2x sin^2(theta/2)} dtheta.
/// The integrand lies in (0, 1], so this is usable for any x >= 0.
double i0_scaled(double x);

/// I_0(x): series up to kSeriesCrossover, scaled integral above it.
/// Overflows to +inf past x ~ 713; use i0_log there.
double i0(double x);
double i0_log(double x);

inline constexpr double kSeriesCrossover = 20.0;

/// Leading Laplace term e^x / sqrt(2 pi x).
double i0_asymptotic(double x);
double i0_asymptotic_log(double x);

/// integral_0^inf e^{-t c theta^2 / 2} dtheta = sqrt(pi / (2 t c)).
double gaussian_half_integral(double c, double t);

/// Inputs of the endpoint Laplace estimate for integral_0^pi e^{t f(theta)}
/// with the maximum of f at theta = 0.
struct LaplaceEstimate {
    double f0; ///< f(0)
    double f2; ///< |f''(0)|, > 0
    double t;  ///< large parameter, > 0

    LaplaceEstimate(double f0_, double f2_, double t_);
};

/// e^{t f0} sqrt(pi / (2 t f2)).
double laplace_endpoint_estimate(const LaplaceEstimate& e);
double laplace_endpoint_estimate_log(const LaplaceEstimate& e);

} // namespace polya
