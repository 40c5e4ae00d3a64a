#include "polya/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polya/quadrature.hpp"

namespace polya {

namespace {

constexpr double kPi = std::numbers::pi;

// Beyond theta = kThetaCutoff / sqrt(x), e^{-2x sin^2(theta/2)} < e^{-81};
// the scaled integral is restricted to that window for large x.
constexpr double kThetaCutoff = 20.0;

void require_nonnegative(double x, const char* what)
{
    if (!(x >= 0.0))
        throw DomainError(std::string(what) + " needs x >= 0, got " + std::to_string(x));
}

double theta_integral(const auto& integrand, double upper, double x)
{
    const auto r = quad::integrate_doubling(integrand, 0.0, upper, kThetaRelTol);
    if (!r.converged)
        throw NonConvergence("theta quadrature did not settle for x = " + std::to_string(x));
    return r.result.value / kPi;
}

} // namespace

BesselOrder::BesselOrder(double alpha) : twice_(0)
{
    const double twice = 2.0 * alpha;
    if (!(alpha >= 0.0) || twice != std::floor(twice) || twice > 1e6)
        throw DomainError("Bessel order must be a nonnegative integer or half-integer, got " +
                          std::to_string(alpha));
    twice_ = static_cast<int>(twice);
}

double gamma_integer_or_half(double x)
{
    const double twice = 2.0 * x;
    if (!(x > 0.0) || twice != std::floor(twice))
        throw DomainError("gamma_integer_or_half needs a positive integer or half-integer");
    double g;
    double arg;
    if (static_cast<long>(twice) % 2 == 0) {
        g = 1.0; // Gamma(1)
        arg = 1.0;
    }
    else {
        g = std::sqrt(kPi); // Gamma(1/2)
        arg = 0.5;
    }
    while (arg < x) {
        g *= arg;
        arg += 1.0;
    }
    return g;
}

double i_alpha_series(BesselOrder alpha, double x, double tol)
{
    require_nonnegative(x, "i_alpha_series");
    if (!(tol > 0.0))
        throw DomainError("i_alpha_series needs tol > 0");

    const double a = alpha.value();
    const double half = 0.5 * x;
    const double quarter_sq = half * half;
    double term = std::pow(half, a) / gamma_integer_or_half(a + 1.0);
    double sum = term;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        if (sum == 0.0)
            return 0.0;
        const double next = term * quarter_sq / ((k + 1.0) * (k + 1.0 + a));
        if (next < tol * sum)
            return sum;
        sum += next;
        term = next;
        if (!std::isfinite(sum))
            break;
    }
    throw NonConvergence("I_alpha series did not converge for x = " + std::to_string(x));
}

double i0_integral(double x)
{
    require_nonnegative(x, "i0_integral");
    if (x > kUnscaledLimit)
        throw OverflowRisk("i0_integral: x = " + std::to_string(x) +
                           " overflows the unscaled integrand; use i0_scaled");
    return theta_integral([x](double theta) { return std::exp(x * std::cos(theta)); }, kPi, x);
}

double i0_scaled(double x)
{
    require_nonnegative(x, "i0_scaled");
    if (x == 0.0)
        return 1.0;
    const double upper = std::min(kPi, kThetaCutoff / std::sqrt(x));
    return theta_integral(
        [x](double theta) {
            const double s = std::sin(0.5 * theta);
            return std::exp(-2.0 * x * s * s);
        },
        upper, x);
}

double i0(double x)
{
    require_nonnegative(x, "i0");
    if (x <= kSeriesCrossover)
        return i_alpha_series(BesselOrder::integer(0), x);
    return std::exp(x) * i0_scaled(x);
}

double i0_log(double x)
{
    require_nonnegative(x, "i0_log");
    if (x <= kSeriesCrossover)
        return std::log(i_alpha_series(BesselOrder::integer(0), x));
    return x + std::log(i0_scaled(x));
}

double i0_asymptotic_log(double x)
{
    if (!(x > 0.0))
        throw DomainError("i0_asymptotic needs x > 0");
    return x - 0.5 * std::log(2.0 * kPi * x);
}

double i0_asymptotic(double x)
{
    return std::exp(i0_asymptotic_log(x));
}

double gaussian_half_integral(double c, double t)
{
    if (!(c > 0.0) || !(t > 0.0))
        throw DomainError("gaussian_half_integral needs c > 0 and t > 0");
    return std::sqrt(kPi / (2.0 * t * c));
}

LaplaceEstimate::LaplaceEstimate(double f0_, double f2_, double t_) : f0(f0_), f2(f2_), t(t_)
{
    if (!(f2 > 0.0) || !(t > 0.0))
        throw DomainError("LaplaceEstimate needs |f''(0)| > 0 and t > 0");
}

double laplace_endpoint_estimate_log(const LaplaceEstimate& e)
{
    return e.t * e.f0 + std::log(gaussian_half_integral(e.f2, e.t));
}

double laplace_endpoint_estimate(const LaplaceEstimate& e)
{
    return std::exp(e.t * e.f0) * gaussian_half_integral(e.f2, e.t);
}

} // namespace polya
