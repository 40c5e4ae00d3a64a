#pragma once

// Deterministic quadrature used by the Bessel and Borel-transform modules.
//
// Everything here is built on one 16-point Gauss-Legendre rule:
//   * integrate_doubling    - composite rule, panel count doubled until two
//                             successive values agree to a relative tolerance;
//   * integrate_adaptive    - level-synchronous bisection driven by the
//                             difference between a panel and its two halves;
//   * integrate_to_infinity - adaptive rule after mapping [a, inf) to (0, 1].
//
// The adaptive driver exists as an OpenMP kernel and a serial reference.
// Panels are reduced in index order in both, so the two agree bit for bit.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polya/errors.hpp"

namespace polya {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0; ///< always >= 0
    std::uint64_t evaluations = 0;
};

namespace quad {

inline constexpr int kRuleOrder = 16;

struct Rule {
    std::array<double, kRuleOrder> nodes{};   ///< on [-1, 1]
    std::array<double, kRuleOrder> weights{};
};

/// Gauss-Legendre nodes and weights, computed once by Newton iteration on P_16.
const Rule& gauss_legendre_rule();

template <class F>
double gauss_legendre(const F& f, double a, double b)
{
    const Rule& rule = gauss_legendre_rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < kRuleOrder; ++i)
        acc += rule.weights[static_cast<std::size_t>(i)] *
               f(mid + half * rule.nodes[static_cast<std::size_t>(i)]);
    return acc * half;
}

template <class F>
double composite_gauss_legendre(const F& f, double a, double b, std::size_t panels)
{
    const double h = (b - a) / static_cast<double>(panels);
    double acc = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
        const double lo = a + h * static_cast<double>(i);
        const double hi = (i + 1 == panels) ? b : lo + h;
        acc += gauss_legendre(f, lo, hi);
    }
    return acc;
}

struct DoublingResult {
    QuadratureResult result;
    bool converged = false;
};

/// Composite rule on 1, 2, 4, ... panels until successive values agree to
/// rel_tol, using at most max_nodes abscissae per pass.
template <class F>
DoublingResult integrate_doubling(const F& f, double a, double b, double rel_tol,
                                  std::size_t max_nodes = std::size_t{1} << 14)
{
    DoublingResult out;
    std::size_t panels = 1;
    double prev = composite_gauss_legendre(f, a, b, panels);
    out.result.evaluations = kRuleOrder;
    while ((2 * panels) * kRuleOrder <= max_nodes) {
        panels *= 2;
        const double next = composite_gauss_legendre(f, a, b, panels);
        out.result.evaluations += panels * kRuleOrder;
        const double diff = std::fabs(next - prev);
        prev = next;
        if (diff <= rel_tol * std::fabs(next)) {
            out.result.value = next;
            out.result.error_estimate = diff;
            out.converged = true;
            return out;
        }
        out.result.error_estimate = diff;
    }
    out.result.value = prev;
    return out;
}

struct AdaptiveOptions {
    double abs_tol = 1e-10;
    int max_refinements = 40;
    std::size_t initial_panels = 8;
    std::size_t max_panels = std::size_t{1} << 15;
};

using Integrand = std::function<double(double)>;

/// Bisects panels whose |halves - whole| exceeds their share of abs_tol
/// (proportional to width) until the summed discrepancy is within abs_tol.
/// Throws ToleranceNotMet after max_refinements rounds, or once the panel
/// count reaches max_panels (a tolerance below rounding noise).
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    const AdaptiveOptions& opt = {});

/// integral over [a, inf), a > 0, via t = a / u^2. The integrand must decay
/// at least like t^{-1-eps}, or the mapped integrand is unbounded at u = 0.
QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const AdaptiveOptions& opt = {});

namespace serial {
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    const AdaptiveOptions& opt = {});
QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const AdaptiveOptions& opt = {});
} // namespace serial

} // namespace quad
} // namespace polya
