#include "polya/borel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polya/bessel.hpp"
#include "polya/series.hpp"

namespace polya {

namespace {

constexpr double kPi = std::numbers::pi;

void check_z(double z, Dimension d)
{
    if (!(z >= 0.0 && z <= 1.0))
        throw DomainError("z must lie in [0, 1], got " + std::to_string(z));
    if (z == 1.0 && d.value() <= 2)
        throw DivergentIntegral("Q(1) diverges for d = " + std::to_string(d.value()) +
                                ": the tail integral of t^{-d/2} is infinite");
}

quad::AdaptiveOptions options(const QuadratureConfig& cfg)
{
    quad::AdaptiveOptions opt;
    opt.abs_tol = cfg.abs_tol;
    opt.max_refinements = cfg.max_refinements;
    return opt;
}

quad::Integrand integrand_fn(double z, Dimension d)
{
    return [z, d](double t) { return std::exp(integrand_log(t, z, d)); };
}

template <bool Parallel>
QIntegralParts parts(double z, Dimension d, const QuadratureConfig& cfg)
{
    check_z(z, d);
    const auto f = integrand_fn(z, d);
    const auto opt = options(cfg);
    QIntegralParts out;
    out.dimension = d.value();
    if constexpr (Parallel) {
        out.head = quad::integrate_adaptive(f, 0.0, cfg.split_point, opt);
        out.tail = quad::integrate_to_infinity(f, cfg.split_point, opt);
    }
    else {
        out.head = quad::serial::integrate_adaptive(f, 0.0, cfg.split_point, opt);
        out.tail = quad::serial::integrate_to_infinity(f, cfg.split_point, opt);
    }
    out.tail_bound = tail_upper_bound(z, d, cfg.split_point);
    if (z == 1.0)
        out.asymptotic_tail = asymptotic_constant(d) * *tail_power_integral(cfg.split_point, d);
    return out;
}

QuadratureResult combine(const QIntegralParts& p)
{
    QuadratureResult r;
    r.value = p.head.value + p.tail.value;
    // Each integrand value carries d * kThetaRelTol relative error from the
    // inner theta quadrature; the panel discrepancies do not see it.
    r.error_estimate = p.head.error_estimate + p.tail.error_estimate +
                       p.dimension * kThetaRelTol * std::fabs(r.value);
    r.evaluations = p.head.evaluations + p.tail.evaluations;
    return r;
}

} // namespace

QuadratureConfig::QuadratureConfig(double split, double tol, int refinements)
    : split_point(split), abs_tol(tol), max_refinements(refinements)
{
    if (!(split_point > 0.0))
        throw DomainError("split_point must be positive");
    if (!(abs_tol > 0.0))
        throw DomainError("abs_tol must be positive");
    if (max_refinements < 0)
        throw DomainError("max_refinements must be nonnegative");
}

QuadratureConfig QuadratureConfig::defaults_for(Dimension d)
{
    return QuadratureConfig(std::max(50.0 * d.value(), 200.0));
}

double integrand_log(double t, double z, Dimension d)
{
    if (!(t >= 0.0))
        throw DomainError("integrand_log needs t >= 0");
    if (!(z >= 0.0 && z <= 1.0))
        throw DomainError("integrand_log needs z in [0, 1]");
    const double x = t * z / d.value();
    return d.value() * std::log(i0_scaled(x)) + t * (z - 1.0);
}

double asymptotic_constant(Dimension d)
{
    const double half_d = 0.5 * d.value();
    return std::pow(d.value() / (2.0 * kPi), half_d);
}

double integrand_asymptotic(double t, double z, Dimension d)
{
    if (!(t > 0.0) || !(z > 0.0 && z <= 1.0))
        throw DomainError("integrand_asymptotic needs t > 0 and z in (0, 1]");
    const double half_d = 0.5 * d.value();
    return asymptotic_constant(d) * std::exp(t * (z - 1.0) - half_d * std::log(t * z));
}

std::optional<double> tail_power_integral(double N, Dimension d)
{
    if (!(N > 0.0))
        throw DomainError("tail_power_integral needs N > 0");
    if (d.value() <= 2)
        return std::nullopt;
    const double half_d = 0.5 * d.value();
    return std::pow(N, 1.0 - half_d) / (half_d - 1.0);
}

double envelope_ratio(double N, Dimension d)
{
    const double x = N / d.value();
    return std::pow(std::sqrt(2.0 * kPi * x) * i0_scaled(x), d.value());
}

double tail_upper_bound(double z, Dimension d, double N)
{
    check_z(z, d);
    if (!(N > 0.0))
        throw DomainError("tail_upper_bound needs N > 0");
    if (z == 1.0)
        return envelope_ratio(N, d) * asymptotic_constant(d) * *tail_power_integral(N, d);
    // e^{-x} I_0(x) is decreasing, so its value at the split caps the tail.
    const double scaled = std::pow(i0_scaled(N * z / d.value()), d.value());
    return scaled * std::exp(-(1.0 - z) * N) / (1.0 - z);
}

QIntegralParts q_integral_parts(double z, Dimension d, const QuadratureConfig& cfg)
{
    return parts<true>(z, d, cfg);
}

QuadratureResult q_integral(double z, Dimension d, const QuadratureConfig& cfg)
{
    return combine(parts<true>(z, d, cfg));
}

namespace serial {
QuadratureResult q_integral(double z, Dimension d, const QuadratureConfig& cfg)
{
    return combine(parts<false>(z, d, cfg));
}
} // namespace serial

std::vector<AbelPoint> abel_scan(Dimension d, std::span<const double> zs,
                                 const QuadratureConfig& cfg)
{
    std::vector<AbelPoint> out;
    out.reserve(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (!(zs[i] >= 0.0 && zs[i] < 1.0))
            throw DomainError("abel_scan needs every z in [0, 1)");
        if (i > 0 && !(zs[i] > zs[i - 1]))
            throw DomainError("abel_scan needs strictly ascending z values");
        out.push_back({zs[i], q_integral(zs[i], d, cfg)});
    }
    return out;
}

Classification return_probability(Dimension d, const QuadratureConfig& cfg)
{
    if (!tail_power_integral(cfg.split_point, d).has_value())
        return Classification{WalkKind::Recurrent, std::nullopt, 0.0};
    const auto q = q_integral(1.0, d, cfg);
    const double p = 1.0 - 1.0 / q.value;
    return Classification{WalkKind::Transient, p, q.error_estimate / (q.value * q.value)};
}

Classification return_probability(Dimension d)
{
    return return_probability(d, QuadratureConfig::defaults_for(d));
}

PolyaBracket polya_bracket(Dimension d, std::size_t order, const QuadratureConfig& cfg)
{
    if (d.value() <= 2)
        throw DivergentIntegral("no finite bracket: the walk is recurrent for d <= 2");

    const auto seq = return_sequences(d, order);
    std::vector<double> q(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        q[n] = seq.q[n].get_d();

    // e^{-t} (I_0(t/d)^d - sum_{n<=N} q_n t^n / n!): the Borel image of the
    // missing coefficients. Nonnegative, since every q_n >= 0.
    const quad::Integrand remainder = [&q, d](double t) {
        double truncated = 0.0;
        const double log_t = t > 0.0 ? std::log(t) : -INFINITY;
        for (std::size_t n = 0; n < q.size(); ++n) {
            if (q[n] == 0.0)
                continue;
            const double log_w = n == 0 ? -t : -t + n * log_t - std::lgamma(n + 1.0);
            truncated += q[n] * std::exp(log_w);
        }
        return std::exp(integrand_log(t, 1.0, d)) - truncated;
    };
    const auto head = quad::integrate_adaptive(remainder, 0.0, cfg.split_point, options(cfg));

    PolyaBracket b{};
    b.lower = seq.p.sum().get_d();
    b.q_partial_sum = seq.q.sum().get_d();
    b.remainder_bound = head.value + head.error_estimate + tail_upper_bound(1.0, d, cfg.split_point);
    b.upper = 1.0 - 1.0 / (b.q_partial_sum + b.remainder_bound);
    return b;
}

} // namespace polya
