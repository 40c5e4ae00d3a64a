#include "polya/walk_sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace polya {

namespace {

constexpr double kZ95 = 1.959963984540054;

// Same walk as first_return_time, with the coordinates in a fixed-size
// array; this is the hot loop of every Monte Carlo run.
template <int D>
std::optional<std::uint64_t> first_return_fixed(std::uint64_t horizon, TrialStream& stream)
{
    std::array<std::int64_t, D> pos{};
    int nonzero = 0;
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        const int dir = stream.next_below(2 * D);
        std::int64_t& c = pos[static_cast<std::size_t>(dir >> 1)];
        const bool was_zero = c == 0;
        c += (dir & 1) ? -1 : 1;
        nonzero += static_cast<int>(was_zero) - static_cast<int>(c == 0);
        if (nonzero == 0)
            return n;
    }
    return std::nullopt;
}

template <bool Parallel>
std::uint64_t count_returns(const WalkConfig& cfg)
{
    std::uint64_t returns = 0;
    const auto trials = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : returns) if (Parallel)
    for (std::int64_t i = 0; i < trials; ++i)
        returns += trial_first_return(cfg, static_cast<std::uint64_t>(i)).has_value() ? 1 : 0;
    return returns;
}

template <bool Parallel>
double occupancy(const WalkConfig& cfg, std::uint64_t n)
{
    if (n > cfg.horizon)
        throw DomainError("occupancy step " + std::to_string(n) + " exceeds the horizon");
    std::uint64_t hits = 0;
    const auto trials = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(static) reduction(+ : hits) if (Parallel)
    for (std::int64_t i = 0; i < trials; ++i)
        hits += trial_at_origin(cfg, static_cast<std::uint64_t>(i), n) ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(cfg.trials);
}

McEstimate make_estimate(const WalkConfig& cfg, std::uint64_t returns)
{
    const auto ci = wilson_interval(returns, cfg.trials);
    return McEstimate{static_cast<double>(returns) / static_cast<double>(cfg.trials),
                      ci.low,
                      ci.high,
                      returns,
                      cfg.trials,
                      cfg.horizon};
}

} // namespace

WalkConfig::WalkConfig(Dimension d_, std::uint64_t horizon_, std::uint64_t trials_,
                       std::uint64_t seed_)
    : d(d_), horizon(horizon_), trials(trials_), seed(seed_)
{
    if (horizon < 2)
        throw DomainError("horizon must be >= 2");
    if (trials < 1)
        throw DomainError("trials must be >= 1");
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials)
{
    if (trials == 0 || successes > trials)
        throw DomainError("wilson_interval needs 0 <= successes <= trials, trials > 0");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = kZ95 / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    // The interval always contains p; the clamps only absorb rounding.
    return Interval{std::clamp(std::min(center - half, p), 0.0, 1.0),
                    std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

std::optional<std::uint64_t> trial_first_return(const WalkConfig& cfg, std::uint64_t trial)
{
    TrialStream stream(cfg.seed, trial);
    switch (cfg.d.value()) {
    case 1: return first_return_fixed<1>(cfg.horizon, stream);
    case 2: return first_return_fixed<2>(cfg.horizon, stream);
    case 3: return first_return_fixed<3>(cfg.horizon, stream);
    case 4: return first_return_fixed<4>(cfg.horizon, stream);
    default: return first_return_time(cfg.d, cfg.horizon, stream);
    }
}

bool trial_at_origin(const WalkConfig& cfg, std::uint64_t trial, std::uint64_t n)
{
    TrialStream stream(cfg.seed, trial);
    LatticeWalker walker(cfg.d);
    const int dirs = cfg.d.directions();
    for (std::uint64_t i = 0; i < n; ++i)
        walker.step(stream.next_below(dirs));
    return walker.at_origin();
}

McEstimate estimate_return_probability(const WalkConfig& cfg)
{
    return make_estimate(cfg, count_returns<true>(cfg));
}

double empirical_occupancy(const WalkConfig& cfg, std::uint64_t n)
{
    return occupancy<true>(cfg, n);
}

std::vector<std::uint64_t> first_return_histogram(const WalkConfig& cfg, std::uint64_t max_n)
{
    std::vector<std::uint64_t> hist(max_n + 1, 0);
    const std::uint64_t horizon = std::min(max_n, cfg.horizon);
    for (std::uint64_t i = 0; i < cfg.trials; ++i) {
        TrialStream stream(cfg.seed, i);
        if (const auto n = first_return_time(cfg.d, horizon, stream))
            ++hist[*n];
    }
    return hist;
}

namespace serial {

McEstimate estimate_return_probability(const WalkConfig& cfg)
{
    return make_estimate(cfg, count_returns<false>(cfg));
}

double empirical_occupancy(const WalkConfig& cfg, std::uint64_t n)
{
    return occupancy<false>(cfg, n);
}

} // namespace serial

} // namespace polya
