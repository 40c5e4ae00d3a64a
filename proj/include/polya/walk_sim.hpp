#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polya/dimension.hpp"
#include "polya/philox.hpp"

namespace polya {

struct WalkConfig {
    Dimension d;
    std::uint64_t horizon; ///< maximum steps per trial, >= 2
    std::uint64_t trials;  ///< >= 1
    std::uint64_t seed;

    WalkConfig(Dimension d_, std::uint64_t horizon_, std::uint64_t trials_, std::uint64_t seed_);
};

/// Empirical return probability. p_hat only counts returns within the
/// horizon, so it estimates a lower bound on the true p.
struct McEstimate {
    double p_hat;
    double ci_low;  ///< Wilson 95%
    double ci_high; ///< Wilson 95%
    std::uint64_t returns;
    std::uint64_t trials;
    std::uint64_t horizon;

    bool covers(double p) const noexcept { return ci_low <= p && p <= ci_high; }
};

struct Interval {
    double low;
    double high;
};

/// Wilson score interval for `successes` out of `trials` at 95%.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials);

/// Lattice position with an O(1) at-origin test.
class LatticeWalker {
public:
    explicit LatticeWalker(Dimension d) : pos_(static_cast<std::size_t>(d.value()), 0) {}

    /// Direction 2a is +e_a and 2a+1 is -e_a.
    void step(int dir) noexcept
    {
        std::int64_t& c = pos_[static_cast<std::size_t>(dir >> 1)];
        const bool was_zero = c == 0;
        c += (dir & 1) ? -1 : 1;
        nonzero_ += static_cast<int>(was_zero) - static_cast<int>(c == 0);
    }

    bool at_origin() const noexcept { return nonzero_ == 0; }
    const std::vector<std::int64_t>& position() const noexcept { return pos_; }

private:
    std::vector<std::int64_t> pos_;
    int nonzero_ = 0;
};

/// First n in [1, horizon] with the walk back at the origin. `source` must
/// provide `int next_below(int)`, returning a direction in [0, 2d).
template <class Source>
std::optional<std::uint64_t> first_return_time(Dimension d, std::uint64_t horizon, Source& source)
{
    LatticeWalker walker(d);
    const int dirs = d.directions();
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        walker.step(source.next_below(dirs));
        if (walker.at_origin())
            return n;
    }
    return std::nullopt;
}

/// Trial-level helpers: trial i always draws from TrialStream(seed, i).
std::optional<std::uint64_t> trial_first_return(const WalkConfig& cfg, std::uint64_t trial);
bool trial_at_origin(const WalkConfig& cfg, std::uint64_t trial, std::uint64_t n);

McEstimate estimate_return_probability(const WalkConfig& cfg);

/// Fraction of trials standing at the origin after exactly n steps (n <= horizon).
double empirical_occupancy(const WalkConfig& cfg, std::uint64_t n);

/// Histogram of first-return times 1..max_n (index 0 unused) over all trials.
std::vector<std::uint64_t> first_return_histogram(const WalkConfig& cfg, std::uint64_t max_n);

namespace serial {
McEstimate estimate_return_probability(const WalkConfig& cfg);
double empirical_occupancy(const WalkConfig& cfg, std::uint64_t n);
} // namespace serial

} // namespace polya
