#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace polya {

/// Philox4x32-10 (Salmon et al., "Parallel random numbers: as easy as 1, 2,
/// 3"). A keyed bijection of a 128-bit counter; stateless apart from what
/// the caller keeps.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter apply(Counter ctr, Key key) noexcept
    {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += 0x9E3779B9u;
                key[1] += 0xBB67AE85u;
            }
            const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }
};

/// Independent stream for one trial: key = seed, counter = (block, trial).
/// Streams for different (seed, trial) pairs never share a counter.
class TrialStream {
public:
    TrialStream(std::uint64_t seed, std::uint64_t trial) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          trial_lo_(static_cast<std::uint32_t>(trial)),
          trial_hi_(static_cast<std::uint32_t>(trial >> 32))
    {
    }

    std::uint32_t next_u32() noexcept
    {
        if (used_ == 4)
            refill();
        return buffer_[used_++];
    }

    std::uint64_t next_u64() noexcept
    {
        const std::uint64_t lo = next_u32();
        return lo | (std::uint64_t{next_u32()} << 32);
    }

    /// Uniform index in [0, n), n >= 2, without modulo or rejection.
    ///
    /// Each draw multiplies a 64-bit fraction by n: the high word is the
    /// digit, the low word is kept for the next draw. A draw clears at most
    /// bit_width(n - 1) low bits, so a word is refreshed once 32 bits are
    /// spent and the bias of every digit stays below n / 2^32.
    int next_below(int n) noexcept
    {
        if (draws_left_ == 0 || n != last_n_) {
            word_ = next_u64();
            last_n_ = n;
            draws_left_ = std::max(1, 32 / static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1))));
        }
        --draws_left_;
        const auto prod = static_cast<unsigned __int128>(word_) * static_cast<unsigned>(n);
        word_ = static_cast<std::uint64_t>(prod);
        return static_cast<int>(prod >> 64);
    }

private:
    void refill() noexcept
    {
        buffer_ = Philox4x32::apply({static_cast<std::uint32_t>(block_),
                                     static_cast<std::uint32_t>(block_ >> 32), trial_lo_,
                                     trial_hi_},
                                    key_);
        ++block_;
        used_ = 0;
    }

    Philox4x32::Key key_;
    std::uint32_t trial_lo_;
    std::uint32_t trial_hi_;
    std::uint64_t block_ = 0;
    Philox4x32::Counter buffer_{};
    unsigned used_ = 4;
    std::uint64_t word_ = 0;
    int draws_left_ = 0;
    int last_n_ = 0;
};

} // namespace polya
