#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "polya/dimension.hpp"

namespace polya {

/// Number of walks of some kind; arbitrary precision, never negative.
class LoopCount {
public:
    LoopCount() = default;
    LoopCount(mpz_class v);
    LoopCount(std::uint64_t v) : LoopCount(mpz_class(static_cast<unsigned long>(v))) {}
    LoopCount(int v) : LoopCount(mpz_class(v)) {}

    const mpz_class& value() const noexcept { return value_; }
    std::string str() const { return value_.get_str(); }

    friend bool operator==(const LoopCount& a, const LoopCount& b) { return a.value_ == b.value_; }
    friend bool operator<(const LoopCount& a, const LoopCount& b) { return a.value_ < b.value_; }
    friend bool operator<=(const LoopCount& a, const LoopCount& b) { return a.value_ <= b.value_; }

private:
    mpz_class value_{0};
};

/// Largest number of step sequences the brute-force oracles will enumerate.
inline constexpr std::uint64_t kEnumerationLimit = 100'000'000;

/// C(2k, k): loops of length 2k on Z.
LoopCount central_binomial(unsigned k);

/// Loops of length n on Z: C(n, n/2) for even n, 0 otherwise.
LoopCount loop_count_1d(unsigned n);

/// Binomial (shuffle) convolution c_n = sum_k C(n,k) a_k b_{n-k}, truncated
/// to the shorter input. Combining the loop rows of Z^a and Z^b this way
/// gives the loop row of Z^(a+b).
std::vector<mpz_class> binomial_convolve(const std::vector<mpz_class>& a,
                                         const std::vector<mpz_class>& b);

/// Loop counts l_0..l_max_n on Z^d, built by d-1 shuffle convolutions
/// against the one-dimensional row.
std::vector<mpz_class> loop_counts(Dimension d, unsigned max_n);

LoopCount loop_count(Dimension d, unsigned n);

/// Indecomposable loop counts r_0..r_max_n (r_0 = 0), obtained by inverting
/// l_n = sum_{k=0}^{n} r_k l_{n-k}.
std::vector<mpz_class> indecomposable_counts(Dimension d, unsigned max_n);

/// r_n for n >= 1. Throws DomainError for n == 0.
LoopCount indecomposable_count(Dimension d, unsigned n);

// Exhaustive oracles. Both throw EnumerationTooLarge when (2d)^n exceeds
// kEnumerationLimit. The parallel kernels split the search over step
// prefixes with OpenMP; the serial versions are the reference.

LoopCount brute_force_loop_count(Dimension d, unsigned n);
LoopCount brute_force_first_return_count(Dimension d, unsigned n);

namespace serial {
LoopCount brute_force_loop_count(Dimension d, unsigned n);
LoopCount brute_force_first_return_count(Dimension d, unsigned n);
} // namespace serial

} // namespace polya
