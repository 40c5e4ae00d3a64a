#include "polya/loop_census.hpp"

#include <algorithm>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polya {

LoopCount::LoopCount(mpz_class v) : value_(std::move(v))
{
    if (sgn(value_) < 0)
        throw DomainError("negative loop count " + value_.get_str());
}

LoopCount central_binomial(unsigned k)
{
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2UL * k, k);
    return LoopCount(c);
}

LoopCount loop_count_1d(unsigned n)
{
    if (n % 2 != 0)
        return LoopCount(0);
    return central_binomial(n / 2);
}

namespace {

std::vector<mpz_class> one_dimensional_row(unsigned max_n)
{
    std::vector<mpz_class> row(max_n + 1, 0);
    for (unsigned n = 0; n <= max_n; n += 2)
        row[n] = loop_count_1d(n).value();
    return row;
}

// Pascal row n of binomial coefficients, reused across one convolution.
std::vector<mpz_class> pascal_row(unsigned n)
{
    std::vector<mpz_class> row(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        mpz_bin_uiui(row[k].get_mpz_t(), n, k);
    return row;
}

} // namespace

std::vector<mpz_class> binomial_convolve(const std::vector<mpz_class>& a,
                                         const std::vector<mpz_class>& b)
{
    const std::size_t len = std::min(a.size(), b.size());
    std::vector<mpz_class> out(len, 0);
    for (std::size_t n = 0; n < len; ++n) {
        const auto binom = pascal_row(static_cast<unsigned>(n));
        mpz_class acc = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            if (sgn(a[k]) == 0 || sgn(b[n - k]) == 0)
                continue;
            acc += binom[k] * a[k] * b[n - k];
        }
        out[n] = std::move(acc);
    }
    return out;
}

std::vector<mpz_class> loop_counts(Dimension d, unsigned max_n)
{
    const auto base = one_dimensional_row(max_n);
    auto row = base;
    for (int i = 1; i < d.value(); ++i)
        row = binomial_convolve(base, row);
    return row;
}

LoopCount loop_count(Dimension d, unsigned n)
{
    return LoopCount(loop_counts(d, n)[n]);
}

std::vector<mpz_class> indecomposable_counts(Dimension d, unsigned max_n)
{
    const auto loops = loop_counts(d, max_n);
    std::vector<mpz_class> r(max_n + 1, 0);
    for (unsigned n = 1; n <= max_n; ++n) {
        mpz_class acc = loops[n];
        for (unsigned k = 1; k < n; ++k)
            acc -= r[k] * loops[n - k];
        r[n] = std::move(acc);
    }
    return r;
}

LoopCount indecomposable_count(Dimension d, unsigned n)
{
    if (n == 0)
        throw DomainError("indecomposable_count requires n >= 1");
    return LoopCount(indecomposable_counts(d, n)[n]);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

namespace {

void check_enumeration_size(Dimension d, unsigned n)
{
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(d.directions());
        if (total > kEnumerationLimit)
            throw EnumerationTooLarge("(2d)^n = " + std::to_string(d.directions()) + "^" +
                                      std::to_string(n) + " exceeds the enumeration limit");
    }
}

class WalkEnumerator {
public:
    WalkEnumerator(int d, unsigned n, bool first_return)
        : pos_(static_cast<std::size_t>(d), 0), n_(n), first_return_(first_return)
    {
    }

    // Plays the step prefix encoded in base 2d by `code`. Returns false if
    // the prefix already violates the first-return condition.
    bool play_prefix(std::uint64_t code, unsigned len)
    {
        const auto dirs = static_cast<std::uint64_t>(2 * pos_.size());
        for (unsigned i = 0; i < len; ++i) {
            move(static_cast<int>(code % dirs));
            code /= dirs;
            if (first_return_ && nonzero_ == 0 && i + 1 < n_)
                return false;
        }
        return true;
    }

    std::uint64_t count(unsigned step)
    {
        if (step == n_)
            return nonzero_ == 0 ? 1 : 0;
        std::uint64_t total = 0;
        const int dirs = static_cast<int>(2 * pos_.size());
        for (int dir = 0; dir < dirs; ++dir) {
            move(dir);
            if (!(first_return_ && nonzero_ == 0 && step + 1 < n_))
                total += count(step + 1);
            move(dir ^ 1);
        }
        return total;
    }

private:
    // Direction 2a is +e_a, 2a+1 is -e_a; dir ^ 1 undoes dir.
    void move(int dir)
    {
        int& c = pos_[static_cast<std::size_t>(dir >> 1)];
        const int before = c;
        c += (dir & 1) ? -1 : 1;
        nonzero_ += (before == 0) - (c == 0);
    }

    std::vector<int> pos_;
    int nonzero_ = 0;
    unsigned n_;
    bool first_return_;
};

std::uint64_t enumerate_serial(Dimension d, unsigned n, bool first_return)
{
    check_enumeration_size(d, n);
    if (n == 0)
        return first_return ? 0 : 1;
    WalkEnumerator walker(d.value(), n, first_return);
    return walker.count(0);
}

std::uint64_t enumerate_parallel(Dimension d, unsigned n, bool first_return)
{
    check_enumeration_size(d, n);
    if (n == 0)
        return first_return ? 0 : 1;

    // Enough prefixes to keep every thread busy, never longer than the walk.
    unsigned prefix_len = 0;
    std::uint64_t prefixes = 1;
    while (prefix_len < n && prefixes < 256) {
        prefixes *= static_cast<std::uint64_t>(d.directions());
        ++prefix_len;
    }

    std::uint64_t total = 0;
    const auto count = static_cast<std::int64_t>(prefixes);
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (std::int64_t code = 0; code < count; ++code) {
        WalkEnumerator walker(d.value(), n, first_return);
        if (walker.play_prefix(static_cast<std::uint64_t>(code), prefix_len))
            total += walker.count(prefix_len);
    }
    return total;
}

void require_positive_length(unsigned n)
{
    if (n == 0)
        throw DomainError("first-return counts require n >= 1");
}

} // namespace

LoopCount brute_force_loop_count(Dimension d, unsigned n)
{
    return LoopCount(enumerate_parallel(d, n, false));
}

LoopCount brute_force_first_return_count(Dimension d, unsigned n)
{
    require_positive_length(n);
    return LoopCount(enumerate_parallel(d, n, true));
}

namespace serial {

LoopCount brute_force_loop_count(Dimension d, unsigned n)
{
    return LoopCount(enumerate_serial(d, n, false));
}

LoopCount brute_force_first_return_count(Dimension d, unsigned n)
{
    require_positive_length(n);
    return LoopCount(enumerate_serial(d, n, true));
}

} // namespace serial

} // namespace polya
