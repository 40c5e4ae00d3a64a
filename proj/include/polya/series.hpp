#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "polya/dimension.hpp"

namespace polya {

/// Truncated power series sum_{n<=N} c_n z^n with exact rational
/// coefficients. Immutable once built.
class RationalSeries {
public:
    explicit RationalSeries(std::vector<mpq_class> coeffs);

    /// Truncation index N; there are N+1 coefficients.
    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const mpq_class& operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

    /// Cauchy product truncated at the smaller of the two orders.
    RationalSeries times(const RationalSeries& other) const;

    /// Sum of all coefficients, i.e. the truncation evaluated at z = 1.
    mpq_class sum() const;

private:
    std::vector<mpq_class> coeffs_;
};

inline constexpr std::size_t kDefaultSeriesOrder = 64;

/// q_n = l_n / (2d)^n: probability of standing at the origin after n steps.
RationalSeries q_sequence(Dimension d, std::size_t order);

/// p_n: probability of the first return happening at step n. Solved from
/// q_n = sum_k p_k q_{n-k} by forward substitution (q_0 = 1).
RationalSeries p_sequence(Dimension d, std::size_t order);

/// Checks P(z)Q(z) = Q(z) - 1 coefficientwise through the given order.
bool verify_fundamental_identity(Dimension d, std::size_t order);

/// sum_{n<=order} p_n.
mpq_class partial_return_probability(Dimension d, std::size_t order);

/// Floating-point evaluation at z in [0, 1) by Horner's rule.
double ogf_eval(const RationalSeries& s, double z);

/// q and p together, sharing one loop-count computation.
struct ReturnSequences {
    RationalSeries q;
    RationalSeries p;
    Dimension d;
};

ReturnSequences return_sequences(Dimension d, std::size_t order);

/// Always "num/den" in lowest terms, e.g. "0/1", "5/64".
std::string rational_text(const mpq_class& r);

} // namespace polya
