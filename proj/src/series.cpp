#include "polya/series.hpp"

#include <algorithm>
#include <cmath>

#include "polya/errors.hpp"
#include "polya/loop_census.hpp"

namespace polya {

RationalSeries::RationalSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw DomainError("a series needs at least the constant coefficient");
}

RationalSeries RationalSeries::times(const RationalSeries& other) const
{
    const std::size_t len = std::min(coeffs_.size(), other.coeffs_.size());
    std::vector<mpq_class> out(len, 0);
    for (std::size_t n = 0; n < len; ++n) {
        mpq_class acc = 0;
        for (std::size_t k = 0; k <= n; ++k)
            acc += coeffs_[k] * other.coeffs_[n - k];
        out[n] = std::move(acc);
    }
    return RationalSeries(std::move(out));
}

mpq_class RationalSeries::sum() const
{
    mpq_class acc = 0;
    for (const auto& c : coeffs_)
        acc += c;
    return acc;
}

namespace {

RationalSeries q_from_loops(Dimension d, std::size_t order)
{
    const auto loops = loop_counts(d, static_cast<unsigned>(order));
    std::vector<mpq_class> q(order + 1);
    mpz_class walks = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        q[n] = mpq_class(loops[n], walks);
        q[n].canonicalize();
        walks *= d.directions();
    }
    return RationalSeries(std::move(q));
}

RationalSeries p_from_q(const RationalSeries& q)
{
    std::vector<mpq_class> p(q.order() + 1, 0);
    for (std::size_t n = 1; n <= q.order(); ++n) {
        mpq_class acc = q[n];
        for (std::size_t k = 1; k < n; ++k)
            acc -= p[k] * q[n - k];
        p[n] = std::move(acc);
    }
    return RationalSeries(std::move(p));
}

} // namespace

RationalSeries q_sequence(Dimension d, std::size_t order)
{
    return q_from_loops(d, order);
}

RationalSeries p_sequence(Dimension d, std::size_t order)
{
    return p_from_q(q_from_loops(d, order));
}

ReturnSequences return_sequences(Dimension d, std::size_t order)
{
    auto q = q_from_loops(d, order);
    auto p = p_from_q(q);
    return ReturnSequences{std::move(q), std::move(p), d};
}

bool verify_fundamental_identity(Dimension d, std::size_t order)
{
    const auto seq = return_sequences(d, order);
    const auto pq = seq.p.times(seq.q);
    for (std::size_t n = 0; n <= order; ++n) {
        const mpq_class rhs = n == 0 ? seq.q[0] - 1 : seq.q[n];
        if (pq[n] != rhs)
            return false;
    }
    return true;
}

mpq_class partial_return_probability(Dimension d, std::size_t order)
{
    return p_sequence(d, order).sum();
}

double ogf_eval(const RationalSeries& s, double z)
{
    if (!(z >= 0.0 && z < 1.0))
        throw DomainError("ogf_eval needs z in [0, 1)");
    const auto& c = s.coefficients();
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + it->get_d();
    return acc;
}

std::string rational_text(const mpq_class& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace polya
