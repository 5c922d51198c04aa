#include "compavoid/runs.hpp"

#include <string>

#include "compavoid/errors.hpp"

namespace compavoid {

namespace {

// 1 - xq/(1-x), the shared part of every denominator.
Series base_denominator(unsigned max_weight)
{
    return Series::one(max_weight) - Series::monomial(max_weight, 1, 1) * Series::geom_x(max_weight);
}

} // namespace

Series carlitz_series(unsigned max_weight)
{
    const unsigned N = max_weight;
    const Series one = Series::one(N);
    Series sum = Series::zero(N);
    for (unsigned j = 1; 2 * j <= N; ++j) {
        sum += Series::monomial(N, 2 * j, 0) * invert(one + Series::monomial(N, j, 1));
    }
    return invert(base_denominator(N) + Series::monomial(N, 0, 2) * sum);
}

Series bounded_run_series(unsigned r, unsigned max_weight)
{
    if (r < 1) {
        throw InvalidParameterError("run bound r must be at least 1, got " + std::to_string(r));
    }
    const unsigned N = max_weight;
    const Series one = Series::one(N);
    Series sum = Series::zero(N);
    for (unsigned j = 1; std::uint64_t(r) * j <= N; ++j) {
        const Series numer = Series::monomial(N, r * j, 0) * (one - Series::monomial(N, j, 1));
        sum += numer * invert(one - Series::monomial(N, r * j, r));
    }
    return invert(base_denominator(N) + Series::monomial(N, 0, r) * sum);
}

BigInt count(unsigned n, unsigned k, unsigned r)
{
    if (k > n) {
        return 0;
    }
    return bounded_run_series(r, n).coefficient(n, k);
}

RunDistribution longest_run_distribution(unsigned n)
{
    if (n < 1) {
        throw InvalidParameterError("longest-run distribution needs n >= 1");
    }
    // below[r] = number of compositions of n with every run shorter than r.
    std::vector<BigInt> below(n + 2);
    for (unsigned r = 1; r <= n + 1; ++r) {
        const Series s = bounded_run_series(r, n);
        for (unsigned k = 0; k <= n; ++k) {
            below[r] += s.coefficient(n, k);
        }
    }

    RunDistribution dist;
    dist.n = n;
    dist.total = below[n + 1];
    BigInt weighted = 0;
    for (unsigned L = 1; L <= n; ++L) {
        BigInt c = below[L + 1] - below[L];
        if (!c.is_zero()) {
            weighted += c * L;
            dist.counts.emplace(L, std::move(c));
        }
    }
    dist.mean = BigRational(weighted, dist.total);
    return dist;
}

} // namespace compavoid
