#pragma once

#include <map>

#include "compavoid/series.hpp"

namespace compavoid {

// sum_{n,k} C(n,k) x^n q^k over Carlitz compositions (no two equal adjacent
// parts), from 1 / (1 - xq/(1-x) + q^2 sum_j x^{2j}/(1+qx^j)). Only the
// summands with 2j <= N can reach the truncated range.
Series carlitz_series(unsigned max_weight);

// sum_{n,k} C(n,k,r) x^n q^k over compositions with every run shorter than r:
// 1 / (1 - xq/(1-x) + q^r sum_j x^{rj}(1-qx^j)/(1-q^r x^{rj})), j <= N/r.
// Throws InvalidParameterError for r < 1.
Series bounded_run_series(unsigned r, unsigned max_weight);

// C(n,k,r). Zero when k > n.
BigInt count(unsigned n, unsigned k, unsigned r);

// Compositions of n tallied by their longest run.
struct RunDistribution {
    unsigned n = 0;
    // Longest-run length L -> number of compositions; only nonzero entries.
    std::map<unsigned, BigInt> counts;
    BigInt total;
    BigRational mean;
};

// Throws InvalidParameterError for n < 1.
RunDistribution longest_run_distribution(unsigned n);

} // namespace compavoid
