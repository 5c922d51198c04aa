#pragma once

#include <vector>

#include "compavoid/series.hpp"
#include "compavoid/words.hpp"

namespace compavoid {

using SeriesMatrix = std::vector<std::vector<Series>>;

// Linear system whose first unknown is the avoidance generating function
// F(x,q) of a forbidden list S_1..S_k over the positive-integer alphabet:
//
//   row 0:  1-x(1+q)      1-x        ...  1-x         | 1-x
//   row i:  x^w(S_i)q^l(S_i)  -c_{i1}(x,q) ... -c_{ik}(x,q) | 0
//
// where c_{ij} is the correlation polynomial of S_i on S_j.
struct HkSystem {
    ForbiddenList list;
    unsigned max_weight = 0;
    SeriesMatrix matrix;
    std::vector<Series> rhs;

    std::size_t dimension() const noexcept { return rhs.size(); }
};

HkSystem build_system(const ForbiddenList& list, unsigned max_weight);

// Gaussian elimination over the truncated ring, dividing only by unit pivots.
// Columns are processed in natural order; the pivot is the first row at or
// below the diagonal whose entry has constant term +-1. Throws PivotError if
// a column has none.
Series solve_f(const HkSystem& system);

// First unknown of a system whose only nonzero entries are in the first row,
// the first column, and the diagonal:
//   x_1 = r_0 / (b_00 - sum_j b_0j b_j0 / b_jj).
// Throws NotEasyCaseError when an off-diagonal entry outside row/column 0 is
// nonzero.
Series sparse_first_component(const HkSystem& system);

// 1 / (1 - qx/(1-x) + sum_j x^w(S_j) q^l(S_j) / c_jj(x,q)).
// Throws NotEasyCaseError unless list.easy_case().
Series easy_case_series(const ForbiddenList& list, unsigned max_weight);

} // namespace compavoid
