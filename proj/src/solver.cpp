#include "compavoid/solver.hpp"

#include <string>

#include "compavoid/errors.hpp"

namespace compavoid {

namespace {

bool is_unit(const Series& s)
{
    const BigInt c = s.constant_term();
    return c == 1 || c == -1;
}

Series word_monomial(const Word& w, unsigned max_weight)
{
    // Words heavier than the bound contribute nothing below it.
    if (w.weight() > max_weight || w.length() > max_weight) {
        return Series::zero(max_weight);
    }
    return Series::monomial(max_weight, unsigned(w.weight()), unsigned(w.length()));
}

} // namespace

HkSystem build_system(const ForbiddenList& list, unsigned max_weight)
{
    const std::size_t k = list.size();
    const Series one = Series::one(max_weight);
    const Series x = Series::monomial(max_weight, 1, 0);
    const Series xq = Series::monomial(max_weight, 1, 1);

    SeriesMatrix m(k + 1, std::vector<Series>(k + 1, Series::zero(max_weight)));
    m[0][0] = one - x - xq;
    for (std::size_t j = 1; j <= k; ++j) {
        m[0][j] = one - x;
    }
    const auto& words = list.words();
    for (std::size_t i = 1; i <= k; ++i) {
        m[i][0] = word_monomial(words[i - 1], max_weight);
        for (std::size_t j = 1; j <= k; ++j) {
            m[i][j] = -correlation_polynomial(words[i - 1], words[j - 1], max_weight);
        }
    }

    std::vector<Series> rhs(k + 1, Series::zero(max_weight));
    rhs[0] = one - x;
    return HkSystem{list, max_weight, std::move(m), std::move(rhs)};
}

Series solve_f(const HkSystem& system)
{
    SeriesMatrix a = system.matrix;
    std::vector<Series> b = system.rhs;
    const std::size_t dim = system.dimension();

    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (pivot < dim && !is_unit(a[pivot][col])) {
            ++pivot;
        }
        if (pivot == dim) {
            throw PivotError("no unit pivot in column " + std::to_string(col) +
                             " for list \"" + system.list.to_string() + "\"");
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        const Series inv = invert(a[col][col]);
        for (std::size_t row = col + 1; row < dim; ++row) {
            if (a[row][col].is_zero()) {
                continue;
            }
            const Series factor = a[row][col] * inv;
            for (std::size_t j = col; j < dim; ++j) {
                if (!a[col][j].is_zero()) {
                    a[row][j] -= factor * a[col][j];
                }
            }
            b[row] -= factor * b[col];
        }
    }

    std::vector<Series> sol(dim, Series::zero(system.max_weight));
    for (std::size_t i = dim; i-- > 0;) {
        Series acc = b[i];
        for (std::size_t j = i + 1; j < dim; ++j) {
            if (!a[i][j].is_zero()) {
                acc -= a[i][j] * sol[j];
            }
        }
        sol[i] = acc * invert(a[i][i]);
    }
    return sol[0];
}

Series sparse_first_component(const HkSystem& system)
{
    const auto& b = system.matrix;
    const std::size_t dim = system.dimension();
    for (std::size_t i = 1; i < dim; ++i) {
        for (std::size_t j = 1; j < dim; ++j) {
            if (i != j && !b[i][j].is_zero()) {
                throw NotEasyCaseError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") is nonzero; the first-row reduction does not apply");
            }
        }
    }
    Series denom = b[0][0];
    for (std::size_t j = 1; j < dim; ++j) {
        denom -= b[0][j] * b[j][0] * invert(b[j][j]);
    }
    return system.rhs[0] * invert(denom);
}

Series easy_case_series(const ForbiddenList& list, unsigned max_weight)
{
    if (!list.easy_case()) {
        throw NotEasyCaseError("list \"" + list.to_string() +
                               "\" has overlapping distinct words; use the full system");
    }
    const Series xq = Series::monomial(max_weight, 1, 1);
    Series denom = Series::one(max_weight) - xq * Series::geom_x(max_weight);
    for (const auto& w : list.words()) {
        const Series lead = word_monomial(w, max_weight);
        if (lead.is_zero()) {
            continue;
        }
        denom += lead * invert(correlation_polynomial(w, w, max_weight));
    }
    return invert(denom);
}

} // namespace compavoid
