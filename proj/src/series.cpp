#include "compavoid/series.hpp"

#include <string>

#include "compavoid/errors.hpp"

namespace compavoid {

namespace {

// Dense (N+1) x (N+1) scratch table used by mul and invert.
class Grid {
public:
    explicit Grid(unsigned bound) : side_(bound + 1), cells_(std::size_t(side_) * side_) {}

    BigInt& at(unsigned n, unsigned k) { return cells_[std::size_t(n) * side_ + k]; }
    const BigInt& at(unsigned n, unsigned k) const { return cells_[std::size_t(n) * side_ + k]; }

    Series to_series() const
    {
        std::vector<Term> terms;
        for (unsigned n = 0; n < side_; ++n) {
            for (unsigned k = 0; k < side_; ++k) {
                if (!at(n, k).is_zero()) {
                    terms.push_back({{n, k}, at(n, k)});
                }
            }
        }
        return Series::from_terms(side_ - 1, terms);
    }

private:
    unsigned side_;
    std::vector<BigInt> cells_;
};

void require_same_bound(const Series& a, const Series& b, const char* op)
{
    if (a.max_weight() != b.max_weight()) {
        throw BoundMismatchError(std::string("series ") + op + ": truncation bounds differ (" +
                                 std::to_string(a.max_weight()) + " vs " +
                                 std::to_string(b.max_weight()) + ")");
    }
}

} // namespace

Series Series::from_terms(unsigned max_weight, const std::vector<Term>& terms)
{
    Series s(max_weight);
    for (const auto& t : terms) {
        if (t.exp.n > max_weight || t.exp.k > max_weight || t.coeff.is_zero()) {
            continue;
        }
        auto [it, inserted] = s.terms_.try_emplace(t.exp, t.coeff);
        if (!inserted) {
            it->second += t.coeff;
            if (it->second.is_zero()) {
                s.terms_.erase(it);
            }
        }
    }
    return s;
}

Series Series::one(unsigned max_weight)
{
    return constant(max_weight, 1);
}

Series Series::constant(unsigned max_weight, const BigInt& c)
{
    return monomial(max_weight, 0, 0, c);
}

Series Series::monomial(unsigned max_weight, unsigned n, unsigned k, const BigInt& c)
{
    return from_terms(max_weight, {{{n, k}, c}});
}

Series Series::geom_x(unsigned max_weight)
{
    Series s(max_weight);
    for (unsigned n = 0; n <= max_weight; ++n) {
        s.terms_.emplace(Exponent{n, 0}, 1);
    }
    return s;
}

BigInt Series::coefficient(unsigned n, unsigned k) const
{
    if (n > max_weight_ || k > max_weight_) {
        throw OutOfRangeError("coefficient (" + std::to_string(n) + "," + std::to_string(k) +
                              ") lies beyond truncation bound " + std::to_string(max_weight_));
    }
    auto it = terms_.find({n, k});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt Series::constant_term() const
{
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? BigInt(0) : it->second;
}

Series Series::truncate(unsigned bound) const
{
    if (bound > max_weight_) {
        throw OutOfRangeError("cannot truncate a series with bound " + std::to_string(max_weight_) +
                              " to the larger bound " + std::to_string(bound));
    }
    Series s(bound);
    for (const auto& [e, c] : terms_) {
        if (e.n <= bound && e.k <= bound) {
            s.terms_.emplace(e, c);
        }
    }
    return s;
}

Series Series::operator-() const
{
    Series s(*this);
    for (auto& [e, c] : s.terms_) {
        c = -c;
    }
    return s;
}

Series& Series::operator+=(const Series& rhs)
{
    require_same_bound(*this, rhs, "add");
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

Series& Series::operator-=(const Series& rhs)
{
    require_same_bound(*this, rhs, "sub");
    return *this += -rhs;
}

Series& Series::operator*=(const Series& rhs)
{
    *this = *this * rhs;
    return *this;
}

Series operator+(Series a, const Series& b)
{
    a += b;
    return a;
}

Series operator-(Series a, const Series& b)
{
    a -= b;
    return a;
}

Series operator*(const Series& a, const Series& b)
{
    require_same_bound(a, b, "mul");
    const unsigned bound = a.max_weight();
    if (a.is_zero() || b.is_zero()) {
        return Series(bound);
    }
    std::vector<Term> rhs(b.terms().size());
    std::size_t i = 0;
    for (const auto& [e, c] : b.terms()) {
        rhs[i++] = {e, c};
    }

    Grid acc(bound);
    for (const auto& [ea, ca] : a.terms()) {
        // rhs is sorted by n, so stop at the first term that overflows the bound.
        for (const auto& tb : rhs) {
            if (ea.n + tb.exp.n > bound) {
                break;
            }
            if (ea.k + tb.exp.k > bound) {
                continue;
            }
            acc.at(ea.n + tb.exp.n, ea.k + tb.exp.k) += ca * tb.coeff;
        }
    }
    return acc.to_series();
}

Series operator*(const BigInt& c, const Series& s)
{
    return Series::constant(s.max_weight(), c) * s;
}

Series invert(const Series& d)
{
    const BigInt d0 = d.constant_term();
    if (d0 != 1 && d0 != -1) {
        throw NotInvertibleError("series with constant term " + d0.str() +
                                 " has no inverse over the integers");
    }
    const unsigned bound = d.max_weight();

    std::vector<Term> tail;
    for (const auto& [e, c] : d.terms()) {
        if (e.n != 0 || e.k != 0) {
            tail.push_back({e, c});
        }
    }

    // d0 f(n,k) = [n=k=0] - sum_{(a,b) != 0} d(a,b) f(n-a,k-b), and 1/d0 == d0.
    Grid f(bound);
    for (unsigned n = 0; n <= bound; ++n) {
        for (unsigned k = 0; k <= bound; ++k) {
            BigInt s = (n == 0 && k == 0) ? 1 : 0;
            for (const auto& t : tail) {
                if (t.exp.n > n) {
                    break;
                }
                if (t.exp.k > k) {
                    continue;
                }
                const BigInt& prev = f.at(n - t.exp.n, k - t.exp.k);
                if (!prev.is_zero()) {
                    s -= t.coeff * prev;
                }
            }
            f.at(n, k) = d0 * s;
        }
    }
    return f.to_series();
}

} // namespace compavoid
