#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace compavoid {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exponent pair of a monomial x^n q^k: n tracks weight, k tracks length.
struct Exponent {
    unsigned n = 0;
    unsigned k = 0;

    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

struct Term {
    Exponent exp;
    BigInt coeff;
};

// Truncated bivariate formal power series over the integers.
//
// Only monomials x^n q^k with n <= max_weight and k <= max_weight are kept;
// everything above is discarded by every operation. Monomials with a large
// exponent form an ideal, so the truncated ring is still associative and
// commutative. Counting series live in the k <= n triangle, where the bound on
// k never bites.
//
// Storage is sparse and canonical: no explicit zero cells. Two series compare
// equal iff they have the same bound and the same nonzero coefficients.
// Operations are pure; values share no state and may cross threads freely.
class Series {
public:
    using TermMap = std::map<Exponent, BigInt>;

    explicit Series(unsigned max_weight = 0) : max_weight_(max_weight) {}

    // Sums duplicate exponents, drops zeros and anything beyond the bound.
    static Series from_terms(unsigned max_weight, const std::vector<Term>& terms);

    static Series zero(unsigned max_weight) { return Series(max_weight); }
    static Series one(unsigned max_weight);
    static Series constant(unsigned max_weight, const BigInt& c);
    // c x^n q^k, or zero when the monomial lies beyond the bound.
    static Series monomial(unsigned max_weight, unsigned n, unsigned k, const BigInt& c = 1);
    // 1 + x + x^2 + ... + x^N.
    static Series geom_x(unsigned max_weight);

    unsigned max_weight() const noexcept { return max_weight_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Throws OutOfRangeError when n or k exceeds max_weight.
    BigInt coefficient(unsigned n, unsigned k) const;
    // Coefficient at (0,0); never out of range.
    BigInt constant_term() const;

    // Drops every monomial with an exponent above `bound` (bound <= max_weight).
    Series truncate(unsigned bound) const;

    Series operator-() const;
    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Series& rhs);

    friend bool operator==(const Series&, const Series&) = default;

private:
    unsigned max_weight_;
    TermMap terms_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const BigInt& c, const Series& s);

// Multiplicative inverse in the truncated ring. The constant term must be +1
// or -1; otherwise NotInvertibleError.
Series invert(const Series& d);

} // namespace compavoid
