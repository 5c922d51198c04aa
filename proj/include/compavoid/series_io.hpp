#pragma once

#include <string>
#include <string_view>

#include "compavoid/series.hpp"

namespace compavoid {

// Polynomial in x with q-polynomial coefficients, ascending in n then k:
// "1+qx+qx^2+(q+2q^2)x^3". A unit coefficient is suppressed before a
// variable. The zero series renders as "0".
std::string render_text(const Series& s);

// Ordered by k, then n, each monomial written x^n q^k: "1+x^2q+x^4q^2".
// This is the natural display for correlation polynomials.
std::string render_by_length(const Series& s);

// Header "n,k,coefficient" followed by one row per nonzero term.
std::string to_csv(const Series& s);

// {"max_weight":N,"terms":[{"n":..,"k":..,"c":".."}]}, coefficients as
// decimal strings, terms ascending in (n,k).
std::string to_json(const Series& s);

// Inverse of to_json; throws ParseError on malformed input.
Series from_json(std::string_view text);

} // namespace compavoid
