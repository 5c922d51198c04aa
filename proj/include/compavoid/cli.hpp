#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "compavoid/series.hpp"

namespace compavoid::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    internal_error = 2,
};

// Runs one command. `args` excludes the program name. Data goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// numerator / 2^exponent as an exact terminating decimal ("0.75", "1").
std::string binary_fraction_decimal(const BigInt& numerator, unsigned exponent);

} // namespace compavoid::cli
