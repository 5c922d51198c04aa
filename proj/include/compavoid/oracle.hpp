#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "compavoid/series.hpp"
#include "compavoid/words.hpp"

namespace compavoid {

// Which compositions a brute-force count keeps.
class CompositionFilter {
public:
    enum class Kind { all, avoid_factors, max_run_below };

    static CompositionFilter all() { return CompositionFilter(Kind::all, {}, 0); }
    static CompositionFilter avoid_factors(const ForbiddenList& list);
    // Keeps compositions whose runs are all shorter than r; r >= 1.
    static CompositionFilter max_run_below(unsigned r);

    Kind kind() const noexcept { return kind_; }
    bool accepts(std::span<const Letter> parts) const;

private:
    CompositionFilter(Kind kind, std::vector<Word> words, unsigned r)
        : kind_(kind), words_(std::move(words)), r_(r)
    {
    }

    Kind kind_;
    std::vector<Word> words_;
    unsigned r_;
};

// Longest block of equal adjacent parts; 0 for the empty composition.
unsigned longest_run(std::span<const Letter> parts);

// Yields the 2^{n-1} compositions of n once each, lexicographically by
// parts: for n = 3, (1,1,1), (1,2), (2,1), (3).
class CompositionStream {
public:
    // Throws InvalidParameterError for n < 1 or n > 64.
    explicit CompositionStream(unsigned n);

    // Writes the next composition into `parts`; false once exhausted.
    bool next(std::vector<Letter>& parts);

private:
    unsigned n_;
    std::uint64_t mask_;
    bool done_ = false;
};

std::vector<Word> enumerate_compositions(unsigned n);

struct OracleOptions {
    // Largest n enumerated without `force`.
    unsigned cap = 24;
    bool force = false;
    // 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

// Number of compositions of n with k parts (any number when k is empty) that
// pass the filter. The count is split across worker threads by ranges of the
// enumeration; the total does not depend on the split.
// Throws InvalidParameterError for n < 1 and EnumerationCapError when
// n > options.cap without options.force.
BigInt oracle_count(unsigned n, std::optional<unsigned> k, const CompositionFilter& filter,
                    const OracleOptions& options = {});

} // namespace compavoid
