#include "compavoid/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "compavoid/errors.hpp"

namespace compavoid {

namespace {

// Composition <-> (n-1)-bit mask: bit (n-2-i) set means a cut after the
// (i+1)-th unit. Descending masks give ascending lexicographic order.
void decode(std::uint64_t mask, unsigned n, std::vector<Letter>& parts)
{
    parts.clear();
    Letter run = 1;
    for (unsigned i = 0; i + 1 < n; ++i) {
        if ((mask >> (n - 2 - i)) & 1U) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
}

void check_n(unsigned n)
{
    if (n < 1) {
        throw InvalidParameterError("compositions are enumerated for n >= 1 only");
    }
    if (n > 64) {
        throw InvalidParameterError("enumeration supports n <= 64, got " + std::to_string(n));
    }
}

std::uint64_t mask_count(unsigned n)
{
    return std::uint64_t{1} << (n - 1);
}

} // namespace

CompositionFilter CompositionFilter::avoid_factors(const ForbiddenList& list)
{
    return CompositionFilter(Kind::avoid_factors, list.words(), 0);
}

CompositionFilter CompositionFilter::max_run_below(unsigned r)
{
    if (r < 1) {
        throw InvalidParameterError("max-run-below needs r >= 1");
    }
    return CompositionFilter(Kind::max_run_below, {}, r);
}

bool CompositionFilter::accepts(std::span<const Letter> parts) const
{
    switch (kind_) {
    case Kind::all:
        return true;
    case Kind::max_run_below:
        return longest_run(parts) < r_;
    case Kind::avoid_factors:
        for (const auto& w : words_) {
            const auto f = w.letters();
            if (f.size() > parts.size()) {
                continue;
            }
            for (std::size_t i = 0; i + f.size() <= parts.size(); ++i) {
                if (std::ranges::equal(parts.subspan(i, f.size()), f)) {
                    return false;
                }
            }
        }
        return true;
    }
    return false;
}

unsigned longest_run(std::span<const Letter> parts)
{
    unsigned best = 0;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i + 1;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        best = std::max(best, unsigned(j - i));
        i = j;
    }
    return best;
}

CompositionStream::CompositionStream(unsigned n) : n_(n)
{
    check_n(n);
    mask_ = mask_count(n) - 1;
}

bool CompositionStream::next(std::vector<Letter>& parts)
{
    if (done_) {
        return false;
    }
    decode(mask_, n_, parts);
    if (mask_ == 0) {
        done_ = true;
    } else {
        --mask_;
    }
    return true;
}

std::vector<Word> enumerate_compositions(unsigned n)
{
    std::vector<Word> out;
    CompositionStream stream(n);
    std::vector<Letter> parts;
    while (stream.next(parts)) {
        out.emplace_back(parts);
    }
    return out;
}

BigInt oracle_count(unsigned n, std::optional<unsigned> k, const CompositionFilter& filter,
                    const OracleOptions& options)
{
    check_n(n);
    if (n > options.cap && !options.force) {
        throw EnumerationCapError("refusing to enumerate the 2^" + std::to_string(n - 1) +
                                  " compositions of " + std::to_string(n) + " (cap " +
                                  std::to_string(options.cap) + "); pass --force to override");
    }
    if (k && (*k < 1 || *k > n)) {
        return 0;
    }

    const std::uint64_t total = mask_count(n);
    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = unsigned(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(1, total / 4096)));

    auto count_range = [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t hits = 0;
        std::vector<Letter> parts;
        parts.reserve(n);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (k && unsigned(std::popcount(mask)) + 1 != *k) {
                continue;
            }
            decode(mask, n, parts);
            if (filter.accepts(parts)) {
                ++hits;
            }
        }
        return hits;
    };

    if (threads == 1) {
        return count_range(0, total);
    }
    std::vector<std::uint64_t> partial(threads, 0);
    {
        std::vector<std::jthread> workers;
        const std::uint64_t chunk = total / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = t * chunk;
            const std::uint64_t hi = t + 1 == threads ? total : lo + chunk;
            workers.emplace_back([&, t, lo, hi] { partial[t] = count_range(lo, hi); });
        }
    }
    BigInt sum = 0;
    for (auto p : partial) {
        sum += p;
    }
    return sum;
}

} // namespace compavoid
