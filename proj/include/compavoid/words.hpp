#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compavoid/series.hpp"

namespace compavoid {

using Letter = std::uint32_t;

// Nonempty word over the integers; the weight of letter u is u itself.
//
// Letter 0 is accepted so that binary examples like 110 can be correlated,
// but compositions and forbidden lists require every letter >= 1
// (see is_composition()).
class Word {
public:
    // Throws InvalidWordError on an empty sequence.
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

    // Space-separated integers: "1 1 2".
    static Word parse(std::string_view text);

    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    std::uint64_t weight() const noexcept;
    bool is_composition() const noexcept;

    // True iff `other` occurs as a contiguous block of this word.
    bool contains_factor(const Word& other) const;

    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend Word operator+(const Word& a, const Word& b);

private:
    std::vector<Letter> letters_;
};

// c_0 c_1 ... c_{m-1} where m is the length of the first word.
class CorrelationVector {
public:
    explicit CorrelationVector(std::vector<bool> bits) : bits_(std::move(bits)) {}

    const std::vector<bool>& bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t j) const { return bits_[j]; }
    bool is_zero() const noexcept;
    // "011"
    std::string to_string() const;

    friend bool operator==(const CorrelationVector&, const CorrelationVector&) = default;

private:
    std::vector<bool> bits_;
};

// Correlation of x on y. Align the right ends, shift y left by j places, and
// set c_j when the overlapping letters agree. With m = |x| and t = m - j:
// for t <= |y|, c_j = [prefix_t(x) == suffix_t(y)]; for t > |y| the shifted y
// sits inside x and c_j = [y == x[t-|y|, t)].
CorrelationVector correlation_vector(const Word& x, const Word& y);

// sum_j c_j x^{w(a_{m-j} .. a_{m-1})} q^j where a is the first word; the
// empty suffix has weight 0. Truncated at max_weight.
Series correlation_polynomial(const Word& x, const Word& y, unsigned max_weight);

// True iff no entry is a contiguous factor of another entry. A word is a
// factor of itself, so duplicates make the list non-reduced.
bool is_reduced(std::span<const Word> words);

// A validated reduced list S_1..S_k of compositions.
class ForbiddenList {
public:
    const std::vector<Word>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    // Every off-diagonal correlation vector is all-zero.
    bool easy_case() const noexcept { return easy_case_; }

    // Words joined by ';': "1 1;2 2;3 3".
    std::string to_string() const;

private:
    friend ForbiddenList make_forbidden_list(std::vector<Word> words);
    ForbiddenList(std::vector<Word> words, bool easy) : words_(std::move(words)), easy_case_(easy) {}

    std::vector<Word> words_;
    bool easy_case_;
};

// Throws InvalidWordError for an empty list or a letter 0, and
// ReducednessError naming the first offending pair.
ForbiddenList make_forbidden_list(std::vector<Word> words);

// Parses "1 1;2 2" into words (no validation beyond word syntax).
std::vector<Word> parse_word_list(std::string_view text);

} // namespace compavoid
