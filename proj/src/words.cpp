#include "compavoid/words.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "compavoid/errors.hpp"

namespace compavoid {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters))
{
    if (letters_.empty()) {
        throw InvalidWordError("a word must have at least one letter");
    }
}

Word Word::parse(std::string_view text)
{
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ' || text[pos] == '\t') {
            ++pos;
            continue;
        }
        Letter value = 0;
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || (ptr != end && *ptr != ' ' && *ptr != '\t')) {
            throw ParseError("cannot parse word \"" + std::string(text) +
                             "\": letters must be nonnegative integers separated by spaces");
        }
        letters.push_back(value);
        pos = std::size_t(ptr - text.data());
    }
    if (letters.empty()) {
        throw InvalidWordError("empty word \"" + std::string(text) + "\"");
    }
    return Word(std::move(letters));
}

std::uint64_t Word::weight() const noexcept
{
    return std::accumulate(letters_.begin(), letters_.end(), std::uint64_t{0});
}

bool Word::is_composition() const noexcept
{
    return std::ranges::none_of(letters_, [](Letter u) { return u == 0; });
}

bool Word::contains_factor(const Word& other) const
{
    return std::ranges::search(letters_, other.letters_).begin() != letters_.end();
}

std::string Word::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) {
            s += ' ';
        }
        s += std::to_string(letters_[i]);
    }
    return s;
}

Word operator+(const Word& a, const Word& b)
{
    std::vector<Letter> letters(a.letters_);
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(letters));
}

bool CorrelationVector::is_zero() const noexcept
{
    return std::ranges::none_of(bits_, [](bool b) { return b; });
}

std::string CorrelationVector::to_string() const
{
    std::string s;
    for (bool b : bits_) {
        s += b ? '1' : '0';
    }
    return s;
}

CorrelationVector correlation_vector(const Word& x, const Word& y)
{
    const auto a = x.letters();
    const auto b = y.letters();
    const std::size_t m = a.size();
    std::vector<bool> bits(m);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t t = m - j;
        if (t <= b.size()) {
            bits[j] = std::ranges::equal(a.first(t), b.last(t));
        } else {
            bits[j] = std::ranges::equal(a.subspan(t - b.size(), b.size()), b);
        }
    }
    return CorrelationVector(std::move(bits));
}

Series correlation_polynomial(const Word& x, const Word& y, unsigned max_weight)
{
    const auto c = correlation_vector(x, y);
    const auto a = x.letters();
    const std::size_t m = a.size();
    std::vector<Term> terms;
    std::uint64_t suffix_weight = 0;
    for (std::size_t j = 0; j < m; ++j) {
        if (j > 0) {
            suffix_weight += a[m - j];
        }
        if (c[j] && suffix_weight <= max_weight && j <= max_weight) {
            terms.push_back({{unsigned(suffix_weight), unsigned(j)}, 1});
        }
    }
    return Series::from_terms(max_weight, terms);
}

bool is_reduced(std::span<const Word> words)
{
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i != j && words[j].contains_factor(words[i])) {
                return false;
            }
        }
    }
    return true;
}

std::string ForbiddenList::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (i) {
            s += ';';
        }
        s += words_[i].to_string();
    }
    return s;
}

ForbiddenList make_forbidden_list(std::vector<Word> words)
{
    if (words.empty()) {
        throw InvalidWordError("a forbidden list needs at least one word");
    }
    for (const auto& w : words) {
        if (!w.is_composition()) {
            throw InvalidWordError("forbidden word \"" + w.to_string() + "\" has a letter below 1");
        }
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i != j && words[j].contains_factor(words[i])) {
                throw ReducednessError("list is not reduced: \"" + words[i].to_string() +
                                       "\" is a factor of \"" + words[j].to_string() + "\"");
            }
        }
    }
    bool easy = true;
    for (std::size_t i = 0; i < words.size() && easy; ++i) {
        for (std::size_t j = 0; j < words.size() && easy; ++j) {
            if (i != j && !correlation_vector(words[i], words[j]).is_zero()) {
                easy = false;
            }
        }
    }
    return ForbiddenList(std::move(words), easy);
}

std::vector<Word> parse_word_list(std::string_view text)
{
    std::vector<Word> words;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = text.find(';', start);
        words.push_back(Word::parse(text.substr(start, end - start)));
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return words;
}

} // namespace compavoid
