#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace updown {

using Digit = std::uint64_t;

/// A finite sequence of distinct positive integers, read as a permutation of
/// its own digit set. Positions in the public API are 1-based.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Digit> digits);
    Word(std::initializer_list<Digit> digits);

    /// Accepts "2,5,4,6,3,1" or, when every digit is at most 9, "254631".
    /// A single digit above 9 is written with a trailing comma ("12,").
    static Word parse(std::string_view text);

    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    std::span<const Digit> digits() const noexcept { return digits_; }
    auto begin() const noexcept { return digits_.begin(); }
    auto end() const noexcept { return digits_.end(); }

    /// 1-based access; throws std::out_of_range.
    Digit at(std::size_t position) const;
    Digit front() const { return at(1); }
    Digit back() const { return at(size()); }

    /// Largest digit; 0 for the empty word.
    Digit max() const noexcept;

    /// Compact form when all digits are <= 9, comma-separated otherwise.
    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    struct Unchecked {};
    Word(Unchecked, std::vector<Digit> digits) : digits_(std::move(digits)) {}

    friend Word make_word_unchecked(std::vector<Digit> digits);

    std::vector<Digit> digits_;
};

/// Skips validation; callers guarantee distinct positive digits.
Word make_word_unchecked(std::vector<Digit> digits);

Word reverse(const Word& w);

/// w[i,j] with 1 <= i <= j <= n; throws std::out_of_range otherwise.
Word subword(const Word& w, std::size_t i, std::size_t j);

/// Order-isomorphic word on [n].
Word flatten(const Word& w);

bool pattern_equal(const Word& w, const Word& v);

/// 1-based position of d; throws std::out_of_range if d is absent.
std::size_t position_of(const Word& w, Digit d);

}  // namespace updown
