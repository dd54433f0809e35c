#pragma once

#include <span>
#include <string_view>
#include <utility>

#include "updown/error.hpp"
#include "updown/word.hpp"

namespace updown {

/// Selects between the two families: G-words require w_2 > w_{n-1} and
/// R-words require w_2 < w_{n-1} (when n >= 4). Both require the first digit
/// to be the maximum and the last digit the runner-up.
enum class Variant { G, R };

std::string_view to_string(Variant v) noexcept;

// Throws PreconditionError when w has fewer than two digits.
bool is_word(Variant v, const Word& w);

// A word of variant v none of whose proper windows of length >= 4, read in
// either direction, is itself a word of variant v. O(n^2).
bool is_primitive(Variant v, const Word& w);

/// Whether (m+2, w, m+1) is primitive, m = max digit of w. The empty word is
/// a member (its wrap is 21).
bool is_trimmed_member(Variant v, const Word& w);

// Splits a primitive word on [n], n >= 3, around the position k of n-2:
//   left  = w_1, w_{k-1}, ..., w_2, w_k
//   right = w_n, w_{k+1}, ..., w_{n-1}, w_k
// Both halves are primitive of the same variant (after flattening).
std::pair<Word, Word> split(Variant v, const Word& w);

/// Grows a primitive word on [n-1] into one on [n]:
///   G: (n, n-2, x_2, ..., x_{n-2}, n-1)
///   R: (n, x_{n-2}, ..., x_2, n-2, n-1)
Word extend_type_one(Variant v, const Word& x);

class MergeError : public PreconditionError {
public:
    enum class Kind {
        SetCondition,   // sizes, union, or intersection of the digit sets
        WordCondition,  // x or y not primitive, or not ending in n-2
        Ordering,       // x_{p-1} <= y_{q-1}
    };

    MergeError(Kind kind, const std::string& what) : PreconditionError(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Glues primitive x on P and y on Q, where P∪Q = [n], P∩Q = {n-2}, both
/// end in n-2 and x_{p-1} > y_{q-1}:
///   G: (n, x_{p-1}, ..., x_2, n-2, y_2, ..., y_{q-1}, n-1)
///   R: (n, y_{q-1}, ..., y_2, n-2, x_2, ..., x_{p-1}, n-1)
/// Throws MergeError naming the failed condition.
Word merge_type_two(Variant v, const Word& x, const Word& y);

namespace detail {

// Span versions used by the enumeration loops; no validation of digits.
bool is_word(Variant v, std::span<const Digit> w);
bool is_primitive(Variant v, std::span<const Digit> w);

}  // namespace detail

}  // namespace updown
