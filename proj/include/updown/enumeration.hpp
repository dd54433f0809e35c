#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "updown/patterns.hpp"
#include "updown/word.hpp"

namespace updown {

using BigCount = boost::multiprecision::cpp_int;

enum class Method { Brute, Tree };

std::string_view to_string(Method m) noexcept;

struct CountRecord {
    unsigned n = 0;
    Variant variant = Variant::G;
    std::uint64_t count = 0;
    Method method = Method::Brute;
};

/// Every primitive word of variant v on [n], lexicographically ordered.
/// Only the (n-2)! permutations with w_1 = n and w_n = n-1 are tested.
/// `threads` = 0 picks the hardware concurrency; the result does not depend
/// on it. Throws PreconditionError for n < 2 or n > 14.
std::vector<Word> brute_force_words(Variant v, unsigned n, unsigned threads = 0);

/// The same set obtained as wrap(psi(v, t)) over all trees t on [n-2].
std::vector<Word> tree_words(Variant v, unsigned n);

CountRecord count_words(Variant v, unsigned n, Method method, unsigned threads = 0);

/// Updown numbers 1, 1, 1, 2, 5, 16, 61, 272, ... via the Entringer
/// triangle; exact for every n.
BigCount euler_number(unsigned n);

/// Counts w in S_n with w_1 < w_2 > w_3 < ... by visiting all n!
/// permutations. Throws PreconditionError for n > 11.
std::uint64_t alternating_count_oracle(unsigned n);

}  // namespace updown
