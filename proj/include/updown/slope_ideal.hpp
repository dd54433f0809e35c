#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "updown/enumeration.hpp"
#include "updown/patterns.hpp"
#include "updown/word.hpp"

namespace updown {

/// The slope variable m[i,j], i < j.
struct SlopeVariable {
    Digit i = 0;
    Digit j = 0;

    std::string to_string() const;
    friend auto operator<=>(const SlopeVariable&, const SlopeVariable&) = default;
};

/// Squarefree product of slope variables, factors sorted by (i, j).
class Monomial {
public:
    Monomial() = default;
    /// Sorts the factors; throws PreconditionError on a repeated factor or a
    /// variable with i >= j or i == 0.
    explicit Monomial(std::vector<SlopeVariable> factors);

    std::size_t degree() const noexcept { return factors_.size(); }
    const std::vector<SlopeVariable>& factors() const noexcept { return factors_; }

    /// "m[1,2]*m[1,3]*m[2,4]"
    std::string to_string() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<SlopeVariable> factors_;
};

enum class TermOrder { Grlex, Revlex };

std::string_view to_string(TermOrder order) noexcept;

/// Grlex generators come from primitive G-words, revlex from R-words.
Variant variant_for(TermOrder order) noexcept;

/// One factor m[min,max] per pair of adjacent digits.
Monomial word_to_monomial(const Word& w);

struct GeneratorSet {
    std::vector<Monomial> monomials;
    /// Monomials dropped because an earlier (subset, word) pair produced the
    /// same one. Expected to be zero.
    std::size_t duplicates = 0;
};

/// Generators of the initial ideal of the slope ideal in n points: for every
/// subset S of [n] with |S| = r >= 4 and every primitive word on S of the
/// order's variant, the monomial of that word. Ordered by degree, then S in
/// colexicographic order, then word lexicographically. When `degree` is set
/// only that degree is produced. Throws PreconditionError for n > 63.
GeneratorSet generators(unsigned n, TermOrder order, std::optional<unsigned> degree = std::nullopt);

struct CountTable {
    unsigned n = 0;
    TermOrder order = TermOrder::Grlex;
    /// degree d -> C(n, d+1) * (number of primitive words on [d+1]); only
    /// nonzero entries, 3 <= d <= n-1.
    std::map<unsigned, BigCount> entries;
};

CountTable degree_count_table(unsigned n, TermOrder order);

}  // namespace updown
