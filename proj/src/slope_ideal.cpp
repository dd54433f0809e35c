#include "updown/slope_ideal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace updown {

std::string SlopeVariable::to_string() const {
    return "m[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

Monomial::Monomial(std::vector<SlopeVariable> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if (f.i == 0 || f.i >= f.j) {
            throw PreconditionError("Monomial: bad slope variable " + f.to_string());
        }
    }
    std::sort(factors_.begin(), factors_.end());
    if (std::adjacent_find(factors_.begin(), factors_.end()) != factors_.end()) {
        throw PreconditionError("Monomial: repeated factor");
    }
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (k > 0) out.push_back('*');
        out += factors_[k].to_string();
    }
    return out;
}

std::string_view to_string(TermOrder order) noexcept {
    return order == TermOrder::Grlex ? "grlex" : "revlex";
}

Variant variant_for(TermOrder order) noexcept {
    return order == TermOrder::Grlex ? Variant::G : Variant::R;
}

Monomial word_to_monomial(const Word& w) {
    if (w.size() < 2) throw PreconditionError("word_to_monomial: need at least two digits");
    std::vector<SlopeVariable> factors;
    const auto d = w.digits();
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
        factors.push_back({std::min(d[k], d[k + 1]), std::max(d[k], d[k + 1])});
    }
    return Monomial(std::move(factors));
}

GeneratorSet generators(unsigned n, TermOrder order, std::optional<unsigned> degree) {
    if (n > 63) throw PreconditionError("generators: n above 63 is not supported");
    GeneratorSet result;
    std::set<Monomial> seen;
    const Variant v = variant_for(order);

    for (unsigned r = 4; r <= n; ++r) {
        if (degree && *degree + 1 != r) continue;
        const auto patterns = tree_words(v, r);

        // Gosper's hack walks the r-subsets of [n] in colexicographic order.
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t mask = (std::uint64_t{1} << r) - 1; mask < limit;) {
            std::vector<Digit> subset;
            for (unsigned bit = 0; bit < n; ++bit) {
                if ((mask >> bit) & 1) subset.push_back(bit + 1);
            }
            for (const auto& pattern : patterns) {
                std::vector<Digit> relabeled;
                relabeled.reserve(r);
                for (Digit d : pattern) relabeled.push_back(subset[d - 1]);
                auto monomial = word_to_monomial(make_word_unchecked(std::move(relabeled)));
                if (seen.insert(monomial).second) {
                    result.monomials.push_back(std::move(monomial));
                } else {
                    ++result.duplicates;
                }
            }
            const std::uint64_t low = mask & -mask;
            const std::uint64_t ripple = mask + low;
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
    }
    return result;
}

CountTable degree_count_table(unsigned n, TermOrder order) {
    CountTable table{n, order, {}};
    for (unsigned d = 3; d + 1 <= n; ++d) {
        // C(n, d+1), built exactly.
        BigCount choose = 1;
        for (unsigned k = 0; k < d + 1; ++k) {
            choose *= n - k;
            choose /= k + 1;
        }
        // Primitive words on [d+1] are counted by the updown number E(d-1).
        BigCount count = choose * euler_number(d - 1);
        if (count != 0) table.entries.emplace(d, std::move(count));
    }
    return table;
}

}  // namespace updown
