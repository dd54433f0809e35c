#include "updown/bijection.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace updown {

namespace {

using Digits = std::vector<Digit>;

DecreasingTree build_tree(Variant v, std::span<const Digit> w) {
    const std::size_t n = w.size();
    const auto top = std::max_element(w.begin(), w.end());
    const Digit m = *top;
    const std::size_t k = static_cast<std::size_t>(top - w.begin());  // 0-based
    if (n == 1) return make_tree_unchecked(m);

    auto reversed = [&](std::size_t count) {
        return Digits(std::make_reverse_iterator(w.begin() + static_cast<std::ptrdiff_t>(count)),
                      w.rend());
    };

    if (v == Variant::G && k == 0) return make_tree_unchecked(m, {build_tree(v, w.subspan(1))});
    if (v == Variant::R && k == n - 1) {
        return make_tree_unchecked(m, {build_tree(v, reversed(n - 1))});
    }
    return make_tree_unchecked(m, {build_tree(v, reversed(k)), build_tree(v, w.subspan(k + 1))});
}

Digits build_word(Variant v, const DecreasingTree& t) {
    const auto children = t.children();
    if (children.empty()) return {t.label()};

    if (children.size() == 1) {
        Digits inner = build_word(v, children[0]);
        if (v == Variant::G) {
            inner.insert(inner.begin(), t.label());
        } else {
            std::reverse(inner.begin(), inner.end());
            inner.push_back(t.label());
        }
        return inner;
    }

    Digits first = build_word(v, children[0]);
    Digits second = build_word(v, children[1]);
    const bool swap = v == Variant::G ? children[0].min_label() < children[1].min_label()
                                      : first.back() > second.back();
    if (swap) std::swap(first, second);

    Digits out(first.rbegin(), first.rend());
    out.push_back(t.label());
    out.insert(out.end(), second.begin(), second.end());
    return out;
}

}  // namespace

Word wrap(const Word& w) {
    const Digit m = w.max();
    if (m > std::numeric_limits<Digit>::max() - 2) {
        throw PreconditionError("wrap: largest digit too large");
    }
    Digits out{m + 2};
    out.insert(out.end(), w.begin(), w.end());
    out.push_back(m + 1);
    return make_word_unchecked(std::move(out));
}

Word strip(const Word& w) {
    if (w.size() < 2) throw PreconditionError("strip: word must have at least two digits");
    const auto d = w.digits();
    const Digit runner_up = d.back();
    const bool shaped =
        d.front() > runner_up &&
        std::all_of(d.begin() + 1, d.end() - 1, [&](Digit x) { return x < runner_up; });
    if (!shaped) {
        throw PreconditionError("strip: '" + w.to_string() +
                                "' does not start with its maximum and end with its runner-up");
    }
    return make_word_unchecked(Digits(d.begin() + 1, d.end() - 1));
}

DecreasingTree phi(Variant v, const Word& w) {
    if (!is_trimmed_member(v, w)) {
        throw PreconditionError("phi: '" + w.to_string() + "' is not a trimmed primitive " +
                                std::string(to_string(v)) + "-word");
    }
    if (w.empty()) return DecreasingTree{};
    return build_tree(v, w.digits());
}

Word psi(Variant v, const DecreasingTree& t) {
    if (t.empty()) return Word{};
    return make_word_unchecked(build_word(v, t));
}

}  // namespace updown
