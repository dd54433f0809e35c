#include "updown/patterns.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace updown {

std::string_view to_string(Variant v) noexcept { return v == Variant::G ? "G" : "R"; }

namespace detail {

bool is_word(Variant v, std::span<const Digit> w) {
    const std::size_t n = w.size();
    const Digit top = w[0];
    const Digit runner_up = w[n - 1];
    if (runner_up > top) return false;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (w[k] > runner_up) return false;
    }
    if (n < 4) return true;
    return v == Variant::G ? w[1] > w[n - 2] : w[1] < w[n - 2];
}

bool is_primitive(Variant v, std::span<const Digit> w) {
    const std::size_t n = w.size();
    if (!is_word(v, w)) return false;

    // A window [i,j] has the (G1)/(R1) shape, forwards or reversed, exactly
    // when both endpoints exceed every interior digit. Tracking the interior
    // maximum while j grows makes each window test O(1).
    for (std::size_t i = 0; i + 3 < n; ++i) {
        Digit inner = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j >= i + 2) inner = std::max(inner, w[j - 1]);
            if (inner > w[i]) break;
            if (j - i + 1 < 4 || (i == 0 && j == n - 1) || w[j] < inner) continue;

            const Digit near_left = w[i + 1];
            const Digit near_right = w[j - 1];
            // Read the window so that its first digit is the larger endpoint.
            const Digit second = w[i] > w[j] ? near_left : near_right;
            const Digit penultimate = w[i] > w[j] ? near_right : near_left;
            const bool hit = v == Variant::G ? second > penultimate : second < penultimate;
            if (hit) return false;
        }
    }
    return true;
}

}  // namespace detail

namespace {

void require_length(const Word& w, std::string_view op) {
    if (w.size() < 2) {
        throw PreconditionError(std::string(op) + ": word must have at least two digits, got '" +
                                w.to_string() + "'");
    }
}

bool is_on_initial_segment(const Word& w) { return w.max() == w.size(); }

}  // namespace

bool is_word(Variant v, const Word& w) {
    require_length(w, "is_word");
    return detail::is_word(v, w.digits());
}

bool is_primitive(Variant v, const Word& w) {
    require_length(w, "is_primitive");
    return detail::is_primitive(v, w.digits());
}

bool is_trimmed_member(Variant v, const Word& w) {
    const Digit m = w.max();
    std::vector<Digit> wrapped;
    wrapped.reserve(w.size() + 2);
    wrapped.push_back(m + 2);
    wrapped.insert(wrapped.end(), w.begin(), w.end());
    wrapped.push_back(m + 1);
    return detail::is_primitive(v, wrapped);
}

std::pair<Word, Word> split(Variant v, const Word& w) {
    const std::size_t n = w.size();
    if (n < 3 || !is_on_initial_segment(w) || !detail::is_primitive(v, w.digits())) {
        throw PreconditionError("split: '" + w.to_string() + "' is not a primitive " +
                                std::string(to_string(v)) + "-word on [n] with n >= 3");
    }
    const std::size_t k = position_of(w, n - 2);

    std::vector<Digit> left{w.at(1)};
    for (std::size_t pos = k - 1; pos >= 2; --pos) left.push_back(w.at(pos));
    left.push_back(w.at(k));

    std::vector<Digit> right{w.at(n)};
    for (std::size_t pos = k + 1; pos <= n - 1; ++pos) right.push_back(w.at(pos));
    right.push_back(w.at(k));

    return {make_word_unchecked(std::move(left)), make_word_unchecked(std::move(right))};
}

Word extend_type_one(Variant v, const Word& x) {
    const std::size_t n = x.size() + 1;
    if (x.size() < 2 || !is_on_initial_segment(x) || !detail::is_primitive(v, x.digits())) {
        throw PreconditionError("extend_type_one: '" + x.to_string() + "' is not a primitive " +
                                std::string(to_string(v)) + "-word on [n-1] with n >= 3");
    }
    std::vector<Digit> out{n};
    if (v == Variant::G) {
        out.push_back(n - 2);
        for (std::size_t pos = 2; pos <= n - 2; ++pos) out.push_back(x.at(pos));
    } else {
        for (std::size_t pos = n - 2; pos >= 2; --pos) out.push_back(x.at(pos));
        out.push_back(n - 2);
    }
    out.push_back(n - 1);
    return make_word_unchecked(std::move(out));
}

Word merge_type_two(Variant v, const Word& x, const Word& y) {
    using Kind = MergeError::Kind;
    const std::size_t p = x.size();
    const std::size_t q = y.size();
    if (p < 3 || q < 3) {
        throw MergeError(Kind::SetCondition, "merge_type_two: both words need at least 3 digits");
    }

    const std::set<Digit> left(x.begin(), x.end());
    const std::set<Digit> right(y.begin(), y.end());
    std::vector<Digit> shared;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                          std::back_inserter(shared));
    std::set<Digit> all = left;
    all.insert(right.begin(), right.end());
    const std::size_t n = all.size();
    if (*all.rbegin() != n) {
        throw MergeError(Kind::SetCondition, "merge_type_two: digit sets of '" + x.to_string() +
                                                 "' and '" + y.to_string() +
                                                 "' do not cover an initial segment [n]");
    }
    if (shared.size() != 1 || shared.front() != n - 2) {
        throw MergeError(Kind::SetCondition, "merge_type_two: digit sets of '" + x.to_string() +
                                                 "' and '" + y.to_string() +
                                                 "' must meet exactly in {n-2}");
    }

    if (x.back() != n - 2 || y.back() != n - 2) {
        throw MergeError(Kind::WordCondition, "merge_type_two: both words must end in n-2");
    }
    if (!detail::is_primitive(v, x.digits()) || !detail::is_primitive(v, y.digits())) {
        throw MergeError(Kind::WordCondition, "merge_type_two: both words must be primitive " +
                                                  std::string(to_string(v)) + "-words");
    }
    if (x.at(p - 1) <= y.at(q - 1)) {
        throw MergeError(Kind::Ordering, "merge_type_two: need x_{p-1} > y_{q-1}");
    }

    const Word& descending = v == Variant::G ? x : y;
    const Word& ascending = v == Variant::G ? y : x;
    std::vector<Digit> out{n};
    for (std::size_t pos = descending.size() - 1; pos >= 2; --pos) {
        out.push_back(descending.at(pos));
    }
    out.push_back(n - 2);
    for (std::size_t pos = 2; pos < ascending.size(); ++pos) out.push_back(ascending.at(pos));
    out.push_back(n - 1);
    return make_word_unchecked(std::move(out));
}

}  // namespace updown
