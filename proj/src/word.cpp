#include "updown/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "updown/error.hpp"

namespace updown {

namespace {

void validate(std::span<const Digit> digits) {
    std::vector<Digit> sorted(digits.begin(), digits.end());
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() == 0) {
        throw PreconditionError("word digits must be positive");
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionError("word digits must be distinct");
    }
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

Word::Word(std::vector<Digit> digits) : digits_(std::move(digits)) { validate(digits_); }

Word::Word(std::initializer_list<Digit> digits) : digits_(digits) { validate(digits_); }

Word make_word_unchecked(std::vector<Digit> digits) {
    return Word(Word::Unchecked{}, std::move(digits));
}

Word Word::parse(std::string_view text) {
    std::size_t first = 0;
    std::size_t last = text.size();
    while (first < last && is_space(text[first])) ++first;
    while (last > first && is_space(text[last - 1])) --last;

    std::vector<Digit> digits;
    if (first == last) return Word{};

    const std::string_view body = text.substr(first, last - first);
    if (body.find(',') == std::string_view::npos) {
        for (std::size_t k = 0; k < body.size(); ++k) {
            const char c = body[k];
            if (c < '1' || c > '9') {
                throw ParseError("expected a digit 1-9 in compact word", first + k);
            }
            digits.push_back(static_cast<Digit>(c - '0'));
        }
    } else {
        std::size_t pos = 0;
        while (pos < body.size()) {
            while (pos < body.size() && is_space(body[pos])) ++pos;
            Digit value = 0;
            const char* begin = body.data() + pos;
            const char* end = body.data() + body.size();
            auto [ptr, ec] = std::from_chars(begin, end, value);
            if (ec != std::errc{} || ptr == begin) {
                throw ParseError("expected a positive integer", first + pos);
            }
            if (value == 0) throw ParseError("word digits must be positive", first + pos);
            digits.push_back(value);
            pos = static_cast<std::size_t>(ptr - body.data());
            while (pos < body.size() && is_space(body[pos])) ++pos;
            if (pos == body.size()) break;
            if (body[pos] != ',') throw ParseError("expected ','", first + pos);
            ++pos;
        }
    }

    std::vector<Digit> sorted = digits;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        throw ParseError("repeated digit " + std::to_string(*dup), first);
    }
    return Word(Unchecked{}, std::move(digits));
}

Digit Word::at(std::size_t position) const {
    if (position < 1 || position > digits_.size()) {
        throw std::out_of_range("word position " + std::to_string(position) + " outside [1," +
                                std::to_string(digits_.size()) + "]");
    }
    return digits_[position - 1];
}

Digit Word::max() const noexcept {
    return digits_.empty() ? 0 : *std::max_element(digits_.begin(), digits_.end());
}

std::string Word::to_string() const {
    std::string out;
    const bool compact =
        std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d <= 9; });
    if (compact) {
        for (Digit d : digits_) out.push_back(static_cast<char>('0' + d));
        return out;
    }
    for (std::size_t k = 0; k < digits_.size(); ++k) {
        if (k > 0) out.push_back(',');
        out += std::to_string(digits_[k]);
    }
    if (digits_.size() == 1) out.push_back(',');
    return out;
}

Word reverse(const Word& w) {
    std::vector<Digit> digits(w.begin(), w.end());
    std::reverse(digits.begin(), digits.end());
    return make_word_unchecked(std::move(digits));
}

Word subword(const Word& w, std::size_t i, std::size_t j) {
    if (i < 1 || i > j || j > w.size()) {
        throw std::out_of_range("subword [" + std::to_string(i) + "," + std::to_string(j) +
                                "] outside a word of length " + std::to_string(w.size()));
    }
    return make_word_unchecked(std::vector<Digit>(w.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                                  w.begin() + static_cast<std::ptrdiff_t>(j)));
}

Word flatten(const Word& w) {
    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto digits = w.digits();
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return digits[a] < digits[b]; });
    std::vector<Digit> ranks(w.size());
    for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = r + 1;
    return make_word_unchecked(std::move(ranks));
}

bool pattern_equal(const Word& w, const Word& v) { return flatten(w) == flatten(v); }

std::size_t position_of(const Word& w, Digit d) {
    auto it = std::find(w.begin(), w.end(), d);
    if (it == w.end()) {
        throw std::out_of_range("digit " + std::to_string(d) + " does not occur in " +
                                w.to_string());
    }
    return static_cast<std::size_t>(it - w.begin()) + 1;
}

}  // namespace updown
