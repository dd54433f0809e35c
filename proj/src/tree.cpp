#include "updown/tree.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace updown {

namespace {

void collect_labels(const DecreasingTree& t, std::vector<Digit>& out) {
    if (t.empty()) return;
    out.push_back(t.label());
    for (const auto& child : t.children()) collect_labels(child, out);
}

void sort_children(std::vector<DecreasingTree>& children) {
    std::sort(children.begin(), children.end(),
              [](const DecreasingTree& a, const DecreasingTree& b) { return a.label() > b.label(); });
}

}  // namespace

std::size_t DecreasingTree::size() const noexcept {
    if (empty()) return 0;
    std::size_t total = 1;
    for (const auto& child : children_) total += child.size();
    return total;
}

Digit DecreasingTree::min_label() const noexcept {
    Digit lowest = label_;
    for (const auto& child : children_) lowest = std::min(lowest, child.min_label());
    return lowest;
}

std::vector<Digit> DecreasingTree::labels() const {
    std::vector<Digit> out;
    collect_labels(*this, out);
    std::sort(out.begin(), out.end());
    return out;
}

DecreasingTree make_tree_unchecked(Digit label, std::vector<DecreasingTree> children) {
    DecreasingTree t;
    t.label_ = label;
    sort_children(children);
    t.children_ = std::move(children);
    return t;
}

DecreasingTree make_tree(Digit label, std::vector<DecreasingTree> children) {
    if (label == 0) throw PreconditionError("make_tree: labels must be positive");
    if (children.size() > 2) {
        throw PreconditionError("make_tree: vertex " + std::to_string(label) + " has " +
                                std::to_string(children.size()) + " children");
    }
    std::vector<Digit> below;
    for (const auto& child : children) {
        if (child.empty()) throw PreconditionError("make_tree: empty subtree as a child");
        if (child.label() >= label) {
            throw PreconditionError("make_tree: child " + std::to_string(child.label()) +
                                    " is not below parent " + std::to_string(label));
        }
        collect_labels(child, below);
    }
    std::sort(below.begin(), below.end());
    if (auto dup = std::adjacent_find(below.begin(), below.end()); dup != below.end()) {
        throw PreconditionError("make_tree: label " + std::to_string(*dup) + " repeated");
    }
    return make_tree_unchecked(label, std::move(children));
}

namespace {

class BracketParser {
public:
    explicit BracketParser(std::string_view text) : text_(text) {}

    DecreasingTree parse() {
        skip_space();
        expect('[');
        skip_space();
        DecreasingTree result;
        if (peek() == ']') {
            ++pos_;
        } else {
            result = parse_body();
        }
        skip_space();
        if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
        return result;
    }

private:
    // Called just past '['.
    DecreasingTree parse_body() {
        const std::size_t start = pos_;
        Digit label = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), label);
        if (ec != std::errc{} || ptr == text_.data() + pos_ || label == 0) {
            throw ParseError("expected a positive label", start);
        }
        pos_ = static_cast<std::size_t>(ptr - text_.data());

        std::vector<DecreasingTree> children;
        for (;;) {
            skip_space();
            if (peek() == ']') {
                ++pos_;
                break;
            }
            expect(',');
            skip_space();
            expect('[');
            skip_space();
            children.push_back(parse_body());
        }
        return make_tree(label, std::move(children));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r')) {
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void write_bracket(const DecreasingTree& t, std::string& out) {
    out.push_back('[');
    out += std::to_string(t.label());
    for (const auto& child : t.children()) {
        out.push_back(',');
        write_bracket(child, out);
    }
    out.push_back(']');
}

// Trees on `labels`, which is sorted ascending and nonempty.
std::vector<DecreasingTree> trees_on(const std::vector<Digit>& labels) {
    const Digit root = labels.back();
    const std::vector<Digit> rest(labels.begin(), labels.end() - 1);
    std::vector<DecreasingTree> out;
    if (rest.empty()) {
        out.push_back(make_tree(root));
        return out;
    }

    for (const auto& only : trees_on(rest)) out.push_back(make_tree(root, {only}));

    // Two children: the block holding min(rest) is the second child; the
    // other block is any nonempty subset of the remaining labels.
    const std::size_t free = rest.size() - 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << free); ++mask) {
        std::vector<Digit> first_block;
        std::vector<Digit> second_block{rest.front()};
        for (std::size_t bit = 0; bit < free; ++bit) {
            ((mask >> bit) & 1 ? first_block : second_block).push_back(rest[bit + 1]);
        }
        const auto firsts = trees_on(first_block);
        const auto seconds = trees_on(second_block);
        for (const auto& a : firsts) {
            for (const auto& b : seconds) out.push_back(make_tree(root, {a, b}));
        }
    }
    return out;
}

}  // namespace

DecreasingTree parse_bracket(std::string_view text) { return BracketParser(text).parse(); }

std::string to_bracket(const DecreasingTree& t) {
    if (t.empty()) return "[]";
    std::string out;
    write_bracket(t, out);
    return out;
}

std::vector<DecreasingTree> enumerate_trees(std::span<const Digit> labels) {
    std::vector<Digit> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionError("enumerate_trees: labels must be distinct");
    }
    if (!sorted.empty() && sorted.front() == 0) {
        throw PreconditionError("enumerate_trees: labels must be positive");
    }
    if (sorted.empty()) return {DecreasingTree{}};
    if (sorted.size() > 20) {
        throw PreconditionError("enumerate_trees: more than 20 labels is not enumerable");
    }

    auto trees = trees_on(sorted);
    std::vector<std::pair<std::string, std::size_t>> keyed;
    keyed.reserve(trees.size());
    for (std::size_t k = 0; k < trees.size(); ++k) keyed.emplace_back(to_bracket(trees[k]), k);
    std::sort(keyed.begin(), keyed.end());
    std::vector<DecreasingTree> out;
    out.reserve(trees.size());
    for (const auto& [key, index] : keyed) out.push_back(std::move(trees[index]));
    return out;
}

}  // namespace updown
