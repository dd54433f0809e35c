#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "updown/error.hpp"
#include "updown/word.hpp"

namespace updown {

/// A decreasing 012-tree: distinct positive labels, at most two children per
/// vertex, every child smaller than its parent. Children are unordered; they
/// are kept sorted by decreasing root label so that equal trees compare equal.
/// A default-constructed tree is the empty tree (vertex set ∅).
class DecreasingTree {
public:
    DecreasingTree() = default;

    bool empty() const noexcept { return label_ == 0; }
    Digit label() const noexcept { return label_; }
    std::span<const DecreasingTree> children() const noexcept { return children_; }

    std::size_t size() const noexcept;
    Digit min_label() const noexcept;

    /// All labels in ascending order.
    std::vector<Digit> labels() const;

    friend bool operator==(const DecreasingTree&, const DecreasingTree&) = default;

private:
    friend DecreasingTree make_tree(Digit, std::vector<DecreasingTree>);
    friend DecreasingTree make_tree_unchecked(Digit, std::vector<DecreasingTree>);

    Digit label_ = 0;
    std::vector<DecreasingTree> children_;
};

// Validating constructor: throws PreconditionError for more than two
// children, an empty child, a repeated label, or a child label >= label.
DecreasingTree make_tree(Digit label, std::vector<DecreasingTree> children = {});

// Sorts the children but trusts the caller on every other invariant.
DecreasingTree make_tree_unchecked(Digit label, std::vector<DecreasingTree> children = {});

/// Parses "[6,[5,[4],[2]],[3,[1]]]"; whitespace between tokens is ignored and
/// "[]" is the empty tree. Syntax errors throw ParseError.
DecreasingTree parse_bracket(std::string_view text);

/// Canonical bracket form: no whitespace, children by decreasing root label.
std::string to_bracket(const DecreasingTree& t);

/// Every decreasing 012-tree on the vertex set `labels` (any order, distinct),
/// each once, sorted by canonical bracket text. The empty set yields the
/// single empty tree.
std::vector<DecreasingTree> enumerate_trees(std::span<const Digit> labels);

}  // namespace updown
