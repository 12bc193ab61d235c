#ifndef BUBBLE_RECOGNIZER_HPP
#define BUBBLE_RECOGNIZER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bubble/permutation.hpp"
#include "bubble/tree.hpp"

namespace bubble {

/// Pure rooted shape, no labels.
struct UnlabeledTree {
    std::vector<UnlabeledTree> children;

    std::uint64_t node_count() const;
    int depth() const;
    bool operator==(const UnlabeledTree&) const = default;
};

/// Balanced-parentheses word, outermost pair = root, one child per top-level
/// inner group. Throws std::invalid_argument with the 1-based position of
/// the first problem.
UnlabeledTree parse_paren(std::string_view text);

/// Canonical serialization: children serialized recursively, then sorted
/// lexicographically. parse_paren(serialize_paren(t)) reproduces the
/// canonical form of t.
std::string serialize_paren(const UnlabeledTree& t);

/// Children sorted recursively by their canonical serialization.
UnlabeledTree canonicalize(const UnlabeledTree& t);

/// Shape of a skeleton (labels dropped).
UnlabeledTree shape_of(const SkeletonTree& t);

/// Shape from the tree JSON export (perm/label fields ignored, only
/// "children" nesting is read).
UnlabeledTree shape_from_json(std::string_view json_text);

struct RecognitionVerdict {
    bool accepted = false;
    std::optional<Label> as_label;    // realizable as the tree of a non-identity
    std::optional<int> as_identity;   // realizable as the tree over S_n; holds n
    std::string reject_path;          // canonical-order path of the first failure
    std::string reason;               // short cause, empty when accepted

    bool operator==(const RecognitionVerdict&) const = default;
};

/// Decides whether t is the unlabeled skeleton of some preimage tree.
/// Root degree and depth pin down the only candidate label (2^m - 1
/// children: the identity of size m+1; 2^(k-1) children: label (k, m));
/// the candidate is then verified recursively against
/// children_label_multiset, leaves matching any expected (k', 0) slot and
/// each non-leaf child's label being forced by its own degree and depth.
/// The single-node tree reports both of its realizations, (1,0) and the
/// identity of size 1. Rejection is a verdict, not an error.
RecognitionVerdict recognize(const UnlabeledTree& t);

}  // namespace bubble

#endif
