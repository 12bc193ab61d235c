#ifndef BUBBLE_TREE_HPP
#define BUBBLE_TREE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bubble/numbers.hpp"
#include "bubble/permutation.hpp"

namespace bubble {

/// Default node cap for materialized trees and traversals (10!).
inline constexpr std::uint64_t kDefaultTreeNodeCap = 3628800;

/// The tree of iterated preimages rooted at some permutation: children of a
/// node are its preimages under the pass, the node itself excluded (which
/// only matters for an identity root). Children keep the canonical mask
/// order of preimages().
struct PermTree {
    Permutation node;
    std::vector<PermTree> children;

    std::uint64_t node_count() const;
    std::uint64_t leaf_count() const;
    int depth() const;
};

/// Builds the full preimage tree of pi. Throws CapExceeded when the node
/// count would exceed max_nodes.
PermTree build_tree(const Permutation& pi, std::uint64_t max_nodes = kDefaultTreeNodeCap);

/// Parent-before-child traversal of the preimage tree of root without
/// materializing it; fn receives each permutation and its height. Returns
/// the number of nodes visited. Throws CapExceeded past max_nodes.
std::uint64_t visit_tree(const Permutation& root,
                         const std::function<void(const Permutation&, int)>& fn,
                         std::uint64_t max_nodes = kDefaultTreeNodeCap);

/// Label-decorated shape of a preimage tree. Children are kept sorted by
/// (tail_run, ltr_count) descending, which is a canonical form because a
/// label fully determines its subtree. identity_root is set on the root of
/// an identity tree only; every non-root node is non-identity.
struct SkeletonTree {
    Label node;
    bool identity_root = false;
    std::vector<SkeletonTree> children;

    std::uint64_t node_count() const;
    int depth() const;

    bool operator==(const SkeletonTree& other) const;
};

/// Shape of t with each permutation replaced by its label, children in
/// canonical skeleton order.
SkeletonTree skeleton_of(const PermTree& t);

/// Multiset of children labels of a node with the given label, as
/// (label, multiplicity) pairs sorted by (tail_run, ltr_count) descending.
/// For label (k, m) with m >= 1:
///   - for h = 0..m-2, i = 1..k-1-h: C(k-2-h, i-1) children labeled (k-i, h);
///   - when not identity_root, for h = m-1, i = 0..k-m: C(k-m, i) children
///     labeled (k-i, m-1).
/// Empty when m = 0.
std::vector<std::pair<Label, BigInt>> children_label_multiset(const Label& lab,
                                                              bool identity_root);

/// The unique skeleton generated by recursive application of
/// children_label_multiset; equals skeleton_of(build_tree(pi)) for any pi
/// with this label. Throws CapExceeded past max_nodes.
SkeletonTree build_skeleton(const Label& lab, bool identity_root,
                            std::uint64_t max_nodes = kDefaultTreeNodeCap);

/// The depth-1 companion of pi: a permutation tau with its left-to-right
/// maxima at the same positions as pi and bubble_pass(tau) = identity, so
/// the preimage trees of pi and tau are isomorphic. The block boundary
/// values m_1+p_1, m_1+p_1+m_2+p_2, ... are placed at positions
/// m_1, m_1+p_1+m_2, ...; everything else is filled in increasing order.
/// Throws std::invalid_argument for pi = identity.
Permutation canonical_child(const Permutation& pi);

/// m for non-identity labels; n-1 for the identity label (n, n).
int depth_of_label(const Label& lab, bool identity_root);

/// Nodes at height j for a non-identity label: j! (j+1)^(k-j) for
/// 0 <= j <= m, else 0. Identity labels are rejected; their per-height
/// counts go through the analytics formulas instead.
BigInt nodes_at_height(const Label& lab, int j);

/// Total nodes for a non-identity label: sum of nodes_at_height over
/// j = 0..m.
BigInt count_nodes(const Label& lab);

/// Leaves at height j for a non-identity label:
///   j = 0: 1 if m = 0 (the root is the only node), else 0;
///   1 <= j < m: j! j (j+1)^(k-j-1);
///   j = m >= 1: m! (m+1)^(k-m).
BigInt leaves_at_height(const Label& lab, int j);

BigInt count_leaves(const Label& lab);

struct HeightLevel {
    BigInt nodes;
    BigInt leaves;
};

/// Per-height (nodes, leaves), height 0..depth. Non-identity labels use the
/// closed forms above; identity roots use the analytics formulas for the
/// whole tree over S_n.
struct HeightProfile {
    std::vector<HeightLevel> levels;
};

HeightProfile height_profile(const Label& lab, bool identity_root);

/// DOT serialization: node ids are quoted underscore-joined values, node
/// labels carry the one-line notation plus the (k,m) label, edges go parent
/// to child in canonical order.
std::string tree_to_dot(const PermTree& t);

/// Recursive JSON objects {"perm": "...", "label": [k,m], "children": [...]}.
std::string tree_to_json(const PermTree& t);

/// Same JSON shape without the "perm" field.
std::string skeleton_to_json(const SkeletonTree& t);

}  // namespace bubble

#endif
