#include "bubble/tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "bubble/analytics.hpp"
#include "bubble/errors.hpp"
#include "bubble/preimage.hpp"

namespace bubble {

namespace {

void throw_node_cap(std::uint64_t cap) {
    throw CapExceeded("tree node cap of " + std::to_string(cap) + " nodes exceeded");
}

// Descending (tail_run, ltr_count): deeper subtrees first.
bool skeleton_label_order(const Label& a, const Label& b) {
    if (a.tail_run != b.tail_run) return a.tail_run > b.tail_run;
    return a.ltr_count > b.ltr_count;
}

PermTree build_tree_rec(const Permutation& pi, std::uint64_t max_nodes,
                        std::uint64_t& budget) {
    if (budget == 0) throw_node_cap(max_nodes);
    --budget;
    PermTree t{pi, {}};
    for (Permutation& q : preimages(pi)) {
        if (q == pi) continue;  // an identity is its own preimage, never its own child
        t.children.push_back(build_tree_rec(q, max_nodes, budget));
    }
    return t;
}

std::uint64_t visit_tree_rec(const Permutation& node, int height,
                             const std::function<void(const Permutation&, int)>& fn,
                             std::uint64_t max_nodes, std::uint64_t& budget) {
    if (budget == 0) throw_node_cap(max_nodes);
    --budget;
    fn(node, height);
    std::uint64_t visited = 1;
    for (const Permutation& q : preimages(node)) {
        if (q == node) continue;
        visited += visit_tree_rec(q, height + 1, fn, max_nodes, budget);
    }
    return visited;
}

SkeletonTree skeleton_of_rec(const PermTree& t) {
    SkeletonTree s{label_of(t.node), false, {}};
    s.children.reserve(t.children.size());
    for (const PermTree& c : t.children) s.children.push_back(skeleton_of_rec(c));
    std::sort(s.children.begin(), s.children.end(),
              [](const SkeletonTree& a, const SkeletonTree& b) {
                  return skeleton_label_order(a.node, b.node);
              });
    return s;
}

SkeletonTree build_skeleton_rec(const Label& lab, bool identity_root,
                                std::uint64_t max_nodes, std::uint64_t& budget) {
    if (budget == 0) throw_node_cap(max_nodes);
    --budget;
    SkeletonTree s{lab, identity_root, {}};
    for (const auto& [child, mult] : children_label_multiset(lab, identity_root)) {
        if (mult > BigInt(budget)) throw_node_cap(max_nodes);
        // Equal labels give identical subtrees; build once and copy.
        SkeletonTree proto = build_skeleton_rec(child, false, max_nodes, budget);
        const auto copies = mult.convert_to<std::uint64_t>();
        for (std::uint64_t c = 1; c < copies; ++c) {
            const std::uint64_t extra = proto.node_count();
            if (extra > budget) throw_node_cap(max_nodes);
            budget -= extra;
            s.children.push_back(proto);
        }
        s.children.push_back(std::move(proto));
    }
    return s;
}

void require_non_identity_label(const Label& lab, const char* op) {
    if (lab.ltr_count == lab.tail_run) {
        throw std::invalid_argument(std::string(op) +
                                    ": closed form excludes identity labels; got " +
                                    format_label(lab));
    }
}

void validate_label(const Label& lab, const char* op) {
    if (lab.ltr_count < 1 || lab.tail_run < 0 || lab.tail_run > lab.ltr_count) {
        throw std::invalid_argument(std::string(op) + ": invalid label " +
                                    format_label(lab));
    }
}

std::string dot_quote_id(const Permutation& p) {
    std::string id;
    for (int i = 0; i < p.size(); ++i) {
        if (i) id += '_';
        id += std::to_string(p[i]);
    }
    return "\"" + id + "\"";
}

void dot_nodes(const PermTree& t, std::string& out) {
    out += "  " + dot_quote_id(t.node) + " [label=\"" + format_permutation(t.node) +
           " " + format_label(label_of(t.node)) + "\"];\n";
    for (const PermTree& c : t.children) dot_nodes(c, out);
}

void dot_edges(const PermTree& t, std::string& out) {
    for (const PermTree& c : t.children) {
        out += "  " + dot_quote_id(t.node) + " -> " + dot_quote_id(c.node) + ";\n";
        dot_edges(c, out);
    }
}

nlohmann::ordered_json tree_json(const PermTree& t) {
    nlohmann::ordered_json j;
    j["perm"] = format_permutation(t.node);
    const Label lab = label_of(t.node);
    j["label"] = {lab.ltr_count, lab.tail_run};
    j["children"] = nlohmann::ordered_json::array();
    for (const PermTree& c : t.children) j["children"].push_back(tree_json(c));
    return j;
}

nlohmann::ordered_json skeleton_json(const SkeletonTree& t) {
    nlohmann::ordered_json j;
    j["label"] = {t.node.ltr_count, t.node.tail_run};
    j["children"] = nlohmann::ordered_json::array();
    for (const SkeletonTree& c : t.children) j["children"].push_back(skeleton_json(c));
    return j;
}

}  // namespace

std::uint64_t PermTree::node_count() const {
    std::uint64_t n = 1;
    for (const PermTree& c : children) n += c.node_count();
    return n;
}

std::uint64_t PermTree::leaf_count() const {
    if (children.empty()) return 1;
    std::uint64_t n = 0;
    for (const PermTree& c : children) n += c.leaf_count();
    return n;
}

int PermTree::depth() const {
    int d = 0;
    for (const PermTree& c : children) d = std::max(d, 1 + c.depth());
    return d;
}

std::uint64_t SkeletonTree::node_count() const {
    std::uint64_t n = 1;
    for (const SkeletonTree& c : children) n += c.node_count();
    return n;
}

int SkeletonTree::depth() const {
    int d = 0;
    for (const SkeletonTree& c : children) d = std::max(d, 1 + c.depth());
    return d;
}

bool SkeletonTree::operator==(const SkeletonTree& other) const {
    return node == other.node && identity_root == other.identity_root &&
           children == other.children;
}

PermTree build_tree(const Permutation& pi, std::uint64_t max_nodes) {
    std::uint64_t budget = max_nodes;
    return build_tree_rec(pi, max_nodes, budget);
}

std::uint64_t visit_tree(const Permutation& root,
                         const std::function<void(const Permutation&, int)>& fn,
                         std::uint64_t max_nodes) {
    std::uint64_t budget = max_nodes;
    return visit_tree_rec(root, 0, fn, max_nodes, budget);
}

SkeletonTree skeleton_of(const PermTree& t) {
    SkeletonTree s = skeleton_of_rec(t);
    s.identity_root = t.node.is_identity();
    return s;
}

std::vector<std::pair<Label, BigInt>> children_label_multiset(const Label& lab,
                                                              bool identity_root) {
    validate_label(lab, "children_label_multiset");
    const int k = lab.ltr_count;
    const int m = lab.tail_run;
    std::map<Label, BigInt> mult;
    for (int h = 0; h <= m - 2; ++h) {
        for (int i = 1; i <= k - 1 - h; ++i) {
            mult[Label{k - i, h}] += big_binomial(k - 2 - h, i - 1);
        }
    }
    if (!identity_root && m >= 1) {
        for (int i = 0; i <= k - m; ++i) {
            mult[Label{k - i, m - 1}] += big_binomial(k - m, i);
        }
    }
    std::vector<std::pair<Label, BigInt>> out(mult.begin(), mult.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return skeleton_label_order(a.first, b.first);
    });
    return out;
}

SkeletonTree build_skeleton(const Label& lab, bool identity_root,
                            std::uint64_t max_nodes) {
    validate_label(lab, "build_skeleton");
    if (identity_root != (lab.ltr_count == lab.tail_run)) {
        throw std::invalid_argument(
            identity_root ? "build_skeleton: identity skeletons need a label (n,n)"
                          : "build_skeleton: label " + format_label(lab) +
                                " belongs to an identity permutation");
    }
    std::uint64_t budget = max_nodes;
    return build_skeleton_rec(lab, identity_root, max_nodes, budget);
}

Permutation canonical_child(const Permutation& pi) {
    if (pi.is_identity()) {
        throw std::invalid_argument("canonical_child: identity has no companion child");
    }
    const BlockDecomposition dec = decompose(pi);
    const int n = pi.size();
    const int ell = dec.block_count();

    std::vector<int> placed_value(static_cast<size_t>(n) + 1, 0);  // by position
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    int prefix = 0;  // m_1 + p_1 + ... up to the current block pair
    for (int i = 1; i <= ell - 1; ++i) {
        const int pos = prefix + dec.maxima_length(i);
        const int val = prefix + dec.maxima_length(i) + dec.rest_length(i);
        placed_value[static_cast<size_t>(pos)] = val;
        used[static_cast<size_t>(val)] = true;
        prefix = val;
    }

    std::vector<int> out(static_cast<size_t>(n));
    int next = 1;
    for (int pos = 1; pos <= n; ++pos) {
        if (placed_value[static_cast<size_t>(pos)] != 0) {
            out[static_cast<size_t>(pos - 1)] = placed_value[static_cast<size_t>(pos)];
        } else {
            while (used[static_cast<size_t>(next)]) ++next;
            out[static_cast<size_t>(pos - 1)] = next++;
        }
    }
    return Permutation(std::move(out));
}

int depth_of_label(const Label& lab, bool identity_root) {
    validate_label(lab, "depth_of_label");
    return identity_root ? lab.ltr_count - 1 : lab.tail_run;
}

BigInt nodes_at_height(const Label& lab, int j) {
    validate_label(lab, "nodes_at_height");
    require_non_identity_label(lab, "nodes_at_height");
    if (j < 0 || j > lab.tail_run) return 0;
    return big_factorial(j) * big_pow(j + 1, lab.ltr_count - j);
}

BigInt count_nodes(const Label& lab) {
    validate_label(lab, "count_nodes");
    require_non_identity_label(lab, "count_nodes");
    BigInt total = 0;
    for (int j = 0; j <= lab.tail_run; ++j) total += nodes_at_height(lab, j);
    return total;
}

BigInt leaves_at_height(const Label& lab, int j) {
    validate_label(lab, "leaves_at_height");
    require_non_identity_label(lab, "leaves_at_height");
    const int k = lab.ltr_count;
    const int m = lab.tail_run;
    if (j < 0 || j > m) return 0;
    if (j == 0) return m == 0 ? 1 : 0;
    if (j == m) return big_factorial(m) * big_pow(m + 1, k - m);
    return big_factorial(j) * j * big_pow(j + 1, k - j - 1);
}

BigInt count_leaves(const Label& lab) {
    validate_label(lab, "count_leaves");
    require_non_identity_label(lab, "count_leaves");
    BigInt total = 0;
    for (int j = 0; j <= lab.tail_run; ++j) total += leaves_at_height(lab, j);
    return total;
}

HeightProfile height_profile(const Label& lab, bool identity_root) {
    validate_label(lab, "height_profile");
    HeightProfile prof;
    if (identity_root) {
        if (lab.ltr_count != lab.tail_run) {
            throw std::invalid_argument("height_profile: identity roots need label (n,n)");
        }
        const int n = lab.ltr_count;
        for (int j = 0; j <= n - 1; ++j) {
            prof.levels.push_back(HeightLevel{nodes_f(n, j), leaves_g(n, j)});
        }
    } else {
        require_non_identity_label(lab, "height_profile");
        for (int j = 0; j <= lab.tail_run; ++j) {
            prof.levels.push_back(
                HeightLevel{nodes_at_height(lab, j), leaves_at_height(lab, j)});
        }
    }
    return prof;
}

std::string tree_to_dot(const PermTree& t) {
    std::string out = "digraph preimages {\n";
    dot_nodes(t, out);
    dot_edges(t, out);
    out += "}\n";
    return out;
}

std::string tree_to_json(const PermTree& t) {
    return tree_json(t).dump() + "\n";
}

std::string skeleton_to_json(const SkeletonTree& t) {
    return skeleton_json(t).dump() + "\n";
}

}  // namespace bubble
