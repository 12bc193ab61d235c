#include "bubble/recognizer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace bubble {

namespace {

UnlabeledTree parse_paren_at(std::string_view s, size_t& pos) {
    if (pos >= s.size() || s[pos] != '(') {
        throw std::invalid_argument("parse error at position " + std::to_string(pos + 1) +
                                    ": expected '('");
    }
    ++pos;
    UnlabeledTree node;
    while (pos < s.size() && s[pos] == '(') {
        node.children.push_back(parse_paren_at(s, pos));
    }
    if (pos >= s.size() || s[pos] != ')') {
        throw std::invalid_argument("parse error at position " + std::to_string(pos + 1) +
                                    ": unbalanced '('");
    }
    ++pos;
    return node;
}

UnlabeledTree shape_from_json_node(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("children") || !j["children"].is_array()) {
        throw std::invalid_argument("shape JSON: expected objects with a \"children\" array");
    }
    UnlabeledTree node;
    for (const auto& c : j["children"]) node.children.push_back(shape_from_json_node(c));
    return node;
}

bool is_power_of_two(std::uint64_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

int log2_exact(std::uint64_t v) {
    int b = 0;
    while (v >>= 1) ++b;
    return b;
}

struct Failure {
    std::string path;
    std::string reason;
};

using DepthMap = std::unordered_map<const UnlabeledTree*, int>;

int compute_depths(const UnlabeledTree& t, DepthMap& depths) {
    int d = 0;
    for (const UnlabeledTree& c : t.children) d = std::max(d, 1 + compute_depths(c, depths));
    depths.emplace(&t, d);
    return d;
}

// Checks that `node` (already canonical) is the skeleton of a tree whose
// root has label `lab`. Non-leaf children pin their own label via degree and
// depth, so one pass of multiset subtraction suffices; leaves fill the
// remaining (k', 0) slots by count.
std::optional<Failure> verify_against_label(const UnlabeledTree& node, const Label& lab,
                                            bool identity_root, const std::string& path,
                                            const DepthMap& depths) {
    std::map<Label, BigInt> expected;
    BigInt leaf_slots = 0;
    for (const auto& [child, mult] : children_label_multiset(lab, identity_root)) {
        if (child.tail_run == 0) {
            leaf_slots += mult;
        } else {
            expected[child] = mult;
        }
    }

    BigInt actual_leaves = 0;
    for (size_t i = 0; i < node.children.size(); ++i) {
        const UnlabeledTree& c = node.children[i];
        const std::string cpath = path + "/" + std::to_string(i);
        if (c.children.empty()) {
            ++actual_leaves;
            continue;
        }
        const std::uint64_t degree = c.children.size();
        if (!is_power_of_two(degree)) {
            return Failure{cpath, "child degree " + std::to_string(degree) +
                                      " is not a power of two"};
        }
        const Label child_lab{log2_exact(degree) + 1, depths.at(&c)};
        if (child_lab.tail_run > child_lab.ltr_count - 1) {
            return Failure{cpath, "depth " + std::to_string(child_lab.tail_run) +
                                      " too large for degree " + std::to_string(degree)};
        }
        auto it = expected.find(child_lab);
        if (it == expected.end() || it->second == 0) {
            return Failure{cpath, "unexpected child label " + format_label(child_lab)};
        }
        --it->second;
        if (auto fail = verify_against_label(c, child_lab, false, cpath, depths)) return fail;
    }

    if (actual_leaves != leaf_slots) {
        return Failure{path, "expected " + leaf_slots.str() + " leaf children, found " +
                                 actual_leaves.str()};
    }
    for (const auto& [child_lab, remaining] : expected) {
        if (remaining != 0) {
            return Failure{path, "missing " + remaining.str() + " child(ren) with label " +
                                     format_label(child_lab)};
        }
    }
    return std::nullopt;
}

}  // namespace

std::uint64_t UnlabeledTree::node_count() const {
    std::uint64_t n = 1;
    for (const UnlabeledTree& c : children) n += c.node_count();
    return n;
}

int UnlabeledTree::depth() const {
    int d = 0;
    for (const UnlabeledTree& c : children) d = std::max(d, 1 + c.depth());
    return d;
}

UnlabeledTree parse_paren(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t\r\n");
    size_t end = text.find_last_not_of(" \t\r\n");
    if (begin == std::string_view::npos) {
        throw std::invalid_argument("parse error at position 1: empty input");
    }
    std::string_view s = text.substr(begin, end - begin + 1);
    size_t pos = 0;
    UnlabeledTree t = parse_paren_at(s, pos);
    if (pos != s.size()) {
        throw std::invalid_argument("parse error at position " +
                                    std::to_string(begin + pos + 1) +
                                    ": trailing input after root");
    }
    return t;
}

std::string serialize_paren(const UnlabeledTree& t) {
    std::vector<std::string> parts;
    parts.reserve(t.children.size());
    for (const UnlabeledTree& c : t.children) parts.push_back(serialize_paren(c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const std::string& p : parts) out += p;
    out += ")";
    return out;
}

UnlabeledTree canonicalize(const UnlabeledTree& t) {
    std::vector<std::pair<std::string, UnlabeledTree>> keyed;
    keyed.reserve(t.children.size());
    for (const UnlabeledTree& c : t.children) {
        UnlabeledTree canon = canonicalize(c);
        keyed.emplace_back(serialize_paren(canon), std::move(canon));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    UnlabeledTree out;
    out.children.reserve(keyed.size());
    for (auto& [key, child] : keyed) out.children.push_back(std::move(child));
    return out;
}

UnlabeledTree shape_of(const SkeletonTree& t) {
    UnlabeledTree out;
    out.children.reserve(t.children.size());
    for (const SkeletonTree& c : t.children) out.children.push_back(shape_of(c));
    return out;
}

UnlabeledTree shape_from_json(std::string_view json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, true);
    return shape_from_json_node(j);
}

RecognitionVerdict recognize(const UnlabeledTree& t) {
    const UnlabeledTree canon = canonicalize(t);
    RecognitionVerdict v;

    if (canon.children.empty()) {
        // Realizable both as the tree of any (k,0) permutation and as the
        // whole tree for size 1.
        v.accepted = true;
        v.as_label = Label{1, 0};
        v.as_identity = 1;
        return v;
    }

    DepthMap depths;
    const int m = compute_depths(canon, depths);
    const std::uint64_t degree = canon.children.size();

    if (m < 63 && degree == (std::uint64_t{1} << m) - 1) {
        const Label candidate{m + 1, m + 1};
        if (auto fail = verify_against_label(canon, candidate, true, "root", depths)) {
            v.reject_path = fail->path;
            v.reason = fail->reason;
            return v;
        }
        v.accepted = true;
        v.as_identity = m + 1;
        return v;
    }

    if (is_power_of_two(degree)) {
        const Label candidate{log2_exact(degree) + 1, m};
        if (candidate.tail_run > candidate.ltr_count - 1) {
            v.reject_path = "root";
            v.reason = "depth " + std::to_string(m) + " too large for degree " +
                       std::to_string(degree);
            return v;
        }
        if (auto fail = verify_against_label(canon, candidate, false, "root", depths)) {
            v.reject_path = fail->path;
            v.reason = fail->reason;
            return v;
        }
        v.accepted = true;
        v.as_label = candidate;
        return v;
    }

    v.reject_path = "root";
    v.reason = "root degree " + std::to_string(degree) +
               " is neither 2^depth - 1 nor a power of two";
    return v;
}

}  // namespace bubble
