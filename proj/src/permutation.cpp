#include "bubble/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bubble {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
    if (vals_.empty()) throw std::invalid_argument("empty permutation");
    const int n = static_cast<int>(vals_.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : vals_) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("value " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        }
        if (seen[static_cast<size_t>(v - 1)]) {
            throw std::invalid_argument("duplicate value " + std::to_string(v));
        }
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation size must be at least 1");
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (vals_[static_cast<size_t>(i)] != i + 1) return false;
    return true;
}

std::vector<int> BlockDecomposition::concatenate() const {
    std::vector<int> out;
    for (size_t i = 0; i < maxima_blocks.size(); ++i) {
        out.insert(out.end(), maxima_blocks[i].begin(), maxima_blocks[i].end());
        if (i < rest_blocks.size())
            out.insert(out.end(), rest_blocks[i].begin(), rest_blocks[i].end());
    }
    return out;
}

std::string format_label(const Label& lab) {
    return "(" + std::to_string(lab.ltr_count) + "," + std::to_string(lab.tail_run) + ")";
}

Permutation bubble_pass(const Permutation& p) {
    // p = mu_1 A_1 ... mu_k A_k with mu_i the left-to-right maxima;
    // the pass yields A_1 mu_1 ... A_k mu_k.
    std::vector<int> out;
    out.reserve(static_cast<size_t>(p.size()));
    int pending_max = p[0];
    for (int i = 1; i < p.size(); ++i) {
        if (p[i] > pending_max) {
            out.push_back(pending_max);
            pending_max = p[i];
        } else {
            out.push_back(p[i]);
        }
    }
    out.push_back(pending_max);
    return Permutation(std::move(out));
}

LtrMaxima ltr_maxima(const Permutation& p) {
    LtrMaxima res;
    int best = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (p[i] > best) {
            best = p[i];
            res.positions.push_back(i + 1);
            res.values.push_back(p[i]);
        }
    }
    return res;
}

BlockDecomposition decompose(const Permutation& p) {
    const LtrMaxima lm = ltr_maxima(p);
    BlockDecomposition dec;
    std::vector<bool> is_max(static_cast<size_t>(p.size()) + 1, false);
    for (int pos : lm.positions) is_max[static_cast<size_t>(pos)] = true;

    std::vector<int> cur;
    bool in_max_run = true;  // position 1 is always a maximum
    for (int i = 1; i <= p.size(); ++i) {
        const bool mx = is_max[static_cast<size_t>(i)];
        if (mx != in_max_run) {
            if (in_max_run)
                dec.maxima_blocks.push_back(std::move(cur));
            else
                dec.rest_blocks.push_back(std::move(cur));
            cur.clear();
            in_max_run = mx;
        }
        cur.push_back(p[i - 1]);
    }
    if (in_max_run) {
        dec.maxima_blocks.push_back(std::move(cur));
    } else {
        dec.rest_blocks.push_back(std::move(cur));
        dec.maxima_blocks.emplace_back();  // trailing M_ell is empty
    }
    return dec;
}

Label label_of(const Permutation& p) {
    const BlockDecomposition dec = decompose(p);
    int k = 0;
    for (const auto& m : dec.maxima_blocks) k += static_cast<int>(m.size());
    return Label{k, static_cast<int>(dec.maxima_blocks.back().size())};
}

bool ends_with_max(const Permutation& p) {
    return p[p.size() - 1] == p.size();
}

Normalized normalize(const std::vector<int>& seq) {
    if (seq.empty()) throw std::invalid_argument("empty sequence");
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1])
            throw std::invalid_argument("duplicate value " + std::to_string(sorted[i]));
    }
    std::vector<int> ranks(seq.size());
    for (size_t i = 0; i < seq.size(); ++i) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), seq[i]);
        ranks[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Normalized{Permutation(std::move(ranks)), std::move(sorted)};
}

int passes_to_sort(const Permutation& p) {
    Permutation cur = p;
    int t = 0;
    while (!cur.is_identity()) {
        cur = bubble_pass(cur);
        ++t;
    }
    return t;
}

Permutation parse_permutation(std::string_view text) {
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<int> vals;
    int v;
    while (in >> v) vals.push_back(v);
    if (!in.eof()) {
        std::string tok;
        in.clear();
        in >> tok;
        throw std::invalid_argument("invalid token '" + tok + "' in permutation");
    }
    return Permutation(std::move(vals));  // range/duplicate checks live in the ctor
}

std::string format_permutation(const Permutation& p) {
    std::string out;
    for (int i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p[i]);
    }
    return out;
}

}  // namespace bubble
