#include "bubble/preimage.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bubble/errors.hpp"

namespace bubble {

namespace {

std::vector<int> eligible_maxima(const Permutation& sigma) {
    std::vector<int> vals = ltr_maxima(sigma).values;
    vals.pop_back();  // drop n, always last
    return vals;
}

void require_ends_with_max(const Permutation& sigma, const char* op) {
    if (!ends_with_max(sigma)) {
        throw std::invalid_argument(std::string(op) +
                                    ": permutation does not end with its maximum");
    }
}

}  // namespace

LtrSubset subset_from_mask(const Permutation& sigma, std::uint64_t mask) {
    require_ends_with_max(sigma, "subset_from_mask");
    const std::vector<int> eligible = eligible_maxima(sigma);
    if (eligible.size() < 64 && mask >> eligible.size()) {
        throw std::invalid_argument("subset mask " + std::to_string(mask) +
                                    " out of range for " + std::to_string(eligible.size()) +
                                    " eligible maxima");
    }
    LtrSubset s;
    for (size_t b = 0; b < eligible.size(); ++b) {
        if (mask >> b & 1) s.chosen.push_back(eligible[b]);
    }
    return s;
}

Permutation preimage_from_subset(const Permutation& sigma, const LtrSubset& s) {
    require_ends_with_max(sigma, "preimage_from_subset");
    const int n = sigma.size();
    std::vector<bool> is_ltr(static_cast<size_t>(n) + 1, false);
    for (int v : ltr_maxima(sigma).values) is_ltr[static_cast<size_t>(v)] = true;

    std::vector<bool> chosen(static_cast<size_t>(n) + 1, false);
    for (int v : s.chosen) {
        if (v < 1 || v > n || !is_ltr[static_cast<size_t>(v)] || v == n) {
            throw std::invalid_argument("chosen value " + std::to_string(v) +
                                        " is not an eligible left-to-right maximum");
        }
        chosen[static_cast<size_t>(v)] = true;
    }

    // sigma = B_0 s_1 B_1 ... s_j B_j n  ->  s_1 B_0 s_2 B_1 ... s_j B_{j-1} n B_j.
    // Single left-to-right rebuild: each chosen maximum (and finally n) jumps
    // in front of the segment it used to close.
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    std::vector<int> segment;  // current B_i
    for (int i = 0; i < n; ++i) {
        const int v = sigma[i];
        if (v == n || chosen[static_cast<size_t>(v)]) {
            out.push_back(v);
            out.insert(out.end(), segment.begin(), segment.end());
            segment.clear();
        } else {
            segment.push_back(v);
        }
    }
    // sigma ends with n, so the last segment was flushed by the n branch.
    return Permutation(std::move(out));
}

std::vector<Permutation> preimages(const Permutation& sigma) {
    if (!ends_with_max(sigma)) return {};
    const size_t eligible = eligible_maxima(sigma).size();
    if (eligible >= 63) {
        throw CapExceeded("preimages: 2^" + std::to_string(eligible) +
                          " preimages cannot be materialized");
    }
    std::vector<Permutation> out;
    out.reserve(size_t{1} << eligible);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << eligible); ++mask) {
        out.push_back(preimage_from_subset(sigma, subset_from_mask(sigma, mask)));
    }
    return out;
}

BigInt count_preimages(const Permutation& sigma) {
    if (!ends_with_max(sigma)) return 0;
    return big_pow(2, ltr_maxima(sigma).count() - 1);
}

BigInt count_preimages_with_ltr(const Permutation& sigma, int j) {
    if (!ends_with_max(sigma)) return 0;
    return big_binomial(ltr_maxima(sigma).count() - 1, j - 1);
}

BigInt count_by_preimage_count(int n, int k) {
    if (n < 1 || k < 1 || k > n) {
        throw std::invalid_argument("count_by_preimage_count expects 1 <= k <= n");
    }
    return stirling_first(n - 1, k - 1);
}

const char* step_action_name(StepAction a) {
    switch (a) {
        case StepAction::forced_swap: return "forced-swap";
        case StepAction::optional_swap: return "optional-swap";
        case StepAction::optional_stay: return "optional-stay";
    }
    return "?";
}

ProcedureTrace procedure_trace(const Permutation& sigma, const LtrSubset& s) {
    require_ends_with_max(sigma, "procedure_trace");
    const int n = sigma.size();
    std::vector<bool> is_ltr(static_cast<size_t>(n) + 1, false);
    for (int v : ltr_maxima(sigma).values) is_ltr[static_cast<size_t>(v)] = true;
    std::vector<bool> chosen(static_cast<size_t>(n) + 1, false);
    for (int v : s.chosen) {
        if (v < 1 || v > n || !is_ltr[static_cast<size_t>(v)] || v == n) {
            throw std::invalid_argument("chosen value " + std::to_string(v) +
                                        " is not an eligible left-to-right maximum");
        }
        chosen[static_cast<size_t>(v)] = true;
    }

    ProcedureTrace trace;
    std::vector<int> cur = sigma.values();
    // At step i the distinguished element sits at position i (1-indexed) and
    // its left neighbor is still sigma_{i-1}, untouched by earlier steps.
    for (int i = n; i >= 2; --i) {
        const int left = sigma[i - 2];
        StepAction action;
        if (!is_ltr[static_cast<size_t>(left)]) {
            action = StepAction::forced_swap;
        } else if (chosen[static_cast<size_t>(left)]) {
            action = StepAction::optional_stay;
        } else {
            action = StepAction::optional_swap;
        }
        if (action != StepAction::optional_stay) {
            std::swap(cur[static_cast<size_t>(i - 2)], cur[static_cast<size_t>(i - 1)]);
        }
        trace.steps.push_back(ProcedureStep{i, action, Permutation(cur)});
    }
    return trace;
}

}  // namespace bubble
