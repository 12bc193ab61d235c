#ifndef BUBBLE_PREIMAGE_HPP
#define BUBBLE_PREIMAGE_HPP

#include <cstdint>
#include <vector>

#include "bubble/numbers.hpp"
#include "bubble/permutation.hpp"

namespace bubble {

/// A subset of the left-to-right maxima of some sigma, excluding n.
/// Values are kept sorted increasing.
struct LtrSubset {
    std::vector<int> chosen;
};

/// Subset for a bitmask over the k-1 eligible maxima of sigma, least
/// significant bit = smallest maximum. This fixes the canonical enumeration
/// order of preimages. Requires sigma to end with its maximum.
LtrSubset subset_from_mask(const Permutation& sigma, std::uint64_t mask);

/// All preimages of sigma under the pass, in canonical mask order
/// (mask = 0, 1, ..., 2^(k-1)-1). Empty iff sigma does not end with its
/// maximum. For sigma = id the result includes id itself; the tree module
/// filters it out.
std::vector<Permutation> preimages(const Permutation& sigma);

/// The preimage corresponding to a chosen subset S = {s_1 < ... < s_j}:
/// writing sigma = B_0 s_1 B_1 ... s_j B_j n, returns
/// s_1 B_0 s_2 B_1 ... s_j B_{j-1} n B_j.
/// Throws std::invalid_argument if sigma does not end with its maximum or a
/// chosen value is not an eligible left-to-right maximum (names the value).
Permutation preimage_from_subset(const Permutation& sigma, const LtrSubset& s);

/// 2^(k-1) if sigma ends with its maximum (k = number of left-to-right
/// maxima), else 0.
BigInt count_preimages(const Permutation& sigma);

/// Number of preimages with exactly j left-to-right maxima: C(k-1, j-1).
/// Out-of-range j yields 0.
BigInt count_preimages_with_ltr(const Permutation& sigma, int j);

/// Number of size-n permutations with exactly 2^(k-1) preimages:
/// the unsigned Stirling number [n-1 atop k-1].
BigInt count_by_preimage_count(int n, int k);

enum class StepAction { forced_swap, optional_swap, optional_stay };

const char* step_action_name(StepAction a);

struct ProcedureStep {
    int index;  // position of the distinguished element, n down to 2
    StepAction action;
    Permutation state;  // the sequence after this step
};

/// Step-by-step run of the distinguished-element procedure that produces
/// preimage_from_subset(sigma, s): the distinguished element walks left,
/// forced past non-maxima, and hands the baton to each chosen maximum.
struct ProcedureTrace {
    std::vector<ProcedureStep> steps;
};

ProcedureTrace procedure_trace(const Permutation& sigma, const LtrSubset& s);

}  // namespace bubble

#endif
