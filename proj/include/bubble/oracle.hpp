#ifndef BUBBLE_ORACLE_HPP
#define BUBBLE_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bubble/permutation.hpp"

namespace bubble::oracle {

// Deliberately naive ground truth for differential testing. Nothing in
// here shares algorithm code with the fast paths it checks.

inline constexpr int kDefaultExhaustiveCap = 8;

/// Literal adjacent-swap scan, one left-to-right pass.
Permutation naive_pass(const Permutation& p);

/// Iterated naive passes until sorted.
int naive_passes_to_sort(const Permutation& p);

/// Calls fn once for every permutation of size n, in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

/// All p of size |sigma| with naive_pass(p) == sigma, lexicographically
/// sorted. Throws CapExceeded when |sigma| > cap.
std::vector<Permutation> brute_preimages(const Permutation& sigma,
                                         int cap = kDefaultExhaustiveCap);

/// preimage_map(n)[r] = lexicographic ranks of the preimages of the rank-r
/// permutation, from one sweep of naive_pass over all of S_n.
std::vector<std::vector<std::uint64_t>> preimage_map(int n,
                                                     int cap = kDefaultExhaustiveCap);

/// Lexicographic rank in [0, n!) and its inverse.
std::uint64_t perm_rank(const Permutation& p);
Permutation perm_unrank(int n, std::uint64_t rank);

/// Does p contain a size-k pattern whose last element is the smallest?
/// Equivalently: some element is preceded by at least k-1 larger ones.
bool contains_gamma(const Permutation& p, int k);

struct HeightHistograms {
    std::vector<std::uint64_t> nodes;   // index = height
    std::vector<std::uint64_t> leaves;  // leaves = permutations not ending with their max
};

/// Histograms over all of S_n of the number of naive passes needed to sort,
/// split into all permutations and those outside the image of the pass.
HeightHistograms brute_height_histograms(int n, int cap = kDefaultExhaustiveCap);

/// Per-permutation histograms for every subtree: sweep every p in S_n along
/// its naive-pass trajectory p -> B(p) -> ... -> id and credit p to each
/// permutation it passes through. Entry [r] holds the histograms of the
/// preimage tree rooted at the rank-r permutation.
std::vector<HeightHistograms> brute_subtree_histograms(int n,
                                                       int cap = kDefaultExhaustiveCap);

}  // namespace bubble::oracle

#endif
