#ifndef BUBBLE_ANALYTICS_HPP
#define BUBBLE_ANALYTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bubble/numbers.hpp"

namespace bubble {

// Exact counting and average-height formulas for the preimage tree over all
// of S_n. Gamma_k is the set of size-k permutations ending in 1; avoiding
// Gamma_{j+2} is the same as being sortable in at most j passes. All pattern
// sizes below use that convention directly.

/// Number of size-n permutations avoiding Gamma_k. Closed form
/// (k-1)^(n-k+1) (k-1)! for n >= k; n! when n < k (nothing of size n can
/// contain a size-k pattern). Throws for k < 2: Gamma_k needs size >= 2.
BigInt phi_avoiders(int n, int k);

/// Number of size-n permutations sortable in at most j passes, i.e. nodes of
/// height <= j in the tree over S_n. Height-indexed wrapper for
/// phi_avoiders(n, j+2).
BigInt nodes_up_to_height(int n, int j);

/// Nodes at height k in the tree over S_n:
/// f(n,k) = k! ((k+1)^(n-k) - k^(n-k)); 0 outside 0 <= k <= n-1.
BigInt nodes_f(int n, int k);

/// Number of size-n permutations avoiding Gamma_k whose last element is not
/// the maximum: (n-1)(n-1)! for n < k, (k-2)(k-1)^(n-k) (k-1)! for n >= k.
/// gamma_avoiders(n, 1) = 0 (the size-1 pattern is unavoidable).
BigInt gamma_avoiders(int n, int k);

/// Leaves of height <= j in the tree over S_n: gamma_avoiders(n, j+2).
BigInt leaves_up_to_height(int n, int j);

/// Leaves at height k in the tree over S_n:
/// g(n,k) = k! (k (k+1)^(n-k-1) - (k-1) k^(n-k-1)) for 1 <= k <= n-1;
/// 0 for k = 0 (the root ends with its max and is never a leaf) and outside
/// the range.
BigInt leaves_g(int n, int k);

/// Ramanujan P-function, P(n) = sum_{k=0}^{n-1} k! k^(n-k) / n!, exact.
BigRational ramanujan_P(int n);

/// Exact average height of a node in the tree over S_n: (n-1) - P(n).
BigRational avg_node_height(int n);

/// Exact average height of a leaf in the tree over S_n:
/// (n-1) - n P(n)/(n-1) + (P(n-1)+1)/(n-1). Requires n >= 2.
BigRational avg_leaf_height(int n);

struct AsymptoticGap {
    BigRational node_height;                  // H_n, exact
    std::optional<BigRational> leaf_height;   // G_n, exact; absent for n = 1
    double node_height_approx = 0.0;
    double leaf_height_approx = 0.0;          // meaningful only when leaf_height is set
    double reference = 0.0;                   // n - sqrt(pi n / 2)
    double node_gap = 0.0;                    // node_height_approx - reference
    double leaf_gap = 0.0;
};

/// Exact averages plus their double approximations and the gap to the
/// asymptotic reference n - sqrt(pi n / 2). Display and sanity checks only;
/// never a source of truth for exact values.
AsymptoticGap asymptotic_gap(int n);

/// Ragged rows n = 1..n_max, entries k = 0..n-1.
struct CountTriangle {
    std::vector<std::vector<BigInt>> rows;

    const BigInt& at(int n, int k) const {
        return rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
    }
    int max_n() const { return static_cast<int>(rows.size()); }
};

/// Row n, entry k: the unsigned Stirling number [n-1 atop k] = number of
/// size-n permutations with exactly 2^k preimages.
CountTriangle stirling_triangle(int n_max);

/// Row n, entry k: nodes_f(n, k). Rows 1..6 reproduce the classic table of
/// permutations by required pass count (OEIS A056151).
CountTriangle node_triangle(int n_max);

/// Row n, entry k: leaves_g(n, k).
CountTriangle leaf_triangle(int n_max);

/// Right-aligned plain-text triangle with an n\k header row.
std::string format_triangle(const CountTriangle& t);

/// "n,k,value" CSV with a header line.
std::string format_triangle_csv(const CountTriangle& t);

/// "p/q" in lowest terms with positive denominator.
std::string format_rational(const BigRational& r);

/// "p/q (~ d.dddddd)" as printed by the CLI.
std::string format_rational_with_approx(const BigRational& r);

}  // namespace bubble

#endif
