#ifndef BUBBLE_PERMUTATION_HPP
#define BUBBLE_PERMUTATION_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace bubble {

/// A permutation of {1..n} in one-line notation. Values are stored
/// 0-indexed internally; every position reported to callers (left-to-right
/// maxima, block boundaries) is 1-indexed, matching the usual convention.
///
/// Instances are immutable after construction and validated on entry:
/// the constructor rejects anything that is not a bijection onto {1..n}.
class Permutation {
public:
    /// Throws std::invalid_argument naming the first out-of-range or
    /// duplicate value.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(vals_.size()); }
    int operator[](int i) const { return vals_[static_cast<size_t>(i)]; }
    const std::vector<int>& values() const { return vals_; }

    bool is_identity() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> vals_;
};

struct LtrMaxima {
    std::vector<int> positions;  // strictly increasing, 1-indexed; front() == 1
    std::vector<int> values;     // strictly increasing; back() == n
    int count() const { return static_cast<int>(values.size()); }
};

/// The factorization p = M_1 P_1 ... M_{ell-1} P_{ell-1} M_ell into maximal
/// runs M_i of consecutive left-to-right maxima and the gaps P_i between
/// them. Every P_i is nonempty; every M_i is nonempty except possibly the
/// last (empty exactly when p does not end with its maximum).
struct BlockDecomposition {
    std::vector<std::vector<int>> maxima_blocks;  // M_1 .. M_ell
    std::vector<std::vector<int>> rest_blocks;    // P_1 .. P_{ell-1}

    int block_count() const { return static_cast<int>(maxima_blocks.size()); }
    int maxima_length(int i) const {  // m_i, 1-indexed
        return static_cast<int>(maxima_blocks[static_cast<size_t>(i - 1)].size());
    }
    int rest_length(int i) const {  // p_i, 1-indexed
        return static_cast<int>(rest_blocks[static_cast<size_t>(i - 1)].size());
    }
    /// Concatenation of all blocks in order; equals the decomposed permutation.
    std::vector<int> concatenate() const;
};

/// (k, m): total number of left-to-right maxima and length of the trailing
/// run of them (0 when the permutation does not end with its maximum).
/// k == m exactly for identity permutations.
struct Label {
    int ltr_count = 0;  // k
    int tail_run = 0;   // m_ell

    auto operator<=>(const Label&) const = default;
};

std::string format_label(const Label& lab);

/// One bubblesort pass. Implemented via the left-to-right-maxima
/// factorization (each maximum slides right up to the next one), O(n).
/// The literal adjacent-swap scan lives in the oracle as a cross-check.
Permutation bubble_pass(const Permutation& p);

LtrMaxima ltr_maxima(const Permutation& p);

BlockDecomposition decompose(const Permutation& p);

Label label_of(const Permutation& p);

/// True iff the last element is n, i.e. p is in the image of the pass.
bool ends_with_max(const Permutation& p);

struct Normalized {
    Permutation perm;
    std::vector<int> original_values;  // original_values[v-1] = source value of rank v
};

/// Order-isomorphic permutation of a sequence of distinct integers, plus the
/// map back to the original values. The only entry point for sequences that
/// are not permutations; throws std::invalid_argument on duplicates.
Normalized normalize(const std::vector<int>& seq);

/// Least t with B^t(p) = identity. Equals the height of p in the preimage
/// tree of the identity; at most n-1, with equality iff p ends with value 1.
int passes_to_sort(const Permutation& p);

/// Parses decimal integers separated by single spaces or commas.
/// Rejects duplicates and gaps, naming the first violation.
Permutation parse_permutation(std::string_view text);

/// Space-joined one-line notation, e.g. "2 1 4 3".
std::string format_permutation(const Permutation& p);

}  // namespace bubble

#endif
