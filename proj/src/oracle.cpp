#include "bubble/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bubble/errors.hpp"

namespace bubble::oracle {

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n > cap) {
        throw CapExceeded(std::string(what) + ": size " + std::to_string(n) +
                          " exceeds exhaustive cap " + std::to_string(cap));
    }
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace

Permutation naive_pass(const Permutation& p) {
    std::vector<int> v = p.values();
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] > v[i + 1]) std::swap(v[i], v[i + 1]);
    }
    return Permutation(std::move(v));
}

int naive_passes_to_sort(const Permutation& p) {
    Permutation cur = p;
    int t = 0;
    while (!cur.is_identity()) {
        cur = naive_pass(cur);
        ++t;
    }
    return t;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> brute_preimages(const Permutation& sigma, int cap) {
    check_cap(sigma.size(), cap, "brute_preimages");
    std::vector<Permutation> out;
    for_each_permutation(sigma.size(), [&](const Permutation& p) {
        if (naive_pass(p) == sigma) out.push_back(p);
    });
    return out;
}

std::vector<std::vector<std::uint64_t>> preimage_map(int n, int cap) {
    check_cap(n, cap, "preimage_map");
    std::vector<std::vector<std::uint64_t>> buckets(factorial_u64(n));
    for_each_permutation(n, [&](const Permutation& p) {
        buckets[perm_rank(naive_pass(p))].push_back(perm_rank(p));
    });
    return buckets;
}

std::uint64_t perm_rank(const Permutation& p) {
    const int n = p.size();
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_after = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller_after;
        rank += static_cast<std::uint64_t>(smaller_after) * factorial_u64(n - 1 - i);
    }
    return rank;
}

Permutation perm_unrank(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t f = factorial_u64(i);
        const auto idx = static_cast<size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(out));
}

bool contains_gamma(const Permutation& p, int k) {
    if (k < 2) throw std::invalid_argument("gamma patterns need size >= 2");
    for (int last = 0; last < p.size(); ++last) {
        int larger_before = 0;
        for (int j = 0; j < last; ++j)
            if (p[j] > p[last]) ++larger_before;
        if (larger_before >= k - 1) return true;
    }
    return false;
}

HeightHistograms brute_height_histograms(int n, int cap) {
    check_cap(n, cap, "brute_height_histograms");
    HeightHistograms h;
    h.nodes.assign(static_cast<size_t>(n), 0);
    h.leaves.assign(static_cast<size_t>(n), 0);
    for_each_permutation(n, [&](const Permutation& p) {
        const auto t = static_cast<size_t>(naive_passes_to_sort(p));
        h.nodes[t] += 1;
        if (p[p.size() - 1] != n) h.leaves[t] += 1;
    });
    return h;
}

std::vector<HeightHistograms> brute_subtree_histograms(int n, int cap) {
    check_cap(n, cap, "brute_subtree_histograms");
    std::vector<HeightHistograms> hists(factorial_u64(n));
    for_each_permutation(n, [&](const Permutation& p) {
        const bool leaf = p[p.size() - 1] != n;
        Permutation cur = p;
        int height = 0;
        for (;;) {
            auto& h = hists[perm_rank(cur)];
            if (static_cast<size_t>(height) >= h.nodes.size()) {
                h.nodes.resize(static_cast<size_t>(height) + 1, 0);
                h.leaves.resize(static_cast<size_t>(height) + 1, 0);
            }
            h.nodes[static_cast<size_t>(height)] += 1;
            if (leaf) h.leaves[static_cast<size_t>(height)] += 1;
            if (cur.is_identity()) break;
            cur = naive_pass(cur);
            ++height;
        }
    });
    return hists;
}

}  // namespace bubble::oracle
