#include "bubble/analytics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace bubble {

BigInt phi_avoiders(int n, int k) {
    if (n < 1) throw std::invalid_argument("phi_avoiders: n must be >= 1");
    if (k < 2) throw std::invalid_argument("phi_avoiders: pattern size must be >= 2");
    if (n < k) return big_factorial(n);
    return big_pow(k - 1, n - k + 1) * big_factorial(k - 1);
}

BigInt nodes_up_to_height(int n, int j) {
    if (j < 0) return 0;
    return phi_avoiders(n, j + 2);
}

BigInt nodes_f(int n, int k) {
    if (n < 1) throw std::invalid_argument("nodes_f: n must be >= 1");
    if (k < 0 || k > n - 1) return 0;
    return big_factorial(k) * (big_pow(k + 1, n - k) - big_pow(k, n - k));
}

BigInt gamma_avoiders(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("gamma_avoiders: n, k must be >= 1");
    if (k == 1) return 0;  // the size-1 pattern is contained in everything
    if (n < k) return BigInt(n - 1) * big_factorial(n - 1);
    return BigInt(k - 2) * big_pow(k - 1, n - k) * big_factorial(k - 1);
}

BigInt leaves_up_to_height(int n, int j) {
    if (j < 0) return 0;
    return gamma_avoiders(n, j + 2);
}

BigInt leaves_g(int n, int k) {
    if (n < 1) throw std::invalid_argument("leaves_g: n must be >= 1");
    if (k < 1 || k > n - 1) return 0;  // the root ends with its max, never a leaf
    return big_factorial(k) *
           (BigInt(k) * big_pow(k + 1, n - k - 1) - BigInt(k - 1) * big_pow(k, n - k - 1));
}

BigRational ramanujan_P(int n) {
    if (n < 1) throw std::invalid_argument("ramanujan_P: n must be >= 1");
    BigInt numer = 0;
    for (int k = 0; k <= n - 1; ++k) {
        numer += big_factorial(k) * big_pow(k, n - k);
    }
    return BigRational(numer, big_factorial(n));
}

BigRational avg_node_height(int n) {
    if (n < 1) throw std::invalid_argument("avg_node_height: n must be >= 1");
    return BigRational(n - 1) - ramanujan_P(n);
}

BigRational avg_leaf_height(int n) {
    if (n < 2) throw std::invalid_argument("avg_leaf_height: needs n >= 2 (no leaves otherwise)");
    const BigRational pn = ramanujan_P(n);
    const BigRational pn1 = ramanujan_P(n - 1);
    return BigRational(n - 1) - BigRational(n) * pn / (n - 1) +
           (pn1 + 1) / BigRational(n - 1);
}

AsymptoticGap asymptotic_gap(int n) {
    AsymptoticGap gap;
    gap.node_height = avg_node_height(n);
    gap.node_height_approx = to_double(gap.node_height);
    gap.reference = n - std::sqrt(std::numbers::pi * n / 2.0);
    gap.node_gap = gap.node_height_approx - gap.reference;
    if (n >= 2) {
        gap.leaf_height = avg_leaf_height(n);
        gap.leaf_height_approx = to_double(*gap.leaf_height);
        gap.leaf_gap = gap.leaf_height_approx - gap.reference;
    }
    return gap;
}

CountTriangle stirling_triangle(int n_max) {
    CountTriangle t;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<BigInt> row;
        for (int k = 0; k <= n - 1; ++k) row.push_back(stirling_first(n - 1, k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

CountTriangle node_triangle(int n_max) {
    CountTriangle t;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<BigInt> row;
        for (int k = 0; k <= n - 1; ++k) row.push_back(nodes_f(n, k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

CountTriangle leaf_triangle(int n_max) {
    CountTriangle t;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<BigInt> row;
        for (int k = 0; k <= n - 1; ++k) row.push_back(leaves_g(n, k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string format_triangle(const CountTriangle& t) {
    const int n_max = t.max_n();
    std::vector<size_t> width(static_cast<size_t>(n_max), 0);
    size_t nwidth = 3;  // "n\k"
    for (int n = 1; n <= n_max; ++n) {
        nwidth = std::max(nwidth, std::to_string(n).size());
        for (int k = 0; k <= n - 1; ++k) {
            width[static_cast<size_t>(k)] =
                std::max({width[static_cast<size_t>(k)], t.at(n, k).str().size(),
                          std::to_string(k).size()});
        }
    }
    auto pad = [](const std::string& s, size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    std::string out = pad("n\\k", nwidth);
    for (int k = 0; k <= n_max - 1; ++k)
        out += "  " + pad(std::to_string(k), width[static_cast<size_t>(k)]);
    out += '\n';
    for (int n = 1; n <= n_max; ++n) {
        out += pad(std::to_string(n), nwidth);
        for (int k = 0; k <= n - 1; ++k)
            out += "  " + pad(t.at(n, k).str(), width[static_cast<size_t>(k)]);
        out += '\n';
    }
    return out;
}

std::string format_triangle_csv(const CountTriangle& t) {
    std::string out = "n,k,value\n";
    for (int n = 1; n <= t.max_n(); ++n) {
        for (int k = 0; k <= n - 1; ++k) {
            out += std::to_string(n) + "," + std::to_string(k) + "," + t.at(n, k).str() + "\n";
        }
    }
    return out;
}

std::string format_rational(const BigRational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_rational_with_approx(const BigRational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", to_double(r));
    return format_rational(r) + " (≈ " + buf + ")";
}

}  // namespace bubble
