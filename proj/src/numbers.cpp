#include "bubble/numbers.hpp"

#include <stdexcept>

namespace bubble {

BigInt big_factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt big_binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

BigInt big_pow(const BigInt& base, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp == 0) return 1;
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

BigInt stirling_first(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    // [n atop k] = [n-1 atop k-1] + (n-1) [n-1 atop k], row by row.
    std::vector<BigInt> row{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<size_t>(m) + 1, 0);
        for (int j = 0; j < m; ++j) {
            if (j + 1 <= m) next[static_cast<size_t>(j) + 1] += row[static_cast<size_t>(j)];
            next[static_cast<size_t>(j)] += BigInt(m - 1) * row[static_cast<size_t>(j)];
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

double to_double(const BigRational& r) {
    return r.convert_to<double>();
}

}  // namespace bubble
