#include "zetamoments/combinatorics.hpp"

#include <string>
#include <vector>

#include "zetamoments/errors.hpp"

namespace zm {

namespace {

// Tables are built once on first use; function-local statics make that thread-safe.

const std::vector<Rational>& bernoulli_table() {
    static const std::vector<Rational> table = [] {
        std::vector<Rational> b(kMaxBernoulli + 1);
        // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1, B_0 = 1.
        b[0] = 1;
        for (int m = 1; m <= kMaxBernoulli; ++m) {
            Rational acc = 0;
            for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
            b[m] = -acc / Rational(m + 1);
        }
        return b;
    }();
    return table;
}

const std::vector<std::vector<BigInt>>& stirling_table() {
    static const std::vector<std::vector<BigInt>> table = [] {
        std::vector<std::vector<BigInt>> s(kMaxStirling + 1, std::vector<BigInt>(kMaxStirling + 1));
        s[0][0] = 1;
        for (int n = 1; n <= kMaxStirling; ++n)
            for (int j = 1; j <= n; ++j) s[n][j] = j * s[n - 1][j] + s[n - 1][j - 1];
        return s;
    }();
    return table;
}

}  // namespace

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

const Rational& bernoulli_exact(int n) {
    if (n < 0 || n > kMaxBernoulli)
        throw DomainError("bernoulli: index " + std::to_string(n) + " outside [0, 64]");
    return bernoulli_table()[static_cast<std::size_t>(n)];
}

double bernoulli(int n) { return to_double(bernoulli_exact(n)); }

double bernoulli_over_factorial(int n) {
    return to_double(bernoulli_exact(n) / Rational(factorial(n)));
}

const BigInt& stirling2(int n, int j) {
    if (n < 0 || j < 0 || n > kMaxStirling || j > kMaxStirling)
        throw DomainError("stirling2: index outside [0, 64]");
    return stirling_table()[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

double to_double(const Rational& q) { return q.convert_to<double>(); }
double to_double(const BigInt& n) { return n.convert_to<double>(); }

}  // namespace zm
