#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxBernoulli = 64;
inline constexpr int kMaxStirling = 64;

/// Exact Bernoulli number B_n, 0 <= n <= 64, with B_1 = -1/2.
const Rational& bernoulli_exact(int n);

/// B_n rounded to double.
double bernoulli(int n);

/// B_n / n! rounded to double (Taylor coefficients of z / (e^z - 1)).
double bernoulli_over_factorial(int n);

/// Stirling number of the second kind S(n, j), 0 <= n, j <= 64.
const BigInt& stirling2(int n, int j);

BigInt binomial(int n, int k);
BigInt factorial(int n);

double to_double(const Rational& q);
double to_double(const BigInt& n);

}  // namespace zm
