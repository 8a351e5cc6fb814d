#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tutte {

// Exact arithmetic everywhere: arbitrary-precision integers for all
// graph-facing computations, rationals only inside the aggregation checks.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

inline Int factorial(long long n) {
    Int result = 1;
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace tutte
