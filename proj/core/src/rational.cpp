#include "demishuffle/rational.hpp"

namespace demishuffle {

Integer binomial(long long n, long long r) {
    if (r < 0 || n < 0 || r > n)
        return 0;
    if (r > n - r)
        r = n - r;
    Integer result = 1;
    for (long long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

Integer factorial(int n) {
    Integer result = 1;
    for (int i = 2; i <= n; ++i)
        result *= i;
    return result;
}

Rational rational_pow(const Rational &base, int n) {
    Rational result = 1;
    for (int i = 0; i < n; ++i)
        result *= base;
    return result;
}

} // namespace demishuffle
