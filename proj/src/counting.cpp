#include "simptree/counting.hpp"

#include <stdexcept>

namespace simptree {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

long long tree_count_formula(long long p, int n, int k) {
    return (p - n) * binomial(n, k) + binomial(n, k + 1);
}

Rational dewdney_count_formula(long long p, int m, int n, int k) {
    if (n <= m) {
        throw std::invalid_argument("dewdney_count_formula requires n > m");
    }
    const long long d = n - m;
    return Rational((p - m - 1) * binomial(n + 1, k + 1), d) -
           Rational((p - n - 1) * binomial(m + 1, k + 1), d);
}

}  // namespace simptree
