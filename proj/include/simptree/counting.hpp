#pragma once

#include <boost/rational.hpp>

namespace simptree {

using Rational = boost::rational<long long>;

/// C(n, k); 0 when k < 0 or k > n.
long long binomial(int n, int k);

/// (p - n) * C(n, k) + C(n, k+1): the k-simplex count of a simplicial tree
/// on p vertices.
long long tree_count_formula(long long p, int n, int k);

/// ((p-m-1)/(n-m)) * C(n+1, k+1) - ((p-n-1)/(n-m)) * C(m+1, k+1), exact.
/// Non-integral results are reported as-is, never rounded.
Rational dewdney_count_formula(long long p, int m, int n, int k);

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

}  // namespace simptree
