#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pf {

using Q = mpq_class;
using Z = mpz_class;

Q parse_rational(const std::string& s);
// n/d in lowest terms
inline Q rat(long n, long d) {
    Q q(n, d);
    q.canonicalize();
    return q;
}
std::string to_string(const Q& q);

Q binomial(long n, long k);
Q factorial(long n);

// Integer-primitive scaling factor: c such that c*v has coprime integer entries.
Q primitive_scale(const std::vector<Q>& v);

}  // namespace pf
