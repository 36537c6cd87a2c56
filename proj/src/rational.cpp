#include "pf/rational.hpp"

#include "pf/error.hpp"

#include <cctype>

namespace pf {

Q parse_rational(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) fail(Errc::BadInput, "empty rational");
    if (t[0] == '+') t.erase(0, 1);
    Q q;
    if (q.set_str(t, 10) != 0) fail(Errc::BadInput, "bad rational '" + s + "'");
    if (q.get_den() == 0) fail(Errc::BadInput, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q binomial(long n, long k) {
    if (k < 0) return 0;
    Q r = 1;
    for (long i = 0; i < k; ++i) r = r * Q(n - i) / Q(i + 1);
    return r;
}

Q factorial(long n) {
    Z r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return Q(r);
}

Q primitive_scale(const std::vector<Q>& v) {
    Z l = 1, g = 0;
    for (const auto& q : v) {
        if (q == 0) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
    for (const auto& q : v) {
        if (q == 0) continue;
        Z n = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return 1;
    Q r(l, g);
    r.canonicalize();
    return r;
}

}  // namespace pf
