#pragma once

#include "pf/rational.hpp"

#include <compare>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace pf {

// Exact scalar in Q[P, 1/P, Xi]/(Xi^2) with P = 2*pi*i and Xi = zeta(3)/(2*pi*i)^3.
class Constant {
public:
    struct Mono {
        int p = 0;
        int xi = 0;
        auto operator<=>(const Mono&) const = default;
    };
    using Term = std::pair<Mono, Q>;

    Constant() = default;
    Constant(long v);
    Constant(const Q& q);

    static Constant monomial(const Q& c, int p, int xi = 0);
    static Constant P(int k = 1) { return monomial(1, k, 0); }
    static Constant Xi() { return monomial(1, 0, 1); }

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_rational() const;
    Q rational() const;  // throws MixedConstants
    Q coeff(int p, int xi) const;

    bool is_invertible() const;
    Constant inverse() const;
    // square root when the Xi-free part is c*P^(2k) with c a rational square
    Constant sqrt(int sign = 1) const;

    Constant operator-() const;
    Constant& operator+=(const Constant& o);
    Constant& operator-=(const Constant& o);
    Constant& operator*=(const Constant& o);
    friend Constant operator+(Constant a, const Constant& b) { return a += b; }
    friend Constant operator-(Constant a, const Constant& b) { return a -= b; }
    friend Constant operator*(const Constant& a, const Constant& b);
    friend bool operator==(const Constant& a, const Constant& b) { return a.t_ == b.t_; }

    void add_scaled(const Constant& a, const Constant& b);  // *this += a*b

    std::string str() const;

private:
    std::vector<Term> t_;
    void add_term(const Mono& m, const Q& c);
};

int p_exponent_bound();
inline std::ostream& operator<<(std::ostream& os, const Constant& x) { return os << x.str(); }

void set_p_exponent_bound(int b);

}  // namespace pf
