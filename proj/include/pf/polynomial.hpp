#pragma once

#include "pf/rational.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace pf {

// Dense univariate polynomial over Q in the variable z; no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Q& c);
    Polynomial(long c) : Polynomial(Q(c)) {}
    explicit Polynomial(std::vector<Q> coeffs);
    static Polynomial monomial(const Q& c, int k);
    static Polynomial z() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Q& lead() const { return c_.back(); }
    Q operator[](int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Q(0); }
    const std::vector<Q>& coeffs() const { return c_; }
    int valuation() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Q& s);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial derivative() const;
    Polynomial theta() const;                // z d/dz
    Polynomial shifted(const Q& s) const;    // p(x + s)
    Polynomial pow(int e) const;
    Q eval(const Q& x) const;
    Polynomial monic() const;

    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
    static Polynomial gcd(Polynomial a, Polynomial b);  // monic

    std::string str(const std::string& var = "z") const;

private:
    std::vector<Q> c_;
    void trim();
};

// Rational roots (with multiplicity). leftover receives the cofactor without rational roots.
std::vector<Q> rational_roots(const Polynomial& p, Polynomial* leftover = nullptr);
inline std::ostream& operator<<(std::ostream& os, const Polynomial& x) { return os << x.str(); }


}  // namespace pf
