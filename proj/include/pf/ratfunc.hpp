#pragma once

#include "pf/polynomial.hpp"

#include <ostream>
#include <string>

namespace pf {

// num/den over Q, coprime, den monic and nonzero.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Q& c) : num_(c), den_(1) {}
    RationalFunction(long c) : RationalFunction(Q(c)) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
    RationalFunction(const Polynomial& n, const Polynomial& d);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction theta() const;  // z d/dz
    RationalFunction pow(int e) const;
    Q eval(const Q& x) const;

    std::string str() const;

private:
    Polynomial num_, den_;
    void normalize();
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& x) { return os << x.str(); }

}  // namespace pf
