#include "pf/ratfunc.hpp"

#include "pf/error.hpp"

namespace pf {

RationalFunction::RationalFunction(const Polynomial& n, const Polynomial& d) : num_(n), den_(d) {
    if (den_.is_zero()) fail(Errc::BadInput, "rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (den_.degree() > 0) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            Polynomial q, r;
            Polynomial::divmod(num_, g, q, r);
            num_ = q;
            Polynomial::divmod(den_, g, q, r);
            den_ = q;
        }
    }
    Q l = den_.lead();
    if (l != 1) {
        num_ = num_ * (Q(1) / l);
        den_ = den_ * (Q(1) / l);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) {
        RationalFunction r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) fail(Errc::BadInput, "rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::theta() const {
    if (is_polynomial()) return RationalFunction(num_.theta());
    // theta(n/d) = (theta(n) d - n theta(d)) / d^2
    return RationalFunction(num_.theta() * den_ - num_ * den_.theta(), den_ * den_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return RationalFunction(1) / pow(-e);
    return RationalFunction(num_.pow(e), den_.pow(e));
}

Q RationalFunction::eval(const Q& x) const {
    Q d = den_.eval(x);
    if (d == 0) fail(Errc::BadInput, "pole at evaluation point");
    return num_.eval(x) / d;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace pf
