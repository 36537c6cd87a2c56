#pragma once

#include "pf/rational.hpp"

#include <mpfr.h>

#include <ostream>
#include <string>
#include <vector>

namespace pf {

using Prec = mpfr_prec_t;
constexpr Prec kDefaultPrec = 192;
constexpr Prec kMinPrec = 64;

// MPFR float with its own precision; binary operations round to the larger
// precision of the operands and count the event in precision_mix_count().
class Real {
public:
    explicit Real(Prec prec = kMinPrec);
    Real(long v, Prec prec);
    Real(const Q& v, Prec prec);
    Real(const std::string& decimal, Prec prec);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    Prec prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    Real with_prec(Prec p) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long exponent2() const;  // floor(log2|x|), very negative for 0
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    std::string str(int digits = 30) const;

    Real operator-() const;
    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
    friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
    void widen(const Real& o);
};

long precision_mix_count();

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow2(long e, Prec prec);  // 2^e
Real pi(Prec prec);
Real zeta3(Prec prec);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
inline std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

class Complex {
public:
    explicit Complex(Prec prec = kMinPrec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im(r.prec()) {}
    Complex(const Q& r, const Q& i, Prec prec) : re(r, prec), im(i, prec) {}

    Real re, im;

    Prec prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::string str(int digits = 30) const;

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator*=(const Real& o);
    Complex& operator/=(const Complex& o);
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator*(Complex a, const Real& b) { return a *= b; }
    friend Complex operator*(const Real& b, Complex a) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
};

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long e);
Complex imag_unit(Prec prec);
Complex to_prec(const Complex& z, Prec prec);
inline std::ostream& operator<<(std::ostream& os, const Complex& x) { return os << x.str(); }

enum class Branch { Principal, Upper, Lower };
// log z; Upper/Lower force Im = +pi / -pi on the negative real axis
Complex log(const Complex& z, Branch b = Branch::Principal);

using CMatrix = std::vector<std::vector<Complex>>;
CMatrix cmatrix_zero(int r, int c, Prec prec);
CMatrix cmatrix_identity(int n, Prec prec);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix transpose(const CMatrix& a);
CMatrix conj(const CMatrix& a);
CMatrix inverse(const CMatrix& a);  // SingularMatrix
Complex det(const CMatrix& a);
Real max_abs(const CMatrix& a);
CMatrix from_rational(const std::vector<std::vector<Q>>& m, Prec prec);
CMatrix reversed(const CMatrix& a);  // reverse both row and column order

}  // namespace pf
