#include "pf/hp.hpp"

#include "pf/error.hpp"

#include <algorithm>
#include <atomic>

namespace pf {

namespace {
std::atomic<long> g_mix{0};
}

long precision_mix_count() { return g_mix.load(); }

Real::Real(Prec prec) {
    mpfr_init2(v_, std::max(prec, Prec(MPFR_PREC_MIN)));
    mpfr_set_zero(v_, 1);
}
Real::Real(long v, Prec prec) : Real(prec) { mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(const Q& v, Prec prec) : Real(prec) { mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN); }
Real::Real(const std::string& d, Prec prec) : Real(prec) {
    if (mpfr_set_str(v_, d.c_str(), 10, MPFR_RNDN) != 0) fail(Errc::BadInput, "not a decimal number: " + d);
}
Real::Real(const Real& o) : Real(o.prec()) { mpfr_set(v_, o.v_, MPFR_RNDN); }
Real::Real(Real&& o) noexcept : Real(o.prec()) { mpfr_swap(v_, o.v_); }
Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}
Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}
Real::~Real() { mpfr_clear(v_); }

Real Real::with_prec(Prec p) const {
    Real r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

long Real::exponent2() const {
    if (mpfr_zero_p(v_)) return -(1L << 40);
    return mpfr_get_exp(v_) - 1;
}

std::string Real::str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

void Real::widen(const Real& o) {
    if (o.prec() > prec()) {
        ++g_mix;
        mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    } else if (o.prec() < prec()) {
        ++g_mix;
    }
}

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}
Real& Real::operator+=(const Real& o) {
    widen(o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(const Real& o) {
    widen(o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(const Real& o) {
    widen(o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(const Real& o) {
    widen(o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

#define PF_UNARY(name, fn)                \
    Real name(const Real& x) {            \
        Real r(x.prec());                 \
        fn(r.get(), x.get(), MPFR_RNDN);  \
        return r;                         \
    }
PF_UNARY(abs, mpfr_abs)
PF_UNARY(sqrt, mpfr_sqrt)
PF_UNARY(log, mpfr_log)
PF_UNARY(exp, mpfr_exp)
#undef PF_UNARY

Real atan2(const Real& y, const Real& x) {
    Real r(std::max(x.prec(), y.prec()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}
Real pow2(long e, Prec prec) {
    Real r(1, prec);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}
Real pi(Prec prec) {
    Real r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}
Real zeta3(Prec prec) {
    Real r(prec);
    mpfr_zeta_ui(r.get(), 3, MPFR_RNDN);
    return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return a < b ? a : b; }

std::string Complex::str(int digits) const {
    std::string s = re.str(digits);
    std::string i = im.str(digits);
    if (i.empty() || i[0] != '-') i = "+" + i;
    return s + i + "i";
}

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}
Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}
Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}
Complex& Complex::operator*=(const Real& o) {
    re *= o;
    im *= o;
    return *this;
}
Complex& Complex::operator/=(const Complex& o) {
    Real d = norm(o);
    if (d.is_zero()) fail(Errc::NonInvertible, "complex division by zero");
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z) {
    Real r(z.prec());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}
Complex conj(const Complex& z) { return {z.re, -z.im}; }
Complex imag_unit(Prec prec) { return {Real(0, prec), Real(1, prec)}; }
Complex to_prec(const Complex& z, Prec prec) { return {z.re.with_prec(prec), z.im.with_prec(prec)}; }

Complex exp(const Complex& z) {
    Real m = exp(z.re);
    Real c(z.prec()), s(z.prec());
    mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
    return {m * c, m * s};
}

Complex log(const Complex& z, Branch b) {
    if (z.is_zero()) fail(Errc::NonInvertible, "log of zero");
    Real arg = atan2(z.im, z.re);
    if (z.im.is_zero() && z.re.sign() < 0) {
        arg = pi(z.prec());
        if (b == Branch::Lower) arg = -arg;
    }
    return {log(abs(z)), arg};
}

Complex sqrt(const Complex& z) {
    if (z.is_zero()) return z;
    Real r = abs(z);
    Real two(2, z.prec());
    Real a = sqrt((r + z.re) / two);
    Real c = sqrt((r - z.re) / two);
    if (z.im.sign() < 0) c = -c;
    return {a, c};
}

Complex pow(const Complex& z, long e) {
    Complex r(Real(1, z.prec()));
    Complex b = z;
    bool inv = e < 0;
    unsigned long n = inv ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    if (inv) return Complex(Real(1, z.prec())) / r;
    return r;
}

CMatrix cmatrix_zero(int r, int c, Prec prec) { return CMatrix(r, std::vector<Complex>(c, Complex(prec))); }
CMatrix cmatrix_identity(int n, Prec prec) {
    CMatrix m = cmatrix_zero(n, n, prec);
    for (int i = 0; i < n; ++i) m[i][i].re = Real(1, prec);
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.empty() || a[0].size() != b.size()) fail(Errc::BadInput, "matrix shape mismatch");
    Prec p = a[0][0].prec();
    CMatrix c = cmatrix_zero(a.size(), b[0].size(), p);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}
CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    CMatrix c = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
    return c;
}
CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    CMatrix c = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) c[i][j] -= b[i][j];
    return c;
}
CMatrix transpose(const CMatrix& a) {
    CMatrix t = cmatrix_zero(a[0].size(), a.size(), a[0][0].prec());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}
CMatrix conj(const CMatrix& a) {
    CMatrix c = a;
    for (auto& r : c)
        for (auto& x : r) x = conj(x);
    return c;
}

CMatrix inverse(const CMatrix& a) {
    const int n = static_cast<int>(a.size());
    Prec p = a[0][0].prec();
    CMatrix m = a, r = cmatrix_identity(n, p);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int i = c + 1; i < n; ++i)
            if (norm(m[i][c]) > norm(m[piv][c])) piv = i;
        if (m[piv][c].is_zero()) fail(Errc::SingularMatrix, "matrix is singular");
        std::swap(m[piv], m[c]);
        std::swap(r[piv], r[c]);
        Complex inv = Complex(Real(1, p)) / m[c][c];
        for (int j = 0; j < n; ++j) {
            m[c][j] *= inv;
            r[c][j] *= inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            Complex f = m[i][c];
            for (int j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                r[i][j] -= f * r[c][j];
            }
        }
    }
    return r;
}

Complex det(const CMatrix& a) {
    const int n = static_cast<int>(a.size());
    Prec p = a[0][0].prec();
    CMatrix m = a;
    Complex d(Real(1, p));
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int i = c + 1; i < n; ++i)
            if (norm(m[i][c]) > norm(m[piv][c])) piv = i;
        if (m[piv][c].is_zero()) return Complex(p);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (int i = c + 1; i < n; ++i) {
            Complex f = m[i][c] / m[c][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

Real max_abs(const CMatrix& a) {
    Real m(a.empty() ? kMinPrec : a[0][0].prec());
    for (auto& r : a)
        for (auto& x : r) m = max(m, abs(x));
    return m;
}

CMatrix from_rational(const std::vector<std::vector<Q>>& m, Prec prec) {
    CMatrix c = cmatrix_zero(m.size(), m.empty() ? 0 : m[0].size(), prec);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) c[i][j].re = Real(m[i][j], prec);
    return c;
}

CMatrix reversed(const CMatrix& a) {
    CMatrix r = a;
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[n - 1 - i][a[i].size() - 1 - j];
    return r;
}

}  // namespace pf
