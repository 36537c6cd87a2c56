#include "pf/error.hpp"
#include "pf/numeric.hpp"

#include <cmath>
#include <sstream>

namespace pf {

std::string XNumber::str() const {
    std::ostringstream os;
    bool any = false;
    auto term = [&](const Q& q, const char* sym) {
        if (q == 0) return;
        if (any) os << (q < 0 ? " - " : " + ");
        else if (q < 0) os << "-";
        Q a = abs(q);
        if (*sym == 0 || a != 1) os << to_string(a);
        if (*sym) os << (a != 1 ? "*" : "") << sym;
        any = true;
    };
    term(a, "");
    term(b, "x");
    term(c, "x^2");
    if (!any) os << "0";
    return os.str();
}

namespace {

Z round_q(const Q& q) {
    Z num = 2 * q.get_num() + q.get_den();
    Z den = 2 * q.get_den();
    Z r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

Q dot(const std::vector<Q>& a, const std::vector<Q>& b) {
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Gram-Schmidt of the current basis
void gram_schmidt(const std::vector<std::vector<Z>>& b, std::vector<std::vector<Q>>& bs, std::vector<Q>& B,
                  std::vector<std::vector<Q>>& mu) {
    const size_t n = b.size();
    bs.assign(n, {});
    B.assign(n, 0);
    mu.assign(n, std::vector<Q>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        bs[i].assign(b[i].begin(), b[i].end());
        for (size_t j = 0; j < i; ++j) {
            std::vector<Q> bi(b[i].begin(), b[i].end());
            mu[i][j] = dot(bi, bs[j]) / B[j];
            for (size_t k = 0; k < bs[i].size(); ++k) bs[i][k] -= mu[i][j] * bs[j][k];
        }
        B[i] = dot(bs[i], bs[i]);
    }
}

Q real_to_q(const Real& x) {
    Q q;
    mpfr_get_q(q.get_mpq_t(), x.get());
    return q;
}

// best rational with denominator <= max_den by continued fractions
Q best_rational(const Real& x, long max_den) {
    Q v = real_to_q(x);
    Z h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    Q best = 0;
    for (int it = 0; it < 200; ++it) {
        Z a;
        mpz_fdiv_q(a.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        Z h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den) break;
        best = Q(h2, k2);
        best.canonicalize();
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        Q frac = v - Q(a);
        if (frac == 0) break;
        v = 1 / frac;
    }
    return best;
}

double log2_abs(const Complex& z) {
    if (z.is_zero()) return -1e300;
    long e = 0;
    Real a = abs(z);
    double m = mpfr_get_d_2exp(&e, a.get(), MPFR_RNDN);
    return std::log2(m) + static_cast<double>(e);
}

}  // namespace

void lll_reduce(std::vector<std::vector<Z>>& b) {
    const int n = static_cast<int>(b.size());
    if (n < 2) return;
    const Q delta(3, 4);
    std::vector<std::vector<Q>> bs, mu;
    std::vector<Q> B;
    gram_schmidt(b, bs, B, mu);
    int k = 1;
    int guard = 0;
    while (k < n) {
        if (++guard > 100000) fail(Errc::NonTermination, "LLL did not terminate");
        for (int j = k - 1; j >= 0; --j) {
            Z q = round_q(mu[k][j]);
            if (q == 0) continue;
            for (size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
            for (int l = 0; l <= j; ++l) mu[k][l] -= Q(q) * (l == j ? Q(1) : mu[j][l]);
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt(b, bs, B, mu);
            k = std::max(k - 1, 1);
        }
    }
}

std::vector<std::vector<Z>> integer_relations(const std::vector<std::vector<Real>>& rows, long scale_bits) {
    const size_t n = rows.size();
    const size_t d = rows.empty() ? 0 : rows[0].size();
    std::vector<std::vector<Z>> basis(n, std::vector<Z>(n + d, 0));
    for (size_t i = 0; i < n; ++i) {
        basis[i][i] = 1;
        for (size_t c = 0; c < d; ++c) {
            Real s = rows[i][c] * pow2(scale_bits, rows[i][c].prec() + scale_bits);
            basis[i][n + c] = round_q(real_to_q(s));
        }
    }
    lll_reduce(basis);
    std::vector<std::vector<Z>> out;
    for (auto& v : basis) out.emplace_back(v.begin(), v.begin() + n);
    return out;
}

std::optional<XNumber> recognize_entry(const Complex& v, Ring ring, double tol_log2, const NumericConstants& nc,
                                       long max_den) {
    const Prec prec = nc.prec;
    const double scale = std::max(0.0, log2_abs(v));
    auto accept = [&](const XNumber& x) -> bool {
        bool dens = x.a.get_den() <= max_den && x.b.get_den() <= max_den && x.c.get_den() <= max_den;
        Complex xv = nc.x();
        Complex approx = Complex(Real(x.a, prec)) + xv * Real(x.b, prec) + xv * xv * Real(x.c, prec);
        return dens && log2_abs(v - approx) - scale < tol_log2;
    };
    if (ring == Ring::Rational) {
        XNumber x{best_rational(v.re, max_den), 0, 0};
        if (accept(x)) return x;
        return std::nullopt;
    }
    Complex xv = nc.x();
    Complex x2 = xv * xv;
    std::vector<std::vector<Real>> rows{
        {v.re, v.im}, {Real(-1, prec), Real(0, prec)}, {-xv.re, -xv.im}, {-x2.re, -x2.im}};
    long sb = static_cast<long>(prec) * 2 / 3;
    for (const auto& k : integer_relations(rows, sb)) {
        if (k[0] == 0) continue;
        Z k0 = k[0];
        XNumber x{Q(k[1], k0), Q(k[2], k0), Q(k[3], k0)};
        x.a.canonicalize();
        x.b.canonicalize();
        x.c.canonicalize();
        if (accept(x)) return x;
    }
    // exact zero entries and small rationals are found more reliably without the lattice
    XNumber r{best_rational(v.re, max_den), 0, 0};
    if (accept(r)) return r;
    return std::nullopt;
}

Recognition recognize_exact(const CMatrix& M, Ring ring, double tol_log2, const NumericConstants& nc, long max_den) {
    Recognition out;
    std::string bad;
    double worst = -1e300;
    for (size_t i = 0; i < M.size(); ++i) {
        out.M.emplace_back();
        for (size_t j = 0; j < M[i].size(); ++j) {
            auto x = recognize_entry(M[i][j], ring, tol_log2, nc, max_den);
            if (!x) {
                bad += " (" + std::to_string(i) + "," + std::to_string(j) + ")=" + M[i][j].str(15);
                out.M.back().push_back({});
                continue;
            }
            Complex xv = nc.x();
            Complex approx = Complex(Real(x->a, nc.prec)) + xv * Real(x->b, nc.prec) + xv * xv * Real(x->c, nc.prec);
            worst = std::max(worst, log2_abs(M[i][j] - approx));
            out.M.back().push_back(*x);
        }
    }
    if (!bad.empty()) fail(Errc::NoRecognition, "entries not recognized:" + bad);
    out.residual_log2 = worst;
    bool rational = true;
    for (auto& r : out.M)
        for (auto& x : r) rational = rational && x.is_rational();
    if (rational && M.size() == 4 && M[0].size() == 4) {
        out.symplectic_checked = true;
        out.symplectic = is_symplectic(rational_matrix(out.M));
    }
    return out;
}

std::vector<std::vector<Q>> rational_matrix(const XMatrix& M) {
    std::vector<std::vector<Q>> out;
    for (auto& r : M) {
        out.emplace_back();
        for (auto& x : r) {
            if (!x.is_rational()) fail(Errc::BadInput, "entry " + x.str() + " is not rational");
            out.back().push_back(x.a);
        }
    }
    return out;
}

bool is_symplectic(const std::vector<std::vector<Q>>& g) {
    if (g.size() != 4) return false;
    const Q J[4][4] = {{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Q s = 0;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) s += g[k][i] * J[k][l] * g[l][j];
            if (s != J[i][j]) return false;
        }
    return true;
}

}  // namespace pf
