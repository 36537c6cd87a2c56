#include "pf/error.hpp"
#include "pf/numeric.hpp"

#include <cmath>
#include <limits>

namespace pf {

NumericConstants::NumericConstants(Prec p)
    : prec(p), P(Real(0, p), pi(p) * Real(2, p)), Xi(Real(p)) {
    Xi = Complex(zeta3(p)) / pow(P, 3);
}

Complex NumericConstants::x() const { return Xi * Real(10, prec); }

Complex eval_constant(const Constant& c, const NumericConstants& nc) {
    Complex r(nc.prec);
    for (const auto& [m, q] : c.terms()) {
        Complex t = pow(nc.P, m.p);
        if (m.xi) t *= nc.Xi;
        r += t * Real(q, nc.prec);
    }
    return r;
}

Complex eval_polynomial(const Polynomial& p, const Complex& z) {
    Complex r(z.prec());
    for (int k = p.degree(); k >= 0; --k) {
        r *= z;
        r.re += Real(p[k], z.prec());
    }
    return r;
}

namespace {

double log2_abs(const Complex& z) {
    if (z.is_zero()) return -std::numeric_limits<double>::infinity();
    Real a = abs(z);
    long e = 0;
    double m = mpfr_get_d_2exp(&e, a.get(), MPFR_RNDN);
    return std::log2(m) + static_cast<double>(e);
}

struct SeriesEval {
    Complex value;
    std::vector<double> last_log2;  // log2 |c_n z0^n| for the final few n (index from the end)
    double radius_est = 0;          // from coefficient ratios, log2 scale
};

// value of one component plus tail data
SeriesEval eval_series(const Series& s, const Complex& z0, const NumericConstants& nc) {
    SeriesEval out{Complex(nc.prec), {}, 0};
    const int v = s.valuation();
    const int N = s.order();
    if (s.is_zero()) return out;
    Complex zp = pow(z0, v);
    const double lz = log2_abs(z0);
    std::vector<double> lc;  // log2 |c_n|
    for (int n = v; n < N; ++n) {
        const Constant& c = s.coeff(n);
        if (!c.is_zero()) {
            Complex cv = eval_constant(c, nc);
            out.value += cv * zp;
            lc.push_back(log2_abs(cv));
        } else {
            lc.push_back(-std::numeric_limits<double>::infinity());
        }
        zp *= z0;
    }
    const int K = std::min<int>(6, lc.size());
    for (int i = 0; i < K; ++i) {
        int idx = static_cast<int>(lc.size()) - 1 - i;
        out.last_log2.push_back(lc[idx] + lz * (v + idx));
    }
    // growth rate log2 |c_{n+1}/c_n| averaged over the last finite pairs
    double sum = 0;
    int cnt = 0;
    for (int i = static_cast<int>(lc.size()) - 1; i > 0 && cnt < 8; --i) {
        if (std::isfinite(lc[i]) && std::isfinite(lc[i - 1])) {
            sum += lc[i] - lc[i - 1];
            ++cnt;
        }
    }
    out.radius_est = cnt ? -sum / cnt : std::numeric_limits<double>::infinity();
    return out;
}

double tail_from(const SeriesEval& e, double lz, double log2_radius) {
    // geometric majorant: |c_n z^n| q^k summed, q = |z|/R
    double lq = lz - log2_radius;
    if (lq >= 0) return std::numeric_limits<double>::infinity();
    double best = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < e.last_log2.size(); ++i) {
        double t = e.last_log2[i] + lq * static_cast<double>(i + 1) - std::log2(1 - std::exp2(lq));
        best = std::max(best, t);
    }
    return best;
}

}  // namespace

Complex eval_logseries(const LogSeries& s, const Complex& z0, const NumericConstants& nc, const EvalOptions& opt) {
    if (z0.is_zero()) fail(Errc::RadiusExceeded, "evaluation at the singular point 0");
    const double lz = log2_abs(z0);
    Complex ell = log(z0, opt.branch) / nc.P;
    const double lell = log2_abs(ell);
    const long tol = opt.tol_bits > 0 ? opt.tol_bits : static_cast<long>(nc.prec) - 8;
    Complex total(nc.prec);
    Complex ellk(Real(1, nc.prec));
    double tail = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= s.degree(); ++k) {
        SeriesEval e = eval_series(s[k], z0, nc);
        double lr = opt.radius > 0 ? std::log2(opt.radius) : e.radius_est;
        if (!s[k].is_zero() && lz >= lr)
            fail(Errc::RadiusExceeded, "|z0| = 2^" + std::to_string(lz) + " outside radius 2^" + std::to_string(lr));
        if (!s[k].is_zero()) tail = std::max(tail, tail_from(e, lz, lr) + k * lell);
        total += e.value * ellk;
        ellk *= ell;
    }
    double scale = std::max(0.0, log2_abs(total));
    if (tail - scale > -static_cast<double>(tol))
        fail(Errc::TailTooLarge, "relative tail bound 2^" + std::to_string(tail - scale) + " exceeds 2^-" +
                                     std::to_string(tol));
    return total;
}

double tail_bound_log2(const LogSeries& s, const Complex& z0, double radius) {
    NumericConstants nc(std::max<Prec>(z0.prec(), kMinPrec));
    const double lz = log2_abs(z0);
    Complex ell = log(z0) / nc.P;
    const double lell = log2_abs(ell);
    double tail = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= s.degree(); ++k) {
        if (s[k].is_zero()) continue;
        SeriesEval e = eval_series(s[k], z0, nc);
        double lr = radius > 0 ? std::log2(radius) : e.radius_est;
        tail = std::max(tail, tail_from(e, lz, lr) + k * lell);
    }
    return tail;
}

CMatrix basis_cauchy_data(const SolutionBasis& basis, const Complex& z0, const NumericConstants& nc,
                          const EvalOptions& opt) {
    const int m = basis.op.order();
    for (const Q& e : basis.exponents)
        if (e != 0) fail(Errc::BadInput, "numeric evaluation needs exponents 0 at the origin");
    CMatrix D = cmatrix_zero(basis.size(), m, nc.prec);
    for (int i = 0; i < basis.size(); ++i) {
        LogSeries f = basis.solutions[i];
        for (int j = 0; j < m; ++j) {
            D[i][j] = eval_logseries(f, z0, nc, opt);
            if (j + 1 < m) f = f.derivative();
        }
    }
    return D;
}

}  // namespace pf
