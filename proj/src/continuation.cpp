#include "pf/error.hpp"
#include "pf/numeric.hpp"

#include <cmath>
#include <limits>

namespace pf {

Path reversed(const Path& p) {
    Path r{std::vector<Complex>(p.points.rbegin(), p.points.rend()), "reverse of " + p.description};
    return r;
}

Path square_loop(const Complex& base, const Real& r) {
    Prec pr = base.prec();
    Complex d(Real(0, pr), r);
    Complex two_r(r * Real(2, pr));
    return Path{{base, base - d, base + two_r - d, base + two_r + d, base + d, base},
                "square of half-width " + r.str(6) + " beside " + base.str(10)};
}

Path loop_around(const Complex& target, const Complex& base, const std::vector<Complex>& sing) {
    Prec pr = std::max(target.prec(), base.prec());
    Complex i = imag_unit(pr);
    if (target.is_zero()) {
        Complex a = base * (Complex(Real(1, pr)) + i);
        Complex b = base * (-Complex(Real(1, pr)) + i);
        return Path{{base, a, b, -a, -b, base}, "counterclockwise loop around 0"};
    }
    Real dist = abs(target);
    for (const Complex& s : sing) {
        Real d = abs(s - target);
        if (!d.is_zero()) dist = min(dist, d);
    }
    Real r = dist / Real(2, pr);
    Complex u = target / Complex(abs(target));
    Complex ru = u * r;
    Complex iru = ru * i;
    Complex e = target - ru;
    return Path{{base, e, e - iru, target + ru - iru, target + ru + iru, e + iru, e, base},
                "counterclockwise loop around " + target.str(12)};
}

std::vector<Complex> singular_points(const ThetaOperator& op, Prec prec) {
    std::vector<Complex> out{Complex(prec)};
    Polynomial lead = op.coeff(op.order());
    const int d = lead.degree();
    if (d <= 0) return out;
    // Durand-Kerner on the monic leading coefficient
    std::vector<Complex> c(d + 1, Complex(prec));
    for (int k = 0; k <= d; ++k) c[k].re = Real(lead[k] / lead.lead(), prec);
    auto eval = [&](const Complex& z) {
        Complex r(prec);
        for (int k = d; k >= 0; --k) r = r * z + c[k];
        return r;
    };
    std::vector<Complex> roots;
    Complex seed(Q(2, 5), Q(9, 10), prec);
    Complex w(Real(1, prec));
    for (int k = 0; k < d; ++k) {
        roots.push_back(w);
        w *= seed;
    }
    Real eps = pow2(-static_cast<long>(prec) + 8, prec);
    for (int it = 0; it < 2000; ++it) {
        Real delta(prec);
        for (int k = 0; k < d; ++k) {
            Complex den(Real(1, prec));
            for (int j = 0; j < d; ++j)
                if (j != k) den *= roots[k] - roots[j];
            Complex step = eval(roots[k]) / den;
            roots[k] -= step;
            delta = max(delta, abs(step) / max(Real(1, prec), abs(roots[k])));
        }
        if (delta < eps) break;
    }
    for (auto& r : roots) out.push_back(r);
    return out;
}

namespace {

// q_j(c + h) as coefficient lists in h
std::vector<std::vector<Complex>> shifted_coeffs(const std::vector<Polynomial>& q, const Complex& c, Prec prec) {
    std::vector<std::vector<Complex>> out;
    for (const Polynomial& p : q) {
        const int d = std::max(p.degree(), 0);
        std::vector<Complex> a(d + 1, Complex(prec));
        for (int k = 0; k <= p.degree(); ++k) a[k].re = Real(p[k], prec);
        // repeated synthetic division gives the Taylor coefficients at c
        for (int i = 0; i <= d; ++i)
            for (int k = d - 1; k >= i; --k) a[k] += a[k + 1] * c;
        out.push_back(std::move(a));
    }
    return out;
}

double log2_of(const Real& a) {
    if (a.is_zero()) return -std::numeric_limits<double>::infinity();
    long e = 0;
    double m = mpfr_get_d_2exp(&e, a.get(), MPFR_RNDN);
    return std::log2(m) + static_cast<double>(e);
}

struct ColumnResult {
    std::vector<Complex> data;
    double lost_bits = 0;
};

// Local Taylor solution at c with initial Cauchy data; returns the data at c + h.
ColumnResult taylor_column(const std::vector<std::vector<Complex>>& Qc, int m, const std::vector<Complex>& init,
                           const Complex& h, Prec prec, int guard, int max_terms) {
    std::vector<Complex> a;
    a.reserve(max_terms + m);
    Real fact(1, prec);
    for (int j = 0; j < m; ++j) {
        if (j > 0) fact *= Real(j, prec);
        a.push_back(init[j] / Complex(fact));
    }
    // ff(n, j) = n (n-1) ... (n-j+1)
    auto ff = [&](long n, int j) {
        Real r(1, prec);
        for (int t = 0; t < j; ++t) r *= Real(n - t, prec);
        return r;
    };
    const Complex& lead = Qc[m][0];
    ColumnResult out{std::vector<Complex>(m, Complex(prec)), 0};
    std::vector<Complex> hp(1, Complex(Real(1, prec)));  // powers of h
    auto hpow = [&](int k) -> const Complex& {
        while (static_cast<int>(hp.size()) <= k) hp.push_back(hp.back() * h);
        return hp[k];
    };
    const double lh = log2_of(abs(h));
    double max_term = -std::numeric_limits<double>::infinity();
    int small_run = 0;
    const double stop = -static_cast<double>(prec + guard);
    for (int n = 0;; ++n) {
        if (n >= static_cast<int>(a.size())) {
            // coefficient of h^N with N = n - m
            const long N = n - m;
            Complex s(prec);
            for (int j = 0; j <= m; ++j)
                for (size_t i = 0; i < Qc[j].size(); ++i) {
                    if ((j == m && i == 0) || N - static_cast<long>(i) < 0 || Qc[j][i].is_zero()) continue;
                    long idx = N - static_cast<long>(i) + j;
                    s += Qc[j][i] * a[idx] * ff(idx, j);
                }
            a.push_back(-s / (lead * Complex(ff(N + m, m))));
        }
        // accumulate y^(j)(h) = sum_n a_n ff(n, j) h^(n-j)
        // derivative weights grow like n^(m-1)
        double mag = log2_of(abs(a[n])) + lh * n + (m - 1) * std::log2(n + 1.0);
        for (int j = 0; j < m && j <= n; ++j) out.data[j] += a[n] * ff(n, j) * hpow(n - j);
        max_term = std::max(max_term, mag);
        if (n > m + 4 && mag - max_term < stop) {
            if (++small_run > m + 4) break;
        } else {
            small_run = 0;
        }
        if (n >= max_terms) fail(Errc::PrecisionLoss, "local Taylor series did not converge");
    }
    double res = -std::numeric_limits<double>::infinity();
    for (auto& x : out.data) res = std::max(res, log2_of(abs(x)) + 0.0);
    out.lost_bits = std::max(0.0, max_term - std::min(res, max_term));
    return out;
}

Real nearest_distance(const Complex& c, const std::vector<Complex>& sing) {
    Real best(-1, c.prec());
    for (const Complex& s : sing) {
        Real d = abs(c - s);
        if (best.sign() < 0 || d < best) best = d;
    }
    return best;
}

}  // namespace

Transport transport_matrix(const ThetaOperator& op, const Path& path, const ContinuationOptions& opt) {
    const int m = op.order();
    const Prec prec = opt.prec;
    if (path.points.size() < 2) fail(Errc::BadInput, "path needs at least two points");
    std::vector<Polynomial> q = d_form(op);
    std::vector<Complex> sing = singular_points(op, prec);
    Transport tr{cmatrix_identity(m, prec), 0, -static_cast<double>(prec)};
    Real tiny = pow2(-static_cast<long>(prec) / 2, prec);
    for (const Complex& p : path.points)
        if (nearest_distance(p, sing) < tiny) fail(Errc::SingularityOnPath, "path point " + p.str(12) + " is singular");
    double err = -static_cast<double>(prec);
    for (size_t seg = 0; seg + 1 < path.points.size(); ++seg) {
        Complex c = to_prec(path.points[seg], prec);
        const Complex target = to_prec(path.points[seg + 1], prec);
        while (true) {
            Real rem = abs(target - c);
            if (rem.is_zero()) break;
            Real rho = nearest_distance(c, sing);
            Real half = rho / Real(2, prec);
            Complex next = target;
            if (rem > half) next = c + (target - c) * (half / rem);
            Complex h = next - c;
            auto Qc = shifted_coeffs(q, c, prec);
            if (Qc[m][0].is_zero()) fail(Errc::SingularityOnPath, "leading coefficient vanishes at " + c.str(12));
            CMatrix step = cmatrix_zero(m, m, prec);
            std::vector<double> lost(m, 0);
            auto column = [&](int k) {
                std::vector<Complex> e(m, Complex(prec));
                e[k].re = Real(1, prec);
                ColumnResult r = taylor_column(Qc, m, e, h, prec, opt.guard_bits, opt.max_terms);
                for (int j = 0; j < m; ++j) step[j][k] = r.data[j];
                lost[k] = r.lost_bits;
            };
            if (opt.parallel) {
                std::exception_ptr ex;
#pragma omp parallel for schedule(static)
                for (int k = 0; k < m; ++k) {
                    try {
                        column(k);
                    } catch (...) {
#pragma omp critical
                        ex = std::current_exception();
                    }
                }
                if (ex) std::rethrow_exception(ex);
            } else {
                for (int k = 0; k < m; ++k) column(k);
            }
            double l = 0;
            for (double x : lost) l = std::max(l, x);
            err = std::log2(std::exp2(err) + std::exp2(-static_cast<double>(prec) + l + 1));
            tr.T = step * tr.T;
            ++tr.steps;
            c = next;
            if (rem <= half) break;
        }
    }
    tr.error_log2 = err;
    if (err > -static_cast<double>(prec) / 3)
        fail(Errc::PrecisionLoss, "estimated error 2^" + std::to_string(err) + " exceeds the budget");
    return tr;
}

std::vector<Complex> analytic_continue(const ThetaOperator& op, const std::vector<Complex>& init, const Path& path,
                                       const ContinuationOptions& opt) {
    const int m = op.order();
    if (static_cast<int>(init.size()) != m) fail(Errc::BadInput, "initial data must have length equal to the order");
    Transport tr = transport_matrix(op, path, opt);
    std::vector<Complex> out(m, Complex(opt.prec));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out[i] += tr.T[i][j] * init[j];
    return out;
}

Complex default_basepoint(const ThetaOperator& op, Prec prec) {
    auto sing = singular_points(op, prec);
    Complex best(prec);
    bool have = false;
    for (size_t i = 1; i < sing.size(); ++i)
        if (!have || abs(sing[i]) < abs(best)) {
            best = sing[i];
            have = true;
        }
    if (!have) return Complex(Q(1, 1000), Q(0), prec);
    // on the ray of the nearest singularity, one eighth of the way out
    return best * Real(Q(1, 8), prec);
}

MonodromyResult monodromy_matrix(const SolutionBasis& basis, const Path& loop, const ContinuationOptions& opt) {
    const Prec prec = opt.prec;
    const Complex& base = loop.points.front();
    if (abs(loop.points.back() - base) > pow2(-static_cast<long>(prec) / 2, prec))
        fail(Errc::BadInput, "loop is not closed");
    NumericConstants nc(prec);
    auto sing = singular_points(basis.op, prec);
    double radius = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < sing.size(); ++i) radius = std::min(radius, abs(sing[i]).to_double());
    EvalOptions eo;
    eo.radius = std::isfinite(radius) ? radius : 0;
    eo.tol_bits = static_cast<long>(prec) - opt.guard_bits;
    CMatrix D0 = basis_cauchy_data(basis, base, nc, eo);
    Transport tr = transport_matrix(basis.op, loop, opt);
    CMatrix D1 = D0 * transpose(tr.T);
    MonodromyResult res{D1 * inverse(D0), base, {}, loop, tr.error_log2};
    for (auto& row : D0) res.values.push_back(row[0]);
    return res;
}

SiegelAction siegel_action(const MonodromyResult& r, const std::vector<std::vector<Q>>& g) {
    if (r.values.size() != 5) fail(Errc::BadInput, "siegel_action needs an order-5 basis");
    const Prec prec = r.values[0].prec();
    std::vector<Complex> w1(5, Complex(prec));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) w1[i] += r.M[i][j] * r.values[j];
    auto T_of = [&](const std::vector<Complex>& w) {
        CMatrix T = cmatrix_zero(2, 2, prec);
        T[0][0] = w[1] / w[0];
        T[0][1] = T[1][0] = w[2] / w[0];
        T[1][1] = w[3] / w[0];
        return T;
    };
    auto blk = [&](int r0, int c0) {
        CMatrix b = cmatrix_zero(2, 2, prec);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) b[i][j].re = Real(g[r0 + i][c0 + j], prec);
        return b;
    };
    CMatrix T = T_of(r.values);
    CMatrix CTD = blk(2, 0) * T + blk(2, 2);
    CMatrix pred = (blk(0, 0) * T + blk(0, 2)) * inverse(CTD);
    CMatrix got = T_of(w1);
    Real one(1, prec);
    SiegelAction out{max_abs(got - pred) / max(one, max_abs(pred)), w1[0] / (det(CTD) * r.values[0])};
    return out;
}

MonodromyResult monodromy_around(const SolutionBasis& basis, const Complex& target, const ContinuationOptions& opt) {
    Complex base = default_basepoint(basis.op, opt.prec);
    Path loop = loop_around(target, base, singular_points(basis.op, opt.prec));
    return monodromy_matrix(basis, loop, opt);
}

}  // namespace pf
