#include "pf/error.hpp"
#include "pf/numeric.hpp"

#include <cmath>
#include <functional>

namespace pf {

GuilleraReport guillera_check(const SolutionBasis& wbasis, GuilleraCase which, const Complex& z0, Prec prec,
                              Branch branch) {
    if (wbasis.size() != 5) fail(Errc::BadInput, "guillera_check needs the order-5 w-basis");
    NumericConstants nc(prec);
    EvalOptions eo;
    eo.branch = branch;
    eo.radius = 1.0 / 1024;
    eo.tol_bits = static_cast<long>(std::ceil(prec * 0.3 * std::log2(10.0)));
    std::vector<Complex> w, tw;
    for (const auto& s : wbasis.solutions) {
        w.push_back(eval_logseries(s, z0, nc, eo));
        tw.push_back(eval_logseries(s.theta(), z0, nc, eo));
    }
    GuilleraReport r;
    r.z0 = z0;
    r.tail_log2 = tail_bound_log2(wbasis.solutions[4], z0, eo.radius);
    auto tau = [&](int j) { return w[j] / w[0]; };
    auto ttau = [&](int j) { return (tw[j] * w[0] - w[j] * tw[0]) / (w[0] * w[0]); };
    r.tau1 = tau(1);
    r.tau2 = tau(2);
    r.tau3 = tau(3);
    r.dtau2 = ttau(2) / ttau(1);
    auto c = [&](long v) { return Complex(Real(v, prec)); };
    Complex det = r.tau1 * r.tau3 - r.tau2 * r.tau2;
    r.linear_a = c(3) * r.tau1 + c(4) * r.tau2 + c(4) * r.tau3 - c(2) * det;
    r.linear_b = c(7) * r.tau1 + c(12) * r.tau2 + c(4) * r.tau3 - c(2) * det;
    r.slope = (r.tau1 - c(2)) * r.dtau2 - r.tau2;
    if (which == GuilleraCase::A) {
        r.residual_linear = abs(r.linear_a - c(14));
        r.residual_slope = abs(r.slope - Complex(sqrt(Real(5, prec)) + Real(1, prec)));
    } else if (which == GuilleraCase::B) {
        r.residual_linear = abs(r.linear_b - c(78));
        r.residual_slope = abs(r.slope - Complex(sqrt(Real(41, prec)) + Real(3, prec)));
    }
    Real half(Q(1, 2), prec), quarter(Q(1, 4), prec), one(1, prec);
    r.nonholomorphic = {abs(r.tau1.re * half - one), abs(r.tau1.im * half + r.tau2.im),
                        abs(r.tau1.re * quarter + r.tau2.re + r.tau3.re - one), abs(r.dtau2.re + half)};
    return r;
}

SumReport sum_identity(SumId which, int terms, Prec prec) {
    // t_n = b_n * poly(n) * z^n with b_{n+1}/b_n = ratio(n)
    Q z;
    std::function<Q(long)> poly, ratio;
    Real expected(prec);
    Real p = pi(prec);
    switch (which) {
        case SumId::JGa:
            z = Q(-1, 4096);
            poly = [](long n) -> Q { return Q(20 * n * n + 8 * n + 1); };
            ratio = [](long n) -> Q { Q r(2 * (2 * n + 1), n + 1); r.canonicalize(); return r * r * r * r * r; };
            expected = Real(8, prec) / (p * p);
            break;
        case SumId::JGb:
        case SumId::JGb13:
            z = Q(-1, 1 << 20);
            if (which == SumId::JGb)
                poly = [](long n) -> Q { return Q(820 * n * n + 180 * n + 1); };
            else
                poly = [](long n) -> Q { return Q(820 * n * n + 180 * n + 13); };
            ratio = [](long n) -> Q { Q r(2 * (2 * n + 1), n + 1); r.canonicalize(); return r * r * r * r * r; };
            expected = Real(128, prec) / (p * p);
            break;
        case SumId::Ramanujan1103: {
            Z d = 396;
            d = d * d * d * d;
            z = Q(Z(1), d);
            poly = [](long n) -> Q { return Q(26390 * n + 1103); };
            ratio = [](long n) -> Q {
                Q r(Z(4 * n + 1) * (4 * n + 2) * (4 * n + 3) * (4 * n + 4), Z(n + 1) * (n + 1) * (n + 1) * (n + 1));
                r.canonicalize();
                return r;
            };
            expected = Real(9801, prec) / (Real(2, prec) * p * sqrt(Real(2, prec)));
            break;
        }
    }
    Q b = 1, zn = 1;
    Real sum(prec);
    for (long n = 0; n < terms; ++n) {
        sum += Real(b * poly(n) * zn, prec);
        b *= ratio(n);
        zn *= z;
    }
    // |t_{n+1}/t_n| decreases to its limit from below; bound by the value at infinity times the poly ratio at N
    const long N = terms;
    Q tN = abs(b * poly(N) * zn);
    Q lim = abs(z) * (which == SumId::Ramanujan1103 ? Q(256) : Q(1024));
    Q pr = poly(N + 1) / poly(N);
    Q rho = lim * pr;
    SumReport out{sum, expected, abs(sum - expected), Real(prec), terms};
    if (rho >= 1) fail(Errc::TailTooLarge, "tail ratio bound is not below 1");
    out.tail_bound = Real(tN / (1 - rho), prec);
    return out;
}

}  // namespace pf
