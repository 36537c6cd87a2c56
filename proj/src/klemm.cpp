#include "pf/error.hpp"
#include "pf/numeric.hpp"

namespace pf {

namespace {

using V2 = std::array<Complex, 2>;

Prec prec_of(const CMat2& a) { return a[0][0].prec(); }

CMat2 zero2(Prec p) { return {{{Complex(p), Complex(p)}, {Complex(p), Complex(p)}}}; }

CMat2 mul(const CMat2& a, const CMat2& b) {
    CMat2 c = zero2(prec_of(a));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}
CMat2 add(const CMat2& a, const CMat2& b) {
    CMat2 c = a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] += b[i][j];
    return c;
}
CMat2 sub(const CMat2& a, const CMat2& b) {
    CMat2 c = a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] -= b[i][j];
    return c;
}
Complex det2(const CMat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
CMat2 inv2(const CMat2& a) {
    Complex d = det2(a);
    if (abs(d) < pow2(-static_cast<long>(prec_of(a)) / 2, prec_of(a))) fail(Errc::SingularBlock, "singular 2x2 block");
    CMat2 r = zero2(prec_of(a));
    r[0][0] = a[1][1] / d;
    r[1][1] = a[0][0] / d;
    r[0][1] = -a[0][1] / d;
    r[1][0] = -a[1][0] / d;
    return r;
}
CMat2 conj2(const CMat2& a) {
    CMat2 c = a;
    for (auto& r : c)
        for (auto& x : r) x = conj(x);
    return c;
}
CMat2 imag2(const CMat2& a) {
    CMat2 c = zero2(prec_of(a));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = Complex(a[i][j].im);
    return c;
}
V2 matvec(const CMat2& a, const V2& v) { return {a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]}; }
Complex bilinear(const V2& x, const CMat2& a, const V2& y) {
    V2 ay = matvec(a, y);
    return x[0] * ay[0] + x[1] * ay[1];
}
Real max_abs2(const CMat2& a) {
    Real m(prec_of(a));
    for (auto& r : a)
        for (auto& x : r) m = max(m, abs(x));
    return m;
}
CMat2 block(const std::vector<std::vector<Q>>& g, int r, int c, Prec p) {
    CMat2 b = zero2(p);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) b[i][j] = Complex(Real(g[r + i][c + j], p));
    return b;
}
bool posdef(const CMat2& y) {
    // real symmetric matrix stored in the real parts
    return y[0][0].re.sign() > 0 && (y[0][0].re * y[1][1].re - y[0][1].re * y[1][0].re).sign() > 0;
}

}  // namespace

KlemmData klemm_embed(const CMat2& T, const std::array<Complex, 2>& u) {
    const Prec p = prec_of(T);
    KlemmData k;
    k.T = T;
    k.u = u;
    CMat2 Y = imag2(T);
    V2 v = matvec(Y, u);
    k.phi = u[0] * v[0] + u[1] * v[1];
    if (abs(k.phi) < pow2(-static_cast<long>(p) / 2, p)) fail(Errc::PhiZero, "phi = (u1 u0) Im T (u1; u0) vanishes");
    Complex f = Complex(Real(0, p), Real(2, p)) / k.phi;
    k.Z = conj2(T);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) k.Z[i][j] += f * v[i] * v[j];
    Complex dY = det2(Y);
    k.detImT_negative = dY.re.sign() < 0;
    V2 u32 = matvec(T, u);
    Complex c2 = u32[0] * conj(u[0]) + u32[1] * conj(u[1]);
    k.condition_ii = c2.im.sign() > 0;
    CMat2 iz = imag2(k.Z);
    k.imZ_posdef = posdef(iz);
    return k;
}

KlemmCheck klemm_transform_check(const CMat2& T0, const std::array<Complex, 2>& u0,
                                 const std::vector<std::vector<Q>>& g, Prec prec) {
    CMat2 T = T0;
    for (auto& r : T)
        for (auto& x : r) x = to_prec(x, prec);
    V2 u{to_prec(u0[0], prec), to_prec(u0[1], prec)};
    CMat2 A = block(g, 0, 0, prec), B = block(g, 0, 2, prec), C = block(g, 2, 0, prec), D = block(g, 2, 2, prec);
    CMat2 CTD = add(mul(C, T), D);
    CMat2 T1 = mul(add(mul(A, T), B), inv2(CTD));
    V2 u1 = matvec(CTD, u);
    KlemmData k0 = klemm_embed(T, u), k1 = klemm_embed(T1, u1);
    KlemmCheck out;
    CMat2 CZD = add(mul(C, k0.Z), D);
    CMat2 gz = mul(add(mul(A, k0.Z), B), inv2(CZD));
    Real one(1, prec);
    out.z_law = max_abs2(sub(gz, k1.Z)) / max(one, max_abs2(k1.Z));
    Complex lhs = k1.phi / k0.phi;
    Complex rhs = det2(CZD) / det2(add(mul(C, conj2(T)), D));
    out.phi_ratio = abs(lhs - rhs) / max(one, abs(rhs));
    auto det_identity = [&](const KlemmData& k) {
        CMat2 Y = imag2(k.T);
        V2 ub{conj(k.u[0]), conj(k.u[1])};
        Complex q = bilinear(k.u, Y, ub);
        Complex pred = -det2(Y) * q * q / Complex(norm(k.phi));
        Complex got = det2(imag2(k.Z));
        return abs(got - pred) / max(one, abs(pred));
    };
    out.det_imz = max(det_identity(k0), det_identity(k1));
    out.max_residual = max(max(out.z_law, out.phi_ratio), out.det_imz);
    out.conditions_invariant = k0.detImT_negative == k1.detImT_negative && k0.condition_ii == k1.condition_ii;
    bool admissible = k0.detImT_negative && k0.condition_ii;
    out.positivity = !admissible || (k0.imZ_posdef && k1.imZ_posdef);
    return out;
}

void random_klemm_input(std::mt19937_64& rng, Prec prec, CMat2& T, std::array<Complex, 2>& u) {
    std::uniform_int_distribution<int> d(-1000, 1000);
    auto rq = [&] { return rat(d(rng), 500); };
    for (;;) {
        Q x0 = rq(), x1 = rq(), x2 = rq(), y0 = rq(), y1 = rq(), y2 = rq();
        if (y0 * y2 - y1 * y1 >= 0) continue;
        T = {{{Complex(x0, y0, prec), Complex(x1, y1, prec)}, {Complex(x1, y1, prec), Complex(x2, y2, prec)}}};
        u = {Complex(rq(), rq(), prec), Complex(rq(), rq(), prec)};
        KlemmData k;
        try {
            k = klemm_embed(T, u);
        } catch (const Error&) {
            continue;
        }
        if (k.condition_ii && abs(k.phi) > Real(Q(1, 100), prec)) return;
    }
}

std::vector<std::vector<Q>> random_symplectic(std::mt19937_64& rng, int words) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::uniform_int_distribution<int> kind(0, 1);
    std::vector<std::vector<Q>> g(4, std::vector<Q>(4, 0));
    for (int i = 0; i < 4; ++i) g[i][i] = 1;
    for (int w = 0; w < words; ++w) {
        Q s0 = rat(d(rng), 2), s1 = rat(d(rng), 2), s2 = rat(d(rng), 2);
        std::vector<std::vector<Q>> t(4, std::vector<Q>(4, 0));
        for (int i = 0; i < 4; ++i) t[i][i] = 1;
        // (E S; O E) or (E O; S E) with S symmetric
        int r = kind(rng) ? 0 : 2, c = r == 0 ? 2 : 0;
        t[r][c] = s0;
        t[r][c + 1] = s1;
        t[r + 1][c] = s1;
        t[r + 1][c + 1] = s2;
        std::vector<std::vector<Q>> h(4, std::vector<Q>(4, 0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) h[i][j] += t[i][k] * g[k][j];
        g = h;
    }
    return g;
}

KlemmTrials klemm_random_trials(int n, Prec prec, std::uint64_t seed, bool parallel) {
    std::vector<double> res(n, 0);
    std::vector<char> ok(n, 0);
    auto trial = [&](int i) {
        std::mt19937_64 rng(seed + 7919 * static_cast<std::uint64_t>(i));
        CMat2 T;
        std::array<Complex, 2> u{Complex(prec), Complex(prec)};
        random_klemm_input(rng, prec, T, u);
        std::uniform_int_distribution<int> len(1, 6);
        auto g = random_symplectic(rng, len(rng));
        try {
            KlemmCheck c = klemm_transform_check(T, u, g, prec);
            long e = c.max_residual.is_zero() ? -100000 : c.max_residual.exponent2();
            res[i] = static_cast<double>(e);
            ok[i] = c.conditions_invariant && c.positivity;
        } catch (const Error&) {
            res[i] = 0;
            ok[i] = 0;
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (int i = 0; i < n; ++i) trial(i);
    } else {
        for (int i = 0; i < n; ++i) trial(i);
    }
    KlemmTrials out;
    out.trials = n;
    double worst = -1e9;
    for (int i = 0; i < n; ++i) {
        worst = std::max(worst, res[i]);
        if (!ok[i]) ++out.failures;
    }
    out.max_residual = pow2(static_cast<long>(worst) + 1, prec);
    return out;
}

}  // namespace pf
