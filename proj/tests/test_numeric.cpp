#include "doctest.h"

#include "pf/bundle.hpp"
#include "pf/error.hpp"
#include "pf/geometry.hpp"
#include "pf/numeric.hpp"

#include <cmath>
#include <random>

using namespace pf;

namespace {

constexpr Prec kP = 192;

double lg(const Real& x) { return x.is_zero() ? -1e9 : static_cast<double>(x.exponent2()); }

const SolutionBasis& quintic_u() {
    static SolutionBasis b = bundle_basis(load_bundle("quintic"), 90);
    return b;
}
const SolutionBasis& binomial5_y() {
    static SolutionBasis b = bundle_frobenius(load_bundle("binomial5"), 90);
    return b;
}
const SolutionBasis& binomial5_w() {
    static SolutionBasis b = bundle_basis(load_bundle("binomial5"), 90);
    return b;
}

std::vector<std::vector<Q>> ints(std::vector<std::vector<long>> m) {
    std::vector<std::vector<Q>> out;
    for (auto& r : m) {
        out.emplace_back();
        for (long v : r) out.back().push_back(Q(v));
    }
    return out;
}

XMatrix rational_x(const std::vector<std::vector<Q>>& m) {
    XMatrix out;
    for (auto& r : m) {
        out.emplace_back();
        for (auto& v : r) out.back().push_back({v, 0, 0});
    }
    return out;
}

Recognition recognized(const MonodromyResult& r, Ring ring = Ring::Rational) {
    NumericConstants nc(kP);
    return recognize_exact(reversed(r.M), ring, -100, nc);
}

int rank_minus_identity(const std::vector<std::vector<Q>>& g) {
    auto a = g;
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) a[i][i] -= 1;
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
        int p = -1;
        for (int r = rank; r < n; ++r)
            if (a[r][c] != 0) p = r;
        if (p < 0) continue;
        std::swap(a[p], a[rank]);
        for (int r = 0; r < n; ++r)
            if (r != rank && a[r][c] != 0) {
                Q f = a[r][c] / a[rank][c];
                for (int k = 0; k < n; ++k) a[r][k] -= f * a[rank][k];
            }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Q>> qmul(const std::vector<std::vector<Q>>& a, const std::vector<std::vector<Q>>& b) {
    std::vector<std::vector<Q>> c(a.size(), std::vector<Q>(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b[0].size(); ++j)
            for (size_t k = 0; k < b.size(); ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

const auto kQuintic0 = ints({{1, 0, 5, 5}, {-1, 1, 0, -5}, {0, 0, 1, 1}, {0, 0, 0, 1}});
const auto kQuintic1 = ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}});
const auto kGamma0 = ints({{1, 0, 4, 2}, {-1, 1, -2, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}});
const auto kGamma1 = ints({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});

Complex cq(Q re, Q im = 0) { return Complex(re, im, kP); }

}  // namespace

TEST_CASE("ell on the upper branch at a negative point") {
    NumericConstants nc(kP);
    Complex z = cq(Q(-1, 4096));
    LogSeries l = LogSeries::ell(4);
    EvalOptions eo;
    eo.branch = Branch::Upper;
    Complex v = eval_logseries(l, z, nc, eo);
    Real expect_im = -(Real(12, kP) * log(Real(2, kP))) / (Real(2, kP) * pi(kP));
    CHECK(lg(abs(v.re - Real(Q(1, 2), kP))) < -180);
    // log(-2^-12) = -12 ln 2 + i pi, divided by 2 pi i
    CHECK(lg(abs(v.im + expect_im)) < -180);
    CHECK(v.im.sign() > 0);
    eo.branch = Branch::Lower;
    Complex w = eval_logseries(l, z, nc, eo);
    CHECK(lg(abs(w.re + Real(Q(1, 2), kP))) < -180);
}

TEST_CASE("constant series evaluates to its value") {
    NumericConstants nc(kP);
    Complex v = eval_logseries(LogSeries::constant(Constant(1), 10), cq(Q(1, 10)), nc);
    CHECK(lg(abs(v - cq(1))) < -185);
    Complex p = eval_constant(Constant::P(), nc);
    CHECK(lg(abs(p.im - Real(2, kP) * pi(kP))) < -185);
}

TEST_CASE("quintic w01 at 1e-4 is stable under doubling the truncation") {
    auto bundle = load_bundle("quintic");
    auto w_at = [&](int N) {
        SolutionBasis u = bundle_basis(bundle, N);
        auto td = tau_data(wronskians(u), u);
        NumericConstants nc(kP);
        EvalOptions eo;
        eo.radius = 1.0 / 3125;
        eo.tol_bits = 100;
        return eval_logseries(td.w, cq(Q(1, 10000)), nc, eo);
    };
    Complex a = w_at(80), b = w_at(160);
    CHECK(lg(abs(a - b) / abs(b)) < std::log2(1e-30));
    // 1/z + 1010 + 1861650 z + 4119140000 z^2 + 9959217231250 z^3; later terms add about 5
    double head = 10000 + 1010 + 186.165 + 41.1914 + 9.959217231250;
    CHECK(a.re.to_double() - head > 0);
    CHECK(a.re.to_double() - head < 10);
    CHECK(lg(abs(a.im)) < -150);
}

TEST_CASE("evaluation outside the radius or with a large tail is refused") {
    NumericConstants nc(kP);
    SolutionBasis y = frobenius_basis(parse_operator("theta^4 - 5*z*(5*theta+1)*(5*theta+2)*(5*theta+3)*(5*theta+4)"), 30);
    EvalOptions eo;
    eo.radius = 1.0 / 3125;
    CHECK_THROWS_WITH_AS(eval_logseries(y.solutions[0], cq(Q(1, 1000)), nc, eo), doctest::Contains("RadiusExceeded"),
                         Error);
    CHECK_THROWS_WITH_AS(eval_logseries(y.solutions[0], cq(Q(1, 4000)), nc, eo), doctest::Contains("TailTooLarge"),
                         Error);
    try {
        eval_logseries(y.solutions[0], cq(Q(1, 4000)), nc, eo);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TailTooLarge);
    }
}

TEST_CASE("tiny loop and path reversal give the identity") {
    const auto& u = quintic_u();
    NumericConstants nc(kP);
    Complex base = cq(Q(1, 25000));
    CMatrix D = basis_cauchy_data(u, base, nc);
    Path tiny = square_loop(base, Real(Q(1, 1000000), kP));
    std::vector<Complex> y0 = D[0];
    auto back = analytic_continue(u.op, y0, tiny);
    for (int k = 0; k < 4; ++k) CHECK(lg(abs(back[k] - y0[k]) / max(Real(1, kP), abs(y0[k]))) < std::log2(1e-25));

    Path there{{base, cq(Q(1, 25000), Q(1, 20000)), cq(Q(-1, 10000), Q(1, 20000))}, "open path"};
    Transport a = transport_matrix(u.op, there);
    Transport b = transport_matrix(u.op, reversed(there));
    CHECK(lg(max_abs(b.T * a.T - cmatrix_identity(4, kP))) < std::log2(1e-40));
}

TEST_CASE("a path through a singularity is rejected") {
    const auto& u = quintic_u();
    Path bad{{cq(Q(1, 25000)), cq(Q(1, 1000))}, "crosses 1/3125"};
    CHECK_THROWS_AS(transport_matrix(u.op, bad), Error);
}

TEST_CASE("quintic u-basis monodromy") {
    const auto& u = quintic_u();
    auto r0 = monodromy_around(u, cq(0));
    auto r1 = monodromy_around(u, cq(Q(1, 3125)));
    auto g0 = recognized(r0), g1 = recognized(r1);
    CHECK(g0.M == rational_x(kQuintic0));
    CHECK(g1.M == rational_x(kQuintic1));
    CHECK(g0.residual_log2 < std::log2(1e-40));
    CHECK(g1.residual_log2 < std::log2(1e-40));
    CHECK(g0.symplectic_checked);
    CHECK(g0.symplectic);
    CHECK(g1.symplectic);
    CHECK(rank_minus_identity(kQuintic1) == 1);
    CHECK(rank_minus_identity(rational_matrix(g1.M)) == 1);
    REQUIRE(r1.values.size() == 4);
}

TEST_CASE("monodromy at infinity from the two finite loops") {
    // a large counterclockwise loop from the same basepoint encloses 0 and 1/3125;
    // its matrix is one of the two products of the finite ones
    const auto& u = quintic_u();
    auto g0 = rational_matrix(recognized(monodromy_around(u, cq(0))).M);
    auto g1 = rational_matrix(recognized(monodromy_around(u, cq(Q(1, 3125)))).M);
    Complex base = default_basepoint(u.op, kP);
    Complex up = base + cq(0, Q(1, 1000));
    Path big{{base, up, cq(Q(-1, 1000), Q(1, 1000)), cq(Q(-1, 1000), Q(-1, 1000)), cq(Q(1, 1000), Q(-1, 1000)),
              cq(Q(1, 1000), Q(1, 1000)), up, base},
             "square of half-width 1/1000 around 0 entered from above the basepoint"};
    auto g = rational_matrix(recognized(monodromy_matrix(u, big)).M);
    bool one_order = g == qmul(g0, g1) || g == qmul(g1, g0);
    CHECK(one_order);
    CHECK(is_symplectic(g));
    CHECK(g != g0);
}

TEST_CASE("loop refinement does not change the matrix") {
    const auto& u = quintic_u();
    auto coarse = monodromy_around(u, cq(Q(1, 3125)));
    Path fine;
    fine.description = "refined";
    const auto& pts = coarse.loop.points;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        fine.points.push_back(pts[i]);
        Complex mid = (pts[i] + pts[i + 1]) * Real(Q(1, 2), kP);
        mid.im += Real(Q(1, 1000000), kP);
        fine.points.push_back(mid);
    }
    fine.points.push_back(pts.back());
    auto refined = monodromy_matrix(u, fine);
    CHECK(lg(max_abs(refined.M - coarse.M)) < std::log2(1e-40));
}

TEST_CASE("parallel and serial transport agree exactly") {
    const auto& u = quintic_u();
    Path loop = loop_around(cq(Q(1, 3125)), default_basepoint(u.op, kP), singular_points(u.op, kP));
    ContinuationOptions par, ser;
    ser.parallel = false;
    Transport a = transport_matrix(u.op, loop, par), b = transport_matrix(u.op, loop, ser);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(a.T[i][j].re == b.T[i][j].re);
            CHECK(a.T[i][j].im == b.T[i][j].im);
        }
    CHECK(a.steps == b.steps);
}

TEST_CASE("doubling the precision shrinks the monodromy residual") {
    const auto& u = quintic_u();
    auto residual = [&](Prec p) {
        ContinuationOptions o;
        o.prec = p;
        auto r = monodromy_around(u, Complex(Q(1, 3125), 0, p), o);
        CMatrix exact = from_rational(kQuintic1, p);
        return lg(max_abs(reversed(r.M) - exact));
    };
    double r96 = residual(96), r192 = residual(192);
    CHECK(r96 < -60);
    CHECK(r192 < r96 - 64);
}

TEST_CASE("binomial5 y-basis monodromy has the a, b, c, x entries") {
    const auto& y = binomial5_y();
    NumericConstants nc(kP);
    auto r0 = recognize_exact(reversed(monodromy_around(y, cq(0)).M), Ring::RationalX, -100, nc);
    std::vector<std::vector<Q>> uni = {{1, 1, Q(1, 2), Q(1, 6), Q(1, 24)},
                                       {0, 1, 1, Q(1, 2), Q(1, 6)},
                                       {0, 0, 1, 1, Q(1, 2)},
                                       {0, 0, 0, 1, 1},
                                       {0, 0, 0, 0, 1}};
    CHECK(r0.M == rational_x(uni));

    auto r1 = recognize_exact(reversed(monodromy_around(y, cq(Q(1, 1024))).M), Ring::RationalX, -100, nc);
    const Q a(5, 6), b(11, 144), c(8);
    auto X = [](Q p, Q q = 0, Q r = 0) { return XNumber{p, q, r}; };
    XMatrix want = {
        {X(a * a), X(0), X(-a * b), X(0, 1 - a * a), X(-b * b / 2)},
        {X(0, -c * c / 2), X(1), X(0, -a * c), X(0, 0, c * c / 2), X(0, -(1 - a * a))},
        {X(-a * c), X(0), X(1 - 2 * a * a), X(0, a * c), X(-a * b)},
        {X(0), X(0), X(0), X(1), X(0)},
        {X(-c * c / 2), X(0), X(-a * c), X(0, c * c / 2), X(a * a)},
    };
    for (auto& row : want)
        for (auto& e : row) {
            e.a.canonicalize();
            e.b.canonicalize();
            e.c.canonicalize();
        }
    CHECK(r1.M == want);
    CHECK(r1.residual_log2 < std::log2(1e-40));
}

TEST_CASE("binomial5 w-basis monodromy and the Siegel action") {
    const auto& w = binomial5_w();
    auto m0 = monodromy_around(w, cq(0));
    auto m1 = monodromy_around(w, cq(Q(1, 1024)));
    auto r0 = recognized(m0), r1 = recognized(m1);
    CHECK(r0.M == rational_x(ints({{1, 4, -4, 3, 8}, {0, 1, -2, 1, 3}, {0, 0, 1, -1, -2}, {0, 0, 0, 1, 4}, {0, 0, 0, 0, 1}})));
    CHECK(r1.M == rational_x(ints({{0, 0, 0, 0, -1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {-1, 0, 0, 0, 0}})));
    CHECK(is_symplectic(kGamma0));
    CHECK(is_symplectic(kGamma1));
    CHECK(qmul(kGamma1, kGamma1) == ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));

    auto s0 = siegel_action(m0, kGamma0);
    auto s1 = siegel_action(m1, kGamma1);
    CHECK(lg(s0.t_law) < std::log2(1e-40));
    CHECK(lg(s1.t_law) < std::log2(1e-40));
    CHECK(lg(abs(s0.weight_factor - cq(1))) < std::log2(1e-40));
    CHECK(lg(abs(s1.weight_factor + cq(1))) < std::log2(1e-40));
    // the wrong generator does not fit
    CHECK(lg(siegel_action(m1, kGamma0).t_law) > -10);
}

TEST_CASE("recognition of noisy and unrecognizable matrices") {
    NumericConstants nc(kP);
    CMatrix I = cmatrix_identity(4, kP);
    CMatrix noisy = I;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-1000, 1000);
    for (auto& r : noisy)
        for (auto& x : r) {
            x.re += Real(rat(d(rng), 1000), kP) * pow2(-100, kP);
            x.im += Real(rat(d(rng), 1000), kP) * pow2(-100, kP);
        }
    auto id = recognize_exact(noisy, Ring::Rational, std::log2(1e-25), nc);
    CHECK(id.M == rational_x(ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})));
    CHECK(id.symplectic);
    auto idx = recognize_exact(noisy, Ring::RationalX, std::log2(1e-25), nc);
    CHECK(idx.M == id.M);

    CMatrix junk = I;
    junk[1][2] = Complex(pi(kP));
    CHECK_THROWS_WITH_AS(recognize_exact(junk, Ring::Rational, std::log2(1e-25), nc), doctest::Contains("(1,2)"), Error);

    Complex v = cq(Q(3, 7)) + nc.x() * Real(Q(-11, 5), kP);
    auto e = recognize_entry(v, Ring::RationalX, -120, nc);
    REQUIRE(e);
    CHECK(*e == XNumber{Q(3, 7), Q(-11, 5), 0});
    CHECK_FALSE(recognize_entry(v, Ring::Rational, -120, nc));
}

TEST_CASE("Guillera relations on the upper branch") {
    SolutionBasis w = bundle_basis(load_bundle("binomial5"), 130);
    auto a = guillera_check(w, GuilleraCase::A, cq(Q(-1, 4096)), kP);
    CHECK(lg(a.residual_linear) < std::log2(1e-15));
    CHECK(lg(a.residual_slope) < std::log2(1e-15));
    auto b = guillera_check(w, GuilleraCase::B, cq(Q(-1, 1 << 20)), kP);
    CHECK(lg(b.residual_linear) < std::log2(1e-15));
    CHECK(lg(b.residual_slope) < std::log2(1e-15));
    auto o = guillera_check(w, GuilleraCase::Other, cq(Q(-1, 10000)), kP);
    for (auto& r : o.nonholomorphic) CHECK(lg(r) < std::log2(1e-15));
    // on the lower branch tau1 moves by an integer and linear_a no longer holds
    auto lower = guillera_check(w, GuilleraCase::A, cq(Q(-1, 4096)), kP, Branch::Lower);
    CHECK(lg(abs(lower.tau1 - a.tau1)) >= 0);
    CHECK(lg(lower.residual_linear) > 0);
}

TEST_CASE("Guillera fails loudly outside the evaluation disc") {
    SolutionBasis w = bundle_basis(load_bundle("binomial5"), 40);
    CHECK_THROWS_AS(guillera_check(w, GuilleraCase::Other, cq(Q(-1, 1000)), kP), Error);
    CHECK_THROWS_AS(guillera_check(w, GuilleraCase::A, cq(Q(-1, 4096)), kP), Error);
}

TEST_CASE("hypergeometric series identities") {
    auto a = sum_identity(SumId::JGa, 50, 256);
    CHECK(lg(a.residual) < std::log2(1e-25));
    CHECK(lg(a.tail_bound) < std::log2(1e-25));
    auto r = sum_identity(SumId::Ramanujan1103, 20, 256);
    CHECK(lg(r.residual) < std::log2(1e-25));
    // the reference 820n^2+180n+1 series does not sum to 128/pi^2
    auto b = sum_identity(SumId::JGb, 50, 256);
    CHECK(b.residual.to_double() > 11.99);
    CHECK(b.residual.to_double() < 12.0);
    auto b13 = sum_identity(SumId::JGb13, 50, 256);
    CHECK(lg(b13.residual) < std::log2(1e-25));
    CHECK(lg(b13.tail_bound) < std::log2(1e-25));
}

TEST_CASE("Klemm embedding: worked example and degenerate input") {
    const Prec p = 128;
    CMat2 T{{{Complex(0, 1, p), Complex(p)}, {Complex(p), Complex(0, -1, p)}}};
    auto k = klemm_embed(T, {Complex(2, 0, p), Complex(1, 0, p)});
    CHECK(lg(abs(k.phi - Complex(3, 0, p))) < -120);
    CHECK(lg(abs(k.Z[0][0] - Complex(0, Q(5, 3), p))) < -120);
    CHECK(lg(abs(k.Z[0][1] - Complex(0, Q(-4, 3), p))) < -120);
    CHECK(lg(abs(k.Z[1][0] - Complex(0, Q(-4, 3), p))) < -120);
    CHECK(lg(abs(k.Z[1][1] - Complex(0, Q(5, 3), p))) < -120);
    CHECK(k.imZ_posdef);
    CHECK(k.detImT_negative);
    CHECK_THROWS_WITH_AS(klemm_embed(T, {Complex(p), Complex(p)}), doctest::Contains("PhiZero"), Error);

    CMat2 pos{{{Complex(0, 2, p), Complex(0, Q(1, 2), p)}, {Complex(0, Q(1, 2), p), Complex(0, 1, p)}}};
    CHECK_FALSE(klemm_embed(pos, {Complex(1, 0, p), Complex(1, 0, p)}).detImT_negative);
}

TEST_CASE("Klemm transformation laws") {
    const Prec p = 128;
    std::mt19937_64 rng(11);
    CMat2 T;
    std::array<Complex, 2> u{Complex(p), Complex(p)};
    random_klemm_input(rng, p, T, u);
    auto id = klemm_transform_check(T, u, ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), p);
    CHECK(lg(id.max_residual) < -120);
    CHECK(id.conditions_invariant);
    auto g0 = klemm_transform_check(T, u, kGamma0, p);
    CHECK(lg(g0.max_residual) < std::log2(1e-25));
    CHECK(g0.conditions_invariant);
    CHECK(g0.positivity);
    auto g1 = klemm_transform_check(T, u, kGamma1, p);
    CHECK(lg(g1.max_residual) < std::log2(1e-25));

    for (int i = 0; i < 20; ++i) CHECK(is_symplectic(random_symplectic(rng, 1 + i % 6)));

    auto trials = klemm_random_trials(1000, p, 42);
    CHECK(trials.failures == 0);
    CHECK(lg(trials.max_residual) < std::log2(1e-20));
    auto serial = klemm_random_trials(200, p, 42, false);
    auto parallel = klemm_random_trials(200, p, 42, true);
    CHECK(serial.failures == parallel.failures);
    CHECK(serial.max_residual == parallel.max_residual);
}

TEST_CASE("singular points") {
    auto s = singular_points(quintic_u().op, kP);
    REQUIRE(s.size() == 2);
    bool has_zero = false, has_s = false;
    for (auto& z : s) {
        if (z.is_zero() || lg(abs(z)) < -150) has_zero = true;
        if (lg(abs(z - cq(Q(1, 3125)))) < -150) has_s = true;
    }
    CHECK(has_zero);
    CHECK(has_s);
}
