#include "doctest.h"

#include "pf/error.hpp"
#include "pf/kernels.hpp"
#include "pf/logseries.hpp"
#include "pf/reconstruct.hpp"
#include "testutil.hpp"

using namespace pf;

static Series poly_series(std::vector<long> c, int order) {
    std::vector<Q> q;
    for (long x : c) q.emplace_back(x);
    return Series::from_rational(q, 0, order);
}

TEST_CASE("constants: P and Xi arithmetic") {
    Constant p = Constant::P(), xi = Constant::Xi();
    CHECK((p * Constant::P(-1)) == Constant(1));
    CHECK((p * p).coeff(2, 0) == 1);
    CHECK_THROWS_AS(xi * xi, Error);
    Constant u = Constant(Q(3, 2)) * Constant::P(2);
    CHECK((u * u.inverse()) == Constant(1));
    CHECK_THROWS_AS((u + xi).inverse(), Error);
    Constant s = Constant(Q(9, 4)) * Constant::P(-2);
    Constant r = s.sqrt(-1);
    CHECK(r == Constant(Q(-3, 2)) * Constant::P(-1));
    CHECK((r * r) == s);
    CHECK_THROWS_AS(Constant::P(3).sqrt(), Error);
    CHECK_THROWS_AS((Constant(1) + p).inverse(), Error);
    CHECK(Constant(Q(7)).rational() == 7);
    CHECK_THROWS_AS(p.rational(), Error);
}

TEST_CASE("constants: exponent bound") {
    CHECK_THROWS_AS(Constant::P(9), Error);
    CHECK_THROWS_AS(Constant::P(5) * Constant::P(5), Error);
}

TEST_CASE("series_reciprocal examples") {
    Series a = poly_series({1, -1}, 4);
    CHECK(series_reciprocal(a) == poly_series({1, 1, 1, 1}, 4));
    CHECK(series_reciprocal(Series::constant(1, 6)) == Series::constant(1, 6));

    // w01 of the quintic (first terms), N = 5
    Series w01 = Series::from_rational({1, 1010, 1861650, Q("4119140000"), Q("9959217231250")}, -1, 4);
    Series r = series_reciprocal(w01);
    CHECK(r.valuation() == 1);
    CHECK(r.coeff(1) == Constant(1));
    CHECK(r.coeff(2) == Constant(-1010));
    Series prod = w01 * r;
    for (int k = 0; k < prod.order(); ++k) CHECK(prod.coeff(k) == Constant(k == 0 ? 1 : 0));
    CHECK_THROWS_AS(series_reciprocal(Series(5)), Error);
}

TEST_CASE("series_sqrt examples") {
    CHECK(series_sqrt(poly_series({1, 2, 1}, 6)) == poly_series({1, 1}, 6));
    Series s = Series::monomial(Constant(4), 2, 8);
    Series r = series_sqrt(s, 1);
    CHECK(r.valuation() == 1);
    CHECK(r.coeff(1) == Constant(2));
    CHECK(pft::agree(r * r, s));
    Series b = series_sqrt(poly_series({1, 1}, 4));
    CHECK(b == Series::from_rational({1, Q(1, 2), Q(-1, 8), Q(1, 16)}, 0, 4));
    CHECK_THROWS_AS(series_sqrt(Series::monomial(Constant(1), 1, 5)), Error);
    CHECK_THROWS_AS(series_sqrt(Series::constant(Constant(2), 5)), Error);
}

TEST_CASE("rational_reconstruct examples") {
    // (1-6250z)/(2(1-3125z)) expanded by hand oracle: 1/2 - 3125/2 z - 9765625/2 z^2 ...
    std::vector<Q> c(40);
    c[0] = Q(1, 2);
    for (int n = 1; n < 40; ++n) {
        // (1/2 - 3125 z) * sum 3125^n z^n
        Z p3125 = 1;
        for (int i = 0; i < n; ++i) p3125 *= 3125;
        c[n] = Q(p3125) / 2 - Q(p3125);
    }
    CHECK(c[1] == Q(-3125, 2));
    CHECK(c[2] == Q(-9765625, 2));
    RationalFunction f = rational_reconstruct(Series::from_rational(c, 0, 40), 8, 8, 5);
    CHECK(f == RationalFunction(Polynomial(std::vector<Q>{1, -6250}), Polynomial(std::vector<Q>{2, -6250})));

    std::vector<Q> d(40);
    Z p = 1;
    for (int n = 1; n < 40; ++n) {
        d[n] = Q(-256 * p);
        p *= 1024;
    }
    RationalFunction g = rational_reconstruct(Series::from_rational(d, 0, 40), 8, 8, 5);
    CHECK(g == RationalFunction(Polynomial(std::vector<Q>{0, -256}), Polynomial(std::vector<Q>{1, -1024})));

    CHECK(rational_reconstruct(Series::constant(7, 40), 8, 8, 5) == RationalFunction(7));
    CHECK_THROWS_AS(rational_reconstruct(Series::constant(Constant::P(), 20), 2, 2, 5), Error);
    // exp-like series has no low-degree rational form
    std::vector<Q> e(20);
    for (int n = 0; n < 20; ++n) e[n] = Q(1) / factorial(n);
    CHECK_THROWS_AS(rational_reconstruct(Series::from_rational(e, 0, 20), 3, 3, 5), Error);
}

TEST_CASE("property: ring axioms on random series") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        Series a = pft::rand_series(rng, -1, 12, true, true), b = pft::rand_series(rng, 0, 14, true),
               c = pft::rand_series(rng, 1, 13, true);
        Series l = (a * b) * c, r = a * (b * c);
        CHECK(l == r);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("property: reciprocal times self is one, 1000 random series") {
    std::mt19937_64 rng(12);
    int bad = 0;
    for (int t = 0; t < 1000; ++t) {
        int v = static_cast<int>(rng() % 5) - 2;
        Series a = pft::rand_series(rng, v, 10 + static_cast<int>(rng() % 6));
        if (t % 3 == 0) a = a * Constant::P(t % 2 ? 1 : -2);
        if (a.is_zero() || !a.leading().is_invertible()) continue;
        Series p = a * series_reciprocal(a);
        for (int k = 0; k < p.order(); ++k)
            if (!(p.coeff(k) == Constant(k == 0 ? 1 : 0))) ++bad;
        if (p.order() < a.order() - 2 * std::abs(a.valuation())) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("property: sqrt squared") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        int v = 2 * (static_cast<int>(rng() % 3) - 1);
        Series h = pft::rand_series(rng, v / 2, 12, false);
        if (h.is_zero()) continue;
        Series s = h * h;
        Series r = series_sqrt(s, 1);
        CHECK((r * r).order() == s.order());
        CHECK(r * r == s);
    }
}

TEST_CASE("property: reconstruct is a left inverse of expansion") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 60; ++t) {
        int dn = static_cast<int>(rng() % 9), dd = static_cast<int>(rng() % 9);
        std::vector<Q> n(dn + 1), d(dd + 1);
        for (auto& x : n) x = pft::rand_q(rng, 9, 3);
        for (auto& x : d) x = pft::rand_q(rng, 9, 3);
        d[0] = 1;
        if (n.back() == 0) n.back() = 1;
        RationalFunction f{Polynomial(n), Polynomial(d)};
        Series s = to_series(f, 40);
        CHECK(rational_reconstruct(s, 8, 8, 5) == f);
    }
}

TEST_CASE("log series: theta, degree, shift") {
    int N = 10;
    LogSeries l = LogSeries::ell(N);
    CHECK(l.theta() == LogSeries::constant(Constant::P(-1), N));
    LogSeries zk(Series::monomial(Constant(1), 3, N));
    CHECK(zk.theta() == zk * Constant(3));
    std::mt19937_64 rng(15);
    for (int t = 0; t < 20; ++t) {
        int da = static_cast<int>(rng() % 4), db = static_cast<int>(rng() % 4);
        std::vector<Series> a, b;
        for (int k = 0; k <= da; ++k) a.push_back(pft::rand_series(rng, 0, N, true));
        for (int k = 0; k <= db; ++k) b.push_back(pft::rand_series(rng, 0, N, true));
        a.back() = Series::constant(Constant(1), N) + a.back().shifted(1).truncated(N);
        b.back() = Series::constant(Constant(2), N) + b.back().shifted(1).truncated(N);
        LogSeries A(a), B(b);
        CHECK((A * B).degree() == da + db);
        // Leibniz rule for theta
        CHECK((A * B).theta() == A.theta() * B + A * B.theta());
    }
    // (l+1)^2 = l^2 + 2l + 1
    LogSeries sq = l * l;
    LogSeries e = sq.ell_shift(Constant(1));
    CHECK(e == sq + l * Constant(2) + LogSeries::constant(Constant(1), N));
    CHECK_THROWS_AS(LogSeries::constant(1, N) / l, Error);
}

TEST_CASE("kernels: serial and parallel agree") {
    std::mt19937_64 rng(16);
    std::vector<Constant> a, b;
    for (int i = 0; i < 120; ++i) {
        a.push_back(pft::rand_const(rng, true, true));
        b.push_back(pft::rand_const(rng, true));
    }
    CHECK(kernels::convolve_serial(a, b, 120) == kernels::convolve_parallel(a, b, 120));
}

TEST_CASE("rational functions") {
    RationalFunction f(Polynomial(std::vector<Q>{1, -6250}), Polynomial(std::vector<Q>{2, -6250}));
    CHECK(f.den() == Polynomial(std::vector<Q>{Q(-1, 3125), 1}));
    RationalFunction g = f * RationalFunction(Polynomial(std::vector<Q>{2, -6250}));
    CHECK(g == RationalFunction(Polynomial(std::vector<Q>{1, -6250})));
    // theta(1/(1-z)) = z/(1-z)^2
    RationalFunction h = RationalFunction(1) / RationalFunction(Polynomial(std::vector<Q>{1, -1}));
    CHECK(h.theta() ==
          RationalFunction(Polynomial::z(), Polynomial(std::vector<Q>{1, -1}) * Polynomial(std::vector<Q>{1, -1})));
    auto roots = rational_roots(Polynomial(std::vector<Q>{0, 0, Q(-1, 9), 0, 1}));
    CHECK(roots == std::vector<Q>{Q(-1, 3), 0, 0, Q(1, 3)});
}
