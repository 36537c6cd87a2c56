#include "doctest.h"
#include "pf/error.hpp"
#include "pf/operator.hpp"
#include "pf/operator_json.hpp"
#include "testutil.hpp"

using namespace pf;

namespace {

const char* kQuintic = "theta^4 - 5*z*(5*theta+1)*(5*theta+2)*(5*theta+3)*(5*theta+4)";
const char* kBinomial5 = "theta^5 - 32*z*(2*theta+1)^5";
const char* kNonMum = "theta^2*(theta-1/3)*(theta+1/3) - z*(theta+1/2)^2*(theta+5/6)*(theta+7/6)";

Series y0_quintic(int N) {
    std::vector<Q> c(N);
    for (int n = 0; n < N; ++n) c[n] = Q(factorial(5 * n) / (factorial(n) * factorial(n) * factorial(n) * factorial(n) * factorial(n)));
    return Series::from_rational(c, 0, N);
}

}  // namespace

TEST_CASE("parse examples") {
    ThetaOperator q = parse_operator(kQuintic);
    CHECK(q.order() == 4);
    CHECK(q.coeff(4) == Polynomial(std::vector<Q>{1, -3125}));
    CHECK(q.coeff(0) == Polynomial(std::vector<Q>{0, -120}));
    ThetaOperator e = parse_operator(kBinomial5);
    CHECK(e.order() == 5);
    CHECK(e.coeff(5) == Polynomial(std::vector<Q>{1, -1024}));
    ThetaOperator t = parse_operator("theta");
    CHECK(t.order() == 1);
    CHECK(t.coeff(0).is_zero());
    CHECK(t.coeff(1) == Polynomial(1));
    CHECK(parse_operator("θ^4 - 5z(5θ+1)(5θ+2)(5θ+3)(5θ+4)") == q);
}

TEST_CASE("noncommutativity theta z = z (theta + 1)") {
    CHECK(parse_operator("theta*z") == parse_operator("z*theta + z"));
    CHECK(parse_operator("theta^2*z") == parse_operator("z*(theta+1)^2"));
}

TEST_CASE("parse errors") {
    try {
        parse_operator("theta^4 + * z");
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SyntaxError);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_operator("theta + w"), Error);
    try {
        parse_operator("theta/z");
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonPolynomialCoefficient);
    }
    try {
        parse_operator("(theta");
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SyntaxError);
    }
}

TEST_CASE("print round trip and json") {
    for (const char* s : {kQuintic, kBinomial5, kNonMum, "theta", "theta^2 - z*(2*theta+1)^2/4", "z*theta - 3"}) {
        ThetaOperator a = parse_operator(s);
        CHECK(parse_operator(a.str()) == a);
        CHECK(operator_from_json(operator_to_json(a)) == a);
    }
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        std::vector<RationalFunction> r;
        for (int k = 0; k < 4; ++k) {
            std::vector<Q> c;
            for (int i = 0; i < 3; ++i) c.push_back(pft::rand_q(rng, 9, 3));
            r.emplace_back(Polynomial(c));
        }
        r.emplace_back(Polynomial(std::vector<Q>{1, pft::rand_q(rng, 9, 1)}));
        ThetaOperator a(r);
        CHECK(parse_operator(a.str()) == a);
    }
}

TEST_CASE("normalization") {
    ThetaOperator a = parse_operator("2*z*theta^2 - 4*z^2*theta");
    CHECK(a == parse_operator("theta^2 - 2*z*theta"));
    CHECK(parse_operator("-theta") == parse_operator("theta"));
}

TEST_CASE("apply") {
    int N = 20;
    for (int k = 0; k < 5; ++k) {
        LogSeries zk(Series::monomial(Constant(1), k, N));
        CHECK(apply(parse_operator("theta"), zk) == LogSeries(Series::monomial(Constant(k), k, N)));
    }
    LogSeries th = apply(parse_operator("theta"), LogSeries::ell(N));
    CHECK(th == LogSeries::constant(Constant::P(-1), N));
    LogSeries r = apply(parse_operator(kQuintic), LogSeries(y0_quintic(N)));
    CHECK(r.is_zero());
    CHECK(r.order() == N);
}

TEST_CASE("local exponents and MUM") {
    auto q = local_exponents(parse_operator(kQuintic));
    CHECK(q.exponents == std::vector<Q>{0, 0, 0, 0});
    CHECK_FALSE(q.irrational);
    CHECK(local_exponents(parse_operator(kBinomial5)).exponents == std::vector<Q>(5, Q(0)));
    auto r = local_exponents(parse_operator(kNonMum));
    CHECK(r.exponents == std::vector<Q>{Q(-1, 3), 0, 0, Q(1, 3)});
    CHECK(is_mum(parse_operator(kQuintic)));
    CHECK_FALSE(is_mum(parse_operator(kNonMum)));
    CHECK_FALSE(is_mum(parse_operator("theta - 1")));
    auto irr = local_exponents(parse_operator("theta^2 - 2 + z"));
    CHECK(irr.irrational);
}

TEST_CASE("gauge transform") {
    CHECK(gauge_transform(parse_operator("theta"), 1) == parse_operator("theta - 1"));
    for (const char* s : {kQuintic, kBinomial5, kNonMum}) {
        ThetaOperator a = parse_operator(s);
        CHECK(gauge_transform(a, 0) == a);
        for (int k : {-3, 1, 2}) CHECK(gauge_transform(gauge_transform(a, k), -k) == a);
    }
}

TEST_CASE("exterior square of the quintic") {
    ThetaOperator w = exterior_square(parse_operator(kQuintic));
    CHECK(w.order() == 5);
    ThetaOperator expect = parse_operator(
        "theta^5 - 5*z*(2*theta+1)*(625*theta^4+1250*theta^3+1500*theta^2+875*theta+202)"
        " + 3125*z^2*(5*theta+3)*(5*theta+4)*(5*theta+5)*(5*theta+6)*(5*theta+7)");
    CHECK(gauge_transform(w, 1) == expect);
}

TEST_CASE("exterior square of theta^4 and of the non-MUM operator") {
    CHECK(exterior_square(parse_operator("theta^4")) == parse_operator("(theta+1)^5"));
    CHECK(exterior_square(parse_operator(kNonMum)).order() == 6);
    CHECK_THROWS_AS(exterior_square(parse_operator("theta")), Error);
}

TEST_CASE("symmetric square of theta^2") {
    CHECK(symmetric_square(parse_operator("theta^2")) == parse_operator("theta^3"));
}

TEST_CASE("symmetric square") {
    ThetaOperator leg = parse_operator("theta^2 - z*(2*theta+1)^2/4");
    ThetaOperator s = symmetric_square(leg);
    CHECK(s.order() == 3);
    int N = 25;
    std::vector<Q> c(N);
    for (int n = 0; n < N; ++n) {
        Q b = Q(binomial(2 * n, n)) / Q(Z(1) << (2 * n));
        c[n] = b * b;
    }
    LogSeries u0(Series::from_rational(c, 0, N));
    CHECK(apply(leg, u0).is_zero());
    CHECK(apply(s, u0 * u0).is_zero());
}
