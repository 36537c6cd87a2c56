#include "doctest.h"
#include "pf/error.hpp"
#include "pf/frobenius.hpp"
#include "testutil.hpp"

using namespace pf;

namespace {

const char* kQuintic = "theta^4 - 5*z*(5*theta+1)*(5*theta+2)*(5*theta+3)*(5*theta+4)";
const char* kBinomial5 = "theta^5 - 32*z*(2*theta+1)^5";
const char* kNonMum = "theta^2*(theta-1/3)*(theta+1/3) - z*(theta+1/2)^2*(theta+5/6)*(theta+7/6)";

ConstMatrix quintic_u() {
    return parse_matrix({{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"200*Xi", "-25/12", "0", "-5"}, {"-25/12", "5/2", "5", "0"}});
}

ConstMatrix binomial5_w() {
    return parse_matrix({{"1", "0", "0", "0", "0"},
                         {"0", "4", "0", "0", "0"},
                         {"5/6", "0", "-4", "0", "0"},
                         {"-8*x", "0", "0", "8", "0"},
                         {"-25/36", "-32*x", "20/3", "0", "32"}});
}

}  // namespace

TEST_CASE("quintic y0") {
    SolutionBasis b = frobenius_basis(parse_operator(kQuintic), 20);
    const Series& y0 = b.solutions[0][0];
    CHECK(y0.coeff(0) == Constant(1));
    CHECK(y0.coeff(1) == Constant(120));
    CHECK(y0.coeff(2) == Constant(113400));
    for (int j = 0; j < 4; ++j) {
        CHECK(b.solutions[j].degree() == j);
        CHECK(apply(b.op, b.solutions[j]).is_zero());
        for (int k = 1; k <= j; ++k) CHECK(b.solutions[j][j - k].coeff(0).is_zero());
    }
}

TEST_CASE("binomial5 y0 is C(2n,n)^5") {
    SolutionBasis b = frobenius_basis(parse_operator(kBinomial5), 30);
    for (int n = 0; n < 30; ++n) {
        Q c = binomial(2 * n, n);
        CHECK(b.solutions[0][0].coeff(n) == Constant(Q(c * c * c * c * c)));
    }
    for (const auto& y : b.solutions) CHECK(apply(b.op, y).is_zero());
}

TEST_CASE("theta^4 basis") {
    int N = 10;
    SolutionBasis b = frobenius_basis(parse_operator("theta^4"), N);
    LogSeries l = LogSeries::ell(N);
    CHECK(b.solutions[0] == LogSeries::constant(Constant(1), N));
    CHECK(b.solutions[1] == l);
    CHECK(b.solutions[2] == l * l * Constant(Q(1, 2)));
    CHECK(b.solutions[3] == l * l * l * Constant(Q(1, 6)));
}

TEST_CASE("NotMUM and general Frobenius") {
    try {
        frobenius_basis(parse_operator(kNonMum), 10);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotMUM);
    }
    SolutionBasis g = frobenius_basis_general(parse_operator(kNonMum), 25);
    REQUIRE(g.size() == 4);
    CHECK(g.exponents == std::vector<Q>{Q(-1, 3), 0, 0, Q(1, 3)});
    // z^rho y: theta acts on y as (theta + rho)
    for (int j = 0; j < 4; ++j) {
        ThetaOperator shifted = gauge_transform(g.op, -g.exponents[j]);
        CHECK(apply(shifted, g.solutions[j]).is_zero());
    }
    CHECK(g.solutions[2].degree() == 1);
    CHECK_THROWS_AS(frobenius_basis_general(parse_operator("theta*(theta-1) - z"), 10), Error);
}

TEST_CASE("determinism") {
    auto a = frobenius_basis(parse_operator(kQuintic), 25);
    auto b = frobenius_basis(parse_operator(kQuintic), 25);
    for (int j = 0; j < 4; ++j) CHECK(a.solutions[j] == b.solutions[j]);
}

TEST_CASE("change of basis") {
    auto y = frobenius_basis(parse_operator(kQuintic), 15);
    ConstMatrix I(4, std::vector<Constant>(4));
    for (int i = 0; i < 4; ++i) I[i][i] = 1;
    auto same = change_basis(y, I);
    for (int j = 0; j < 4; ++j) CHECK(same.solutions[j] == y.solutions[j]);
    auto u = change_basis(y, quintic_u(), "u");
    for (const auto& s : u.solutions) CHECK(apply(u.op, s).is_zero());
    ConstMatrix S = I;
    S[3] = S[2];
    try {
        change_basis(y, S);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SingularMatrix);
    }
    CHECK(determinant(quintic_u()) == Constant(25));
}

TEST_CASE("binomial5 quadratic relations") {
    int N = 20;
    auto y = frobenius_basis(parse_operator(kBinomial5), N);
    const auto& s = y.solutions;
    LogSeries r = s[0] * s[4] - s[1] * s[3] + s[2] * s[2] * Constant(Q(1, 2));
    CHECK(r.is_zero());
    LogSeries t = s[0].theta() * s[4].theta() - s[1].theta() * s[3].theta() + s[2].theta() * s[2].theta() * Constant(Q(1, 2));
    CHECK(t.is_zero());
    auto w = change_basis(y, binomial5_w(), "w");
    const auto& v = w.solutions;
    LogSeries q = v[0] * v[4] - v[1] * v[3] + v[2] * v[2];
    CHECK(q.is_zero());
}

TEST_CASE("parse constants") {
    CHECK(parse_constant("200*Xi") == Constant::monomial(200, 0, 1));
    CHECK(parse_constant("-8*x") == Constant::monomial(-80, 0, 1));
    CHECK(parse_constant("3/2*P^-2 + 1") == Constant::monomial(Q(3, 2), -2) + Constant(1));
    CHECK(parse_constant("-25/12") == Constant(Q(-25, 12)));
}
