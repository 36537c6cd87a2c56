#pragma once

#include "pf/frobenius.hpp"
#include "pf/hp.hpp"

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pf {

// P = 2 pi i and Xi = zeta(3)/P^3 at one precision
struct NumericConstants {
    Prec prec;
    Complex P, Xi;
    explicit NumericConstants(Prec prec);
    Complex x() const;  // 10 Xi
};

Complex eval_constant(const Constant& c, const NumericConstants& nc);
Complex eval_polynomial(const Polynomial& p, const Complex& z);

struct EvalOptions {
    Branch branch = Branch::Principal;
    double radius = 0;       // convergence radius of the coefficients; 0: estimate from the tail
    long tol_bits = 0;       // required tail bound 2^-tol_bits; 0: prec - 8
};

// Substitutes P, Xi and l = log(z0)/P. Throws RadiusExceeded or TailTooLarge.
Complex eval_logseries(const LogSeries& s, const Complex& z0, const NumericConstants& nc,
                       const EvalOptions& opt = {});
// Achieved tail bound as log2, for reporting.
double tail_bound_log2(const LogSeries& s, const Complex& z0, double radius);

struct Path {
    std::vector<Complex> points;
    std::string description;
};

Path reversed(const Path& p);
// Counterclockwise square loop from base around target; other singularities stay outside.
Path loop_around(const Complex& target, const Complex& base, const std::vector<Complex>& singularities);
// Closed counterclockwise square of half-width r around base + r, starting and ending at base
Path square_loop(const Complex& base, const Real& r);

// Finite singularities of the operator (0 and the roots of the leading coefficient).
std::vector<Complex> singular_points(const ThetaOperator& op, Prec prec);

struct ContinuationOptions {
    Prec prec = kDefaultPrec;
    int guard_bits = 16;
    bool parallel = true;
    int max_terms = 4000;
};

struct Transport {
    CMatrix T;         // data(end) = T * data(start), data = (y, y', ..., y^(m-1))
    int steps = 0;
    double error_log2 = 0;  // estimated relative error accumulated along the path
};

// Taylor recentring with step <= half the distance to the nearest singularity.
Transport transport_matrix(const ThetaOperator& op, const Path& path, const ContinuationOptions& opt = {});
std::vector<Complex> analytic_continue(const ThetaOperator& op, const std::vector<Complex>& init, const Path& path,
                                       const ContinuationOptions& opt = {});

// Row i: (f_i, f_i', ..., f_i^(m-1)) at z0 for each basis element (d/dz derivatives).
CMatrix basis_cauchy_data(const SolutionBasis& basis, const Complex& z0, const NumericConstants& nc,
                          const EvalOptions& opt = {});

struct MonodromyResult {
    CMatrix M;  // continued basis = M * basis, ascending basis order
    Complex basepoint;
    std::vector<Complex> values;  // basis values at the basepoint
    Path loop;
    double error_log2 = 0;
};

Complex default_basepoint(const ThetaOperator& op, Prec prec);
MonodromyResult monodromy_matrix(const SolutionBasis& basis, const Path& loop, const ContinuationOptions& opt = {});
MonodromyResult monodromy_around(const SolutionBasis& basis, const Complex& target, const ContinuationOptions& opt = {});

// For an order-5 basis w0..w4 with T = (w1 w2; w2 w3)/w0: compares the continued T with
// (A T + B)(C T + D)^-1 and reports w0' / (det(C T + D) w0).
struct SiegelAction {
    Real t_law;
    Complex weight_factor;
};
SiegelAction siegel_action(const MonodromyResult& r, const std::vector<std::vector<Q>>& gamma);

// a + b x + c x^2 with x = 10 zeta(3)/(2 pi i)^3
struct XNumber {
    Q a, b, c;
    bool is_rational() const { return b == 0 && c == 0; }
    std::string str() const;
    friend bool operator==(const XNumber& u, const XNumber& v) { return u.a == v.a && u.b == v.b && u.c == v.c; }
};
using XMatrix = std::vector<std::vector<XNumber>>;

enum class Ring { Rational, RationalX };

struct Recognition {
    XMatrix M;
    double residual_log2 = 0;
    bool symplectic_checked = false;
    bool symplectic = false;  // exact gamma^T J gamma = J when checked
};

// Entries matched with denominators <= max_den; NoRecognition lists offenders.
Recognition recognize_exact(const CMatrix& M, Ring ring, double tol_log2, const NumericConstants& nc,
                            long max_den = 1000000);
std::optional<XNumber> recognize_entry(const Complex& v, Ring ring, double tol_log2, const NumericConstants& nc,
                                       long max_den = 1000000);
// LLL-reduced integer combinations k with sum_i k_i rows[i] ~ 0 (rows[i] holds the coordinates
// of generator i); shortest first.
std::vector<std::vector<Z>> integer_relations(const std::vector<std::vector<Real>>& rows, long scale_bits);
void lll_reduce(std::vector<std::vector<Z>>& basis);

std::vector<std::vector<Q>> rational_matrix(const XMatrix& M);  // requires all entries rational
bool is_symplectic(const std::vector<std::vector<Q>>& g);      // g^T J g = J, J = (O -E; E O)

enum class GuilleraCase { A, B, Other };

struct GuilleraReport {
    Complex z0;
    Complex tau1, tau2, tau3, dtau2;
    Complex linear_a, linear_b, slope;
    Real residual_linear = Real(), residual_slope = Real();
    std::array<Real, 4> nonholomorphic;  // Re(t1/2-1), Im(t1/2+t2), Re(t1/4+t2+t3-1), Re(dt2/dt1+1/2)
    double tail_log2 = 0;
};

// wbasis: the binomial5 w-basis (tau_j = w_j/w0, unscaled)
GuilleraReport guillera_check(const SolutionBasis& wbasis, GuilleraCase which, const Complex& z0, Prec prec,
                              Branch branch = Branch::Upper);

// JGb13: the JGb series with constant term 13 in place of 1
enum class SumId { JGa, JGb, JGb13, Ramanujan1103 };

struct SumReport {
    Real value, expected, residual, tail_bound;
    int terms = 0;
};
SumReport sum_identity(SumId which, int terms, Prec prec);

using CMat2 = std::array<std::array<Complex, 2>, 2>;

struct KlemmData {
    CMat2 T, Z;
    std::array<Complex, 2> u;  // (u1, u0)
    Complex phi;
    bool detImT_negative = false;
    bool condition_ii = false;
    bool imZ_posdef = false;
};

KlemmData klemm_embed(const CMat2& T, const std::array<Complex, 2>& u);

struct KlemmCheck {
    Real z_law, phi_ratio, det_imz, max_residual;
    bool conditions_invariant = false;
    bool positivity = false;  // Im Z positive definite before and after
};

// gamma real 4x4 with blocks A B; C D
KlemmCheck klemm_transform_check(const CMat2& T, const std::array<Complex, 2>& u,
                                 const std::vector<std::vector<Q>>& gamma, Prec prec);

struct KlemmTrials {
    int trials = 0, failures = 0;
    Real max_residual = Real();
};
KlemmTrials klemm_random_trials(int n, Prec prec, std::uint64_t seed, bool parallel = true);

// random admissible data: Im T indefinite, Im(u3 conj(u1) + u2 conj(u0)) > 0
void random_klemm_input(std::mt19937_64& rng, Prec prec, CMat2& T, std::array<Complex, 2>& u);
std::vector<std::vector<Q>> random_symplectic(std::mt19937_64& rng, int words);

}  // namespace pf
