#pragma once

#include "pf/frobenius.hpp"
#include "pf/reconstruct.hpp"

#include <array>
#include <map>
#include <optional>
#include <random>
#include <utility>

namespace pf {

// t = t_sign * (u1/u0), tau = tau_scale * tau1, w = z^weight_shift * w01 (or w0)
struct GeometryConventions {
    int t_sign = 1;
    Q tau_scale = 1;
    int weight_shift = 0;
};

// w[(j,l)] = C W(u_j, u_l) / z^exponent[(j,l)] for j < l (d/dz wronskian)
struct WronskianSet {
    Constant C;
    int n = 0;
    std::map<std::pair<int, int>, LogSeries> w;
    std::map<std::pair<int, int>, Q> exponent;
    LogSeries operator()(int j, int l) const;
};

WronskianSet wronskians(const SolutionBasis& basis, const Constant& C = Constant::P());

struct WronskianRelations {
    std::vector<std::pair<int, int>> pairs;   // column order
    std::vector<std::vector<Q>> kernel;        // each: coefficients on pairs
};
WronskianRelations find_wronskian_relation(const WronskianSet& ws);

struct TauData {
    LogSeries tau1, tau2, tau3, tau4;
    LogSeries t;  // u1/u0 (order 4) or -dtau2/dtau1 (order 5)
    LogSeries w;  // w01 (order 4) or w0 (order 5)
};

TauData tau_data(const WronskianSet& ws, const SolutionBasis& basis);
TauData tau_data_order5(const SolutionBasis& basis);

struct StructureSeries {
    LogSeries v, G1, G2, G3, K;
    LogSeries theta_tau;  // theta of the scaled tau
    LogSeries w;          // weight form actually used
};

StructureSeries structure_series(const TauData& td, const GeometryConventions& conv = {});
LogSeries tau_derivative(const LogSeries& x, const LogSeries& theta_tau);

struct PInvariants {
    RationalFunction p1, p2, p3;
    Series s1, s2, s3;
};

PInvariants p_series(const StructureSeries& ss);  // series only, p_i left zero
PInvariants p_invariants(const StructureSeries& ss, int max_deg = 12, int guard = kDefaultGuard);

ThetaOperator build_order5(const PInvariants& p);

struct RadicalFactor {
    Polynomial base;  // base(0) = 1
    Q exponent;
};

struct Pullback {
    ThetaOperator op;
    Series g;        // exp(-2 int (p1 - p1(0)) dz/z), g(0) = 1
    Q z_exponent;    // -2 p1(0)
    std::optional<std::vector<RadicalFactor>> radical;
};

Pullback build_order4_pullback(const PInvariants& p, int N = kDefaultOrder);

struct ExteriorCubeData {
    LogSeries U;
    bool checkA = false;
    bool checkW = false;
};
ExteriorCubeData exterior_cube_data(const SolutionBasis& basis);

struct PullbackConverseReport {
    std::array<LogSeries, 4> functions;
    std::array<bool, 4> annihilated{};
    bool det_identity = false;  // |w0 tw0; w1 tw1| = w0^2/G1
    bool all() const;
};
PullbackConverseReport verify_pullback_converse(const TauData& td, const StructureSeries& ss, const Pullback& pb);

// Basis u0 = y0, u1 = y1, u2, u3 of a MUM order-4 operator with w02 + w13 = 0.
SolutionBasis symplectic_frobenius_basis(const ThetaOperator& op, int N);

// theta^4 - C z (theta+a)(theta+1-a)(theta+b)(theta+1-b) with small random a, b, C.
ThetaOperator random_mum_operator(std::mt19937_64& rng);

// W(W(u0,u1),W(u2,u3)) + u0 W(u1,u2,u3) - u1 W(u0,u2,u3)
LogSeries wronskian_identity_residual(const SolutionBasis& basis);
LogSeries wronskian3(const LogSeries& a, const LogSeries& b, const LogSeries& c);

// (175 K1^4 - 280 K2 K1^2 K + 49 (K2 K)^2 + 70 K3 K1 K^2 - 10 K4 K^3) / (K^4 z1^4),
// f^(k) = d^k f / d(u1/u0)^k
LogSeries master_invariant(const SolutionBasis& basis, const StructureSeries& ss);

// u0^3 W(u0,u1,u3) / w01^3 divided by K; a constant series when consistent.
LogSeries yukawa_ratio(const SolutionBasis& basis, const WronskianSet& ws, const LogSeries& K);

}  // namespace pf
