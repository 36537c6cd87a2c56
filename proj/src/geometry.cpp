#include "pf/geometry.hpp"

#include "pf/error.hpp"

#include <algorithm>
#include <set>

namespace pf {

namespace {

LogSeries scaled(const LogSeries& x, const Q& c) { return x * Constant(c); }

bool is_zero_to_order(const LogSeries& x) { return x.is_zero(); }

RationalFunction th(const RationalFunction& f, int k = 1) {
    RationalFunction r = f;
    for (int i = 0; i < k; ++i) r = r.theta();
    return r;
}

LogSeries d_dz(const LogSeries& x) { return x.derivative(); }

Series rational_part(const LogSeries& x, const char* what) {
    if (!x.is_ell_free()) fail(Errc::NotScalar, std::string(what) + " depends on l");
    const Series& s = x[0];
    for (const auto& c : s.coeffs())
        if (!c.is_rational()) fail(Errc::NotScalar, std::string(what) + " has a non-rational coefficient " + c.str());
    return s;
}

}  // namespace

LogSeries WronskianSet::operator()(int j, int l) const {
    if (j == l) return LogSeries(Series(w.begin()->second.order()));
    if (j < l) return w.at({j, l});
    return -w.at({l, j});
}

WronskianSet wronskians(const SolutionBasis& basis, const Constant& C) {
    WronskianSet ws;
    ws.C = C;
    ws.n = basis.size();
    std::vector<LogSeries> th;
    for (const auto& s : basis.solutions) th.push_back(s.theta());
    for (int j = 0; j < ws.n; ++j)
        for (int l = j + 1; l < ws.n; ++l) {
            const LogSeries& f = basis.solutions[j];
            const LogSeries& g = basis.solutions[l];
            Q a = basis.exponents[j], b = basis.exponents[l];
            LogSeries x = f * th[l] - th[j] * g;
            if (a != b) x += f * g * Constant(b - a);
            ws.w[{j, l}] = (x * C).shifted(-1);
            ws.exponent[{j, l}] = a + b;
        }
    return ws;
}

WronskianRelations find_wronskian_relation(const WronskianSet& ws) {
    WronskianRelations out;
    for (const auto& [k, v] : ws.w) out.pairs.push_back(k);
    int ncols = static_cast<int>(out.pairs.size());
    // group columns whose exponents differ by integers; shift to a common exponent
    std::map<Q, std::vector<int>> classes;
    for (int c = 0; c < ncols; ++c) {
        Q e = ws.exponent.at(out.pairs[c]);
        Z fl;
        mpz_fdiv_q(fl.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
        Q frac = e - Q(fl);
        classes[frac].push_back(c);
    }
    for (const auto& [frac, cols] : classes) {
        Q lo = ws.exponent.at(out.pairs[cols[0]]);
        for (int c : cols) lo = std::min(lo, ws.exponent.at(out.pairs[c]));
        std::vector<LogSeries> series;
        int order = 1 << 30;
        for (int c : cols) {
            Q shift = ws.exponent.at(out.pairs[c]) - lo;
            LogSeries s = ws.w.at(out.pairs[c]).shifted(static_cast<int>(shift.get_num().get_si()));
            order = std::min(order, s.order());
            series.push_back(s);
        }
        std::map<std::tuple<int, int, int, int>, std::vector<Q>> rows;
        for (size_t i = 0; i < series.size(); ++i) {
            const LogSeries s = series[i].truncated(order);
            for (int k = 0; k <= s.degree(); ++k) {
                const Series& comp = s[k];
                for (int n = comp.valuation(); n < comp.order(); ++n) {
                    const Constant c = comp.coeff(n);
                    for (const auto& [m, q] : c.terms()) {
                        auto& row = rows[{k, n, m.p, m.xi}];
                        if (row.empty()) row.assign(series.size(), Q(0));
                        row[i] = q;
                    }
                }
            }
        }
        std::vector<std::vector<Q>> A;
        for (auto& [key, row] : rows) A.push_back(row);
        if (A.empty()) A.push_back(std::vector<Q>(series.size(), Q(0)));
        for (const auto& k : kernel_rational(A, static_cast<int>(series.size()))) {
            std::vector<Q> full(ncols, Q(0));
            for (size_t i = 0; i < cols.size(); ++i) full[cols[i]] = k[i];
            Q s = primitive_scale(full);
            auto lead = std::find_if(full.begin(), full.end(), [](const Q& x) { return x != 0; });
            if (lead != full.end() && s * *lead < 0) s = -s;
            for (auto& x : full) x *= s;
            out.kernel.push_back(full);
        }
    }
    return out;
}

TauData tau_data(const WronskianSet& ws, const SolutionBasis& basis) {
    if (ws.n != 4) fail(Errc::BadInput, "tau_data needs a basis of size 4");
    const LogSeries& w01 = ws.w.at({0, 1});
    if (!w01.is_ell_free() || w01.is_zero()) fail(Errc::NonInvertibleW01, "w01 is not an l-free unit");
    LogSeries rel = ws(0, 2) + ws(1, 3);
    if (!is_zero_to_order(rel)) fail(Errc::RelationViolated, "w02 + w13 = " + rel.str());
    TauData td;
    td.w = w01;
    td.tau1 = ws(0, 3) / w01;
    td.tau2 = ws(0, 2) / w01;
    td.tau3 = -ws(1, 2) / w01;
    td.tau4 = ws(2, 3) / w01;
    td.t = basis.solutions[1] / basis.solutions[0];
    return td;
}

TauData tau_data_order5(const SolutionBasis& basis) {
    if (basis.size() != 5) fail(Errc::BadInput, "tau_data_order5 needs a basis of size 5");
    const auto& w = basis.solutions;
    if (!w[0].is_ell_free() || w[0].is_zero()) fail(Errc::NonInvertibleW01, "w0 is not an l-free unit");
    TauData td;
    td.w = w[0];
    td.tau1 = w[1] / w[0];
    td.tau2 = w[2] / w[0];
    td.tau3 = w[3] / w[0];
    td.tau4 = w[4] / w[0];
    td.t = -(td.tau2.theta() / td.tau1.theta());
    return td;
}

LogSeries tau_derivative(const LogSeries& x, const LogSeries& theta_tau) { return x.theta() / theta_tau; }

StructureSeries structure_series(const TauData& td, const GeometryConventions& conv) {
    StructureSeries ss;
    ss.theta_tau = scaled(td.tau1.theta(), conv.tau_scale);
    if (!ss.theta_tau.is_ell_free()) fail(Errc::NotScalar, "dtau/dz is not l-free");
    LogSeries t = scaled(td.t, Q(conv.t_sign));
    ss.w = td.w.shifted(conv.weight_shift);
    ss.v = tau_derivative(t, ss.theta_tau);
    int N = ss.theta_tau.order();
    ss.G1 = LogSeries::constant(Constant(1), N) / ss.theta_tau;
    ss.G2 = tau_derivative(ss.w, ss.theta_tau) / ss.w;
    ss.G3 = tau_derivative(ss.v, ss.theta_tau) / ss.v;
    ss.K = -(LogSeries::constant(Constant(1), ss.v.order()) / ss.v);
    return ss;
}

PInvariants p_series(const StructureSeries& ss) {
    auto D = [&](const LogSeries& x) { return tau_derivative(x, ss.theta_tau); };
    const LogSeries &G1 = ss.G1, &G2 = ss.G2, &G3 = ss.G3;
    LogSeries G23 = G2 + G3;
    LogSeries G1sq = G1 * G1;
    LogSeries p1 = (D(G1) * Constant(2) - G1 * G23) / (G1sq * Constant(2));
    LogSeries dG3 = D(G3), ddG3 = D(dG3), dddG3 = D(ddG3);
    LogSeries p2 = (dG3 * Constant(24) - D(G23) * Constant(20) + G23 * G23 * Constant(5) - G3 * G3 * Constant(8)) /
                   (G1sq * Constant(20));
    LogSeries G3sq = G3 * G3;
    LogSeries p3 = (dddG3 * Constant(-10) + G3 * ddG3 * Constant(40) + dG3 * dG3 * Constant(21) -
                    G3sq * dG3 * Constant(54) + G3sq * G3sq * Constant(9)) /
                   (G1sq * G1sq * Constant(50));
    PInvariants p;
    p.s1 = rational_part(p1, "p1");
    p.s2 = rational_part(p2, "p2");
    p.s3 = rational_part(p3, "p3");
    return p;
}

PInvariants p_invariants(const StructureSeries& ss, int max_deg, int guard) {
    PInvariants p = p_series(ss);
    auto rec = [&](const Series& s) {
        int avail = s.order() - std::min(0, s.valuation()) - guard - 1;
        int d = std::max(0, std::min(max_deg, avail / 2));
        return rational_reconstruct(s, d, d, guard);
    };
    p.p1 = rec(p.s1);
    p.p2 = rec(p.s2);
    p.p3 = rec(p.s3);
    return p;
}

ThetaOperator build_order5(const PInvariants& p) {
    const RationalFunction &p1 = p.p1, &p2 = p.p2, &p3 = p.p3;
    RationalFunction t1 = th(p1), t2 = th(p2), tt1 = th(p1, 2), tt2 = th(p2, 2), ttt1 = th(p1, 3), ttt2 = th(p2, 3),
                     t3 = th(p3);
    RationalFunction q1 = p1 * p1, q2 = p2 * p2;
    std::vector<RationalFunction> r(6);
    r[5] = RationalFunction(1);
    r[4] = p1 * Q(10);
    r[3] = t1 * Q(10) + q1 * Q(35) + p2 * Q(5);
    r[2] = tt1 * Q(5) + t2 * Q(15, 2) + p1 * t1 * Q(45) + q1 * p1 * Q(50) + p1 * p2 * Q(30);
    r[1] = q1 * t1 * Q(46) + p2 * t1 * Q(14) + q1 * q1 * Q(24) + p3 * Q(2) + q2 * Q(4) + p1 * tt1 * Q(11) +
           tt2 * Q(9, 2) + ttt1 + t1 * t1 * Q(7) + q1 * p2 * Q(52) + p1 * t2 * Q(30);
    r[0] = p2 * t2 * Q(4) + p1 * tt2 * Q(9) + t1 * t2 * Q(7) + q1 * t2 * Q(26) + p2 * tt1 * Q(2) +
           p1 * p2 * t1 * Q(20) + t3 + ttt2 + p1 * p3 * Q(4) + q1 * p1 * p2 * Q(24) + p1 * q2 * Q(8);
    return ThetaOperator(r);
}

namespace {

std::optional<std::vector<RadicalFactor>> radical_form(const RationalFunction& p1) {
    // -2 p1 / z = -2 p1(0)/z + sum_i r_i / (z - a_i), all poles simple and rational
    const Polynomial& d = p1.den();
    Polynomial rest;
    std::vector<Q> roots = rational_roots(d, &rest);
    if (rest.degree() > 0) return std::nullopt;
    std::set<Q> uniq(roots.begin(), roots.end());
    if (uniq.size() != roots.size()) return std::nullopt;
    Polynomial q, rem;
    Polynomial::divmod(p1.num(), d, q, rem);
    if (q.degree() > 0) return std::nullopt;
    std::vector<RadicalFactor> out;
    for (const Q& a : roots) {
        if (a == 0) return std::nullopt;
        // residue of -2 p1(z)/z at a
        Polynomial da = d.derivative();
        Q res = Q(-2) * p1.num().eval(a) / (da.eval(a) * a);
        // integral of res/(z-a) = res log(1 - z/a) + const
        out.push_back({Polynomial(std::vector<Q>{1, Q(-1) / a}), res});
    }
    return out;
}

}  // namespace

Pullback build_order4_pullback(const PInvariants& p, int N) {
    const RationalFunction &p1 = p.p1, &p2 = p.p2, &p3 = p.p3;
    RationalFunction t1 = th(p1), t2 = th(p2), tt1 = th(p1, 2), tt2 = th(p2, 2), ttt1 = th(p1, 3);
    RationalFunction q1 = p1 * p1;
    std::vector<RationalFunction> r(5);
    r[4] = RationalFunction(1);
    r[3] = p1 * Q(16);
    r[2] = (q1 * Q(187) + p2 * Q(5) + t1 * Q(38)) * Q(1, 2);
    r[1] = (tt1 * Q(22) + t2 * Q(5) + p1 * t1 * Q(294) + q1 * p1 * Q(472) + p1 * p2 * Q(40)) * Q(1, 2);
    r[0] = (p3 * Q(-8) + p2 * p2 * Q(9) + tt2 * Q(12) + ttt1 * Q(40) + p1 * t2 * Q(160) + p2 * t1 * Q(124) +
            q1 * t1 * Q(4420) + p1 * tt1 * Q(680) + t1 * t1 * Q(460) + q1 * p2 * Q(622) + q1 * q1 * Q(3465)) *
           Q(1, 16);
    Pullback pb;
    pb.op = ThetaOperator(r);
    if (p1.den().eval(0) == 0) fail(Errc::BadInput, "p1 has a pole at z = 0");
    Q p10 = p1.eval(0);
    pb.z_exponent = Q(-2) * p10;
    Series s = to_series(p1 - RationalFunction(p10), N);
    pb.g = series_exp(integrate_dz_over_z(s) * Constant(-2));
    pb.radical = radical_form(p1);
    return pb;
}

LogSeries wronskian3(const LogSeries& a, const LogSeries& b, const LogSeries& c) {
    LogSeries a1 = d_dz(a), b1 = d_dz(b), c1 = d_dz(c);
    LogSeries a2 = d_dz(a1), b2 = d_dz(b1), c2 = d_dz(c1);
    return a * (b1 * c2 - b2 * c1) - b * (a1 * c2 - a2 * c1) + c * (a1 * b2 - a2 * b1);
}

ExteriorCubeData exterior_cube_data(const SolutionBasis& basis) {
    if (basis.size() != 4) fail(Errc::BadInput, "exterior_cube_data needs a basis of size 4");
    WronskianSet ws = wronskians(basis, Constant(1));
    LogSeries rel = ws(0, 2) + ws(1, 3);
    if (!rel.is_zero()) fail(Errc::RelationViolated, "w02 + w13 = " + rel.str());
    const auto& u = basis.solutions;
    auto d3 = [](const LogSeries& x) { return d_dz(d_dz(d_dz(x))); };
    ExteriorCubeData e;
    e.U = u[0] * d3(u[2]) - d3(u[0]) * u[2] + u[1] * d3(u[3]) - d3(u[1]) * u[3];
    std::vector<Polynomial> q = d_form(basis.op);
    int N = e.U.order();
    Series A = to_series(RationalFunction(q[3], q[4]), N + 4);
    e.checkA = (d_dz(e.U) * Constant(2) + e.U * A).is_zero();
    e.checkW = (wronskian3(u[0], u[1], u[3]) + u[0] * e.U).is_zero();
    return e;
}

bool PullbackConverseReport::all() const {
    return det_identity && std::all_of(annihilated.begin(), annihilated.end(), [](bool b) { return b; });
}

PullbackConverseReport verify_pullback_converse(const TauData& td, const StructureSeries& ss, const Pullback& pb) {
    PullbackConverseReport rep;
    const LogSeries& w = ss.w;
    LogSeries tt1 = td.tau1.theta();
    LogSeries w1 = td.tau1 * w;
    LogSeries det = w * w1.theta() - w1 * w.theta();
    LogSeries G1 = LogSeries::constant(Constant(1), tt1.order()) / tt1;
    rep.det_identity = (det - w * w / G1).is_zero();
    if (!tt1.is_ell_free()) fail(Errc::NotScalar, "dtau1/dz is not l-free");
    const Series& s = tt1[0];
    Constant lead = s.leading();
    Series root = series_sqrt(s.shifted(-s.valuation()) * lead.inverse());
    if (s.valuation() % 2) fail(Errc::OddValuation, "dtau1/dz has odd valuation");
    LogSeries u = w * LogSeries(root.shifted(s.valuation() / 2));
    LogSeries d2 = td.tau2.theta() / tt1;
    rep.functions = {u, d2 * u, (td.tau1 * d2 - td.tau2) * u, (td.tau2 * d2 - td.tau3) * u};
    ThetaOperator op = gauge_transform(pb.op, -pb.z_exponent);
    for (int i = 0; i < 4; ++i) {
        LogSeries f = rep.functions[i] * pb.g;
        rep.annihilated[i] = apply(op, f).is_zero();
    }
    return rep;
}

SolutionBasis symplectic_frobenius_basis(const ThetaOperator& op, int N) {
    SolutionBasis y = frobenius_basis(op, N);
    if (y.size() != 4) fail(Errc::BadInput, "symplectic basis needs order 4");
    WronskianRelations rel = find_wronskian_relation(wronskians(y));
    if (rel.kernel.size() != 1) fail(Errc::RelationViolated, "expected exactly one wronskian relation, found " + std::to_string(rel.kernel.size()));
    std::map<std::pair<int, int>, Q> c;
    for (size_t i = 0; i < rel.pairs.size(); ++i) c[rel.pairs[i]] = rel.kernel[0][i];
    if (c[{2, 3}] != 0) fail(Errc::RelationViolated, "relation involves w23");
    if (c[{0, 2}] * c[{1, 3}] - c[{0, 3}] * c[{1, 2}] == 0) fail(Errc::SingularMatrix, "degenerate relation");
    ConstMatrix M(4, std::vector<Constant>(4));
    M[0][0] = 1;
    M[1][1] = 1;
    M[2][1] = c[{0, 1}];
    M[2][2] = c[{0, 2}];
    M[2][3] = c[{0, 3}];
    M[3][2] = c[{1, 2}];
    M[3][3] = c[{1, 3}];
    return change_basis(y, M, "symplectic");
}

ThetaOperator random_mum_operator(std::mt19937_64& rng) {
    static const Q choices[] = {Q(1, 2), Q(1, 3), Q(1, 4), Q(1, 6), Q(1, 5), Q(2, 5), Q(1, 8), Q(3, 8), Q(1, 10), Q(3, 10), Q(1, 12), Q(5, 12)};
    std::uniform_int_distribution<int> pick(0, 11);
    Q a = choices[pick(rng)], b = choices[pick(rng)];
    Polynomial f = Polynomial(std::vector<Q>{a, 1}) * Polynomial(std::vector<Q>{1 - a, 1}) *
                   Polynomial(std::vector<Q>{b, 1}) * Polynomial(std::vector<Q>{1 - b, 1});
    Q scale = Q(a.get_den() * a.get_den() * b.get_den() * b.get_den());
    std::uniform_int_distribution<int> mult(1, 3);
    Q C = scale * mult(rng);
    std::map<int, Polynomial> pieces;
    pieces[0] = Polynomial::monomial(1, 4);
    pieces[1] = f * (-C);
    return ThetaOperator::from_pieces(pieces);
}

LogSeries wronskian_identity_residual(const SolutionBasis& basis) {
    const auto& u = basis.solutions;
    auto W2 = [](const LogSeries& a, const LogSeries& b) { return a * d_dz(b) - d_dz(a) * b; };
    return W2(W2(u[0], u[1]), W2(u[2], u[3])) + u[0] * wronskian3(u[1], u[2], u[3]) - u[1] * wronskian3(u[0], u[2], u[3]);
}

LogSeries master_invariant(const SolutionBasis& basis, const StructureSeries& ss) {
    LogSeries t = basis.solutions[1] / basis.solutions[0];
    LogSeries tt = t.theta();
    auto D = [&](const LogSeries& x) { return x.theta() / tt; };
    const LogSeries& K = ss.K;
    LogSeries K1 = D(K), K2 = D(K1), K3 = D(K2), K4 = D(K3);
    int N = tt.order();
    LogSeries z1 = LogSeries(Series::monomial(Constant(1), 1, N + 1)) / tt;
    LogSeries K1sq = K1 * K1, Ksq = K * K;
    LogSeries num = K1sq * K1sq * Constant(175) - K2 * K1sq * K * Constant(280) + K2 * K2 * Ksq * Constant(49) +
                    K3 * K1 * Ksq * Constant(70) - K4 * Ksq * K * Constant(10);
    LogSeries z1sq = z1 * z1;
    return num / (Ksq * Ksq * z1sq * z1sq);
}

LogSeries yukawa_ratio(const SolutionBasis& basis, const WronskianSet& ws, const LogSeries& K) {
    const auto& u = basis.solutions;
    LogSeries w01 = ws(0, 1);
    LogSeries x = u[0] * u[0] * u[0] * wronskian3(u[0], u[1], u[3]) / (w01 * w01 * w01);
    return x / K;
}

}  // namespace pf
