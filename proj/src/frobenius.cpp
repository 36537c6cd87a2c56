#include "pf/frobenius.hpp"

#include "pf/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>

namespace pf {

namespace {

using Eps = std::vector<Q>;  // truncated power series in epsilon

Eps eps_mul(const Eps& a, const Eps& b) {
    Eps r(a.size(), Q(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Eps eps_inv(const Eps& a) {
    if (a[0] == 0) fail(Errc::ResonantExponents, "indicial polynomial vanishes at a shifted exponent");
    Eps r(a.size(), Q(0));
    r[0] = Q(1) / a[0];
    for (size_t n = 1; n < a.size(); ++n) {
        Q s = 0;
        for (size_t k = 1; k <= n; ++k) s += a[k] * r[n - k];
        r[n] = -s * r[0];
    }
    return r;
}

Eps eval_eps(const Polynomial& p, const Q& x0, size_t mu) {
    Polynomial s = p.shifted(x0);
    Eps r(mu, Q(0));
    for (size_t k = 0; k < mu; ++k) r[k] = s[static_cast<int>(k)];
    return r;
}

// Solutions z^rho * y_j, j < mu, for an exponent rho of multiplicity mu.
std::vector<LogSeries> block(const ThetaOperator& op, const Q& rho, size_t mu, int N) {
    auto pieces = op.pieces();
    const Polynomial& P0 = pieces.at(0);
    std::vector<Eps> a(N, Eps(mu, Q(0)));
    a[0][0] = 1;
    for (int n = 1; n < N; ++n) {
        Eps s(mu, Q(0));
        for (const auto& [i, Pi] : pieces) {
            if (i == 0 || i > n) continue;
            Eps t = eps_mul(eval_eps(Pi, Q(n - i) + rho, mu), a[n - i]);
            for (size_t k = 0; k < mu; ++k) s[k] += t[k];
        }
        Eps inv = eps_inv(eval_eps(P0, Q(n) + rho, mu));
        Eps an = eps_mul(s, inv);
        for (size_t k = 0; k < mu; ++k) a[n][k] = -an[k];
    }
    std::vector<Series> f;
    for (size_t k = 0; k < mu; ++k) {
        std::vector<Q> c(N);
        for (int n = 0; n < N; ++n) c[n] = a[n][k];
        f.push_back(Series::from_rational(c, 0, N));
    }
    std::vector<LogSeries> out;
    for (size_t j = 0; j < mu; ++j) {
        std::vector<Series> comp;
        for (size_t k = 0; k <= j; ++k)
            comp.push_back(f[j - k] * Constant::monomial(Q(1) / Q(factorial(static_cast<long>(k))), static_cast<int>(k) - static_cast<int>(j)));
        out.emplace_back(comp);
    }
    return out;
}

}  // namespace

int SolutionBasis::order() const {
    int n = 1 << 30;
    for (const auto& s : solutions) n = std::min(n, s.order());
    return n;
}

bool SolutionBasis::is_mum() const {
    return std::all_of(exponents.begin(), exponents.end(), [](const Q& e) { return e == 0; });
}

SolutionBasis frobenius_basis(const ThetaOperator& op, int N) {
    if (!pf::is_mum(op)) fail(Errc::NotMUM, "operator exponents at 0 are not all zero");
    SolutionBasis b;
    b.op = op;
    b.solutions = block(op, 0, op.order(), N);
    b.exponents.assign(op.order(), Q(0));
    b.label = "frobenius";
    return b;
}

SolutionBasis frobenius_basis_general(const ThetaOperator& op, int N) {
    IndicialData d = local_exponents(op);
    if (d.irrational || static_cast<int>(d.exponents.size()) != op.order())
        fail(Errc::ResonantExponents, "exponents at 0 are not all rational");
    std::map<Q, size_t> mult;
    for (const auto& e : d.exponents) ++mult[e];
    for (auto i = mult.begin(); i != mult.end(); ++i)
        for (auto j = std::next(i); j != mult.end(); ++j) {
            Q diff = j->first - i->first;
            if (diff.get_den() == 1)
                fail(Errc::ResonantExponents, "exponents " + to_string(i->first) + " and " + to_string(j->first) + " differ by an integer");
        }
    SolutionBasis b;
    b.op = op;
    for (const auto& [rho, mu] : mult) {
        auto s = block(op, rho, mu, N);
        for (auto& x : s) {
            b.solutions.push_back(std::move(x));
            b.exponents.push_back(rho);
        }
    }
    b.label = "frobenius";
    return b;
}

Constant determinant(const ConstMatrix& M) {
    size_t n = M.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Constant det;
    do {
        int inv = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Constant t(inv % 2 ? -1 : 1);
        bool zero = false;
        for (size_t i = 0; i < n && !zero; ++i) {
            if (M[i][perm[i]].is_zero()) zero = true;
            else t *= M[i][perm[i]];
        }
        if (!zero) det += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

SolutionBasis change_basis(const SolutionBasis& basis, const ConstMatrix& M, const std::string& label) {
    size_t n = basis.solutions.size();
    if (M.size() != n) fail(Errc::SingularMatrix, "matrix size does not match the basis");
    for (const auto& r : M)
        if (r.size() != n) fail(Errc::SingularMatrix, "matrix is not square");
    Constant det = determinant(M);
    Constant unit;
    for (const auto& [m, c] : det.terms())
        if (m.xi == 0) unit += Constant::monomial(c, m.p);
    if (!unit.is_invertible()) fail(Errc::SingularMatrix, "determinant " + det.str() + " is not a unit");
    SolutionBasis out;
    out.op = basis.op;
    out.label = label.empty() ? basis.label : label;
    for (size_t i = 0; i < n; ++i) {
        LogSeries acc;
        bool first = true;
        std::optional<Q> rho;
        for (size_t j = 0; j < n; ++j) {
            if (M[i][j].is_zero()) continue;
            if (rho && *rho != basis.exponents[j])
                fail(Errc::SingularMatrix, "row mixes solutions with different exponents");
            rho = basis.exponents[j];
            LogSeries t = basis.solutions[j] * M[i][j];
            if (first) acc = t, first = false;
            else acc += t;
        }
        out.solutions.push_back(acc);
        out.exponents.push_back(*rho);
    }
    return out;
}

Constant parse_constant(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail(Errc::BadInput, "empty constant");
    Constant out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = pos + 1;
        while (end < s.size() && s[end] != '+' && !(s[end] == '-' && s[end - 1] != '^')) ++end;
        std::string term = s.substr(pos, end - pos);
        pos = end;
        Q c = 1;
        int p = 0, xi = 0;
        size_t i = 0;
        std::string sign;
        if (term[0] == '+' || term[0] == '-') {
            if (term[0] == '-') c = -1;
            i = 1;
        }
        while (i < term.size()) {
            size_t j = term.find('*', i);
            std::string f = term.substr(i, j == std::string::npos ? std::string::npos : j - i);
            i = j == std::string::npos ? term.size() : j + 1;
            if (f == "Xi" || f == "xi") {
                ++xi;
            } else if (f == "x") {
                c *= 10;
                ++xi;
            } else if (f.rfind("P", 0) == 0) {
                p += f.size() == 1 ? 1 : std::stoi(f.substr(2));
                if (f.size() > 1 && f[1] != '^') fail(Errc::BadInput, "bad factor '" + f + "'");
            } else {
                c *= parse_rational(f);
            }
        }
        out += Constant::monomial(c, p, xi);
    }
    return out;
}

ConstMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows) {
    ConstMatrix M;
    for (const auto& r : rows) {
        std::vector<Constant> row;
        for (const auto& e : r) row.push_back(parse_constant(e));
        M.push_back(row);
    }
    return M;
}

}  // namespace pf
