#include "pf/reconstruct.hpp"

#include "pf/error.hpp"

#include <algorithm>

namespace pf {

bool solve_rational(std::vector<std::vector<Q>> A, std::vector<Q> b, std::vector<Q>& x) {
    int n = static_cast<int>(A.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (A[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        Q inv = Q(1) / A[col][col];
        for (int r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Q f = A[r][col] * inv;
            for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    x.resize(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return true;
}

std::vector<std::vector<Q>> kernel_rational(std::vector<std::vector<Q>> A, int ncols) {
    std::vector<int> pivcol;
    int row = 0;
    int nrows = static_cast<int>(A.size());
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int piv = -1;
        for (int r = row; r < nrows; ++r)
            if (A[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[piv], A[row]);
        Q inv = Q(1) / A[row][col];
        for (int c = col; c < ncols; ++c) A[row][c] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row || A[r][col] == 0) continue;
            Q f = A[r][col];
            for (int c = col; c < ncols; ++c) A[r][c] -= f * A[row][c];
        }
        pivcol.push_back(col);
        ++row;
    }
    std::vector<std::vector<Q>> ker;
    std::vector<bool> is_piv(ncols, false);
    for (int c : pivcol) is_piv[c] = true;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Q> v(ncols, Q(0));
        v[f] = 1;
        for (size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -A[i][f];
        ker.push_back(v);
    }
    return ker;
}

RationalFunction rational_reconstruct(const Series& s, int max_num_deg, int max_den_deg, int guard) {
    if (!s.is_rational()) fail(Errc::MixedConstants, "series coefficients involve P or Xi");
    if (s.is_zero()) return RationalFunction();
    int v = std::min(0, s.valuation());
    // work with t = z^-v * s, a power series known to order N - v
    std::vector<Q> a = s.rational_coeffs(v);
    int M = static_cast<int>(a.size());
    if (M < max_num_deg + max_den_deg + 1 + guard)
        fail(Errc::NoMatch, "not enough coefficients for the requested degree bounds and guard");
    auto at = [&](int k) { return (k >= 0 && k < M) ? a[k] : Q(0); };
    for (int total = 0; total <= max_num_deg + max_den_deg; ++total) {
        for (int dd = 0; dd <= std::min(total, max_den_deg); ++dd) {
            int dn = total - dd;
            if (dn > max_num_deg) continue;
            if (dn + dd + 1 + guard > M) continue;
            std::vector<Q> q(dd + 1, Q(0));
            q[0] = 1;
            if (dd > 0) {
                std::vector<std::vector<Q>> A(dd, std::vector<Q>(dd));
                std::vector<Q> b(dd);
                for (int r = 0; r < dd; ++r) {
                    int k = dn + 1 + r;
                    for (int j = 1; j <= dd; ++j) A[r][j - 1] = at(k - j);
                    b[r] = -at(k);
                }
                std::vector<Q> x;
                if (!solve_rational(A, b, x)) continue;
                for (int j = 1; j <= dd; ++j) q[j] = x[j - 1];
            }
            std::vector<Q> p(dn + 1, Q(0));
            for (int k = 0; k <= dn; ++k)
                for (int j = 0; j <= std::min(k, dd); ++j) p[k] += q[j] * at(k - j);
            // verify every known coefficient of q*t - p
            bool ok = true;
            for (int k = 0; k < M && ok; ++k) {
                Q acc = 0;
                for (int j = 0; j <= std::min(k, dd); ++j) acc += q[j] * a[k - j];
                if (k <= dn) acc -= p[k];
                if (acc != 0) ok = false;
            }
            if (!ok) continue;
            Polynomial num(p), den(q);
            if (v < 0) den = den * Polynomial::monomial(1, -v);
            return RationalFunction(num, den);
        }
    }
    fail(Errc::NoMatch, "no rational function within degree bounds (" + std::to_string(max_num_deg) + "," +
                            std::to_string(max_den_deg) + ") matches all coefficients");
}

}  // namespace pf
