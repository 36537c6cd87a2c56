#include "pf/error.hpp"
#include "pf/operator.hpp"

#include <map>

namespace pf {

namespace {

using Vec = std::vector<RationalFunction>;

// Span of u^(i) (x) v^(j), i, j < m, modulo the (anti)symmetry, with theta acting
// through the Leibniz rule and theta^m u = sum_k a_k theta^k u.
class PairModule {
public:
    PairModule(const ThetaOperator& op, bool symmetric) : m_(op.order()), sym_(symmetric) {
        for (int i = 0; i < m_; ++i)
            for (int j = i + (sym_ ? 0 : 1); j < m_; ++j) {
                index_[{i, j}] = static_cast<int>(basis_.size());
                basis_.push_back({i, j});
            }
        RationalFunction lead(op.coeff(m_));
        for (int k = 0; k < m_; ++k) a_.push_back(-RationalFunction(op.coeff(k)) / lead);
    }

    int dim() const { return static_cast<int>(basis_.size()); }
    Vec unit(int i, int j) const {
        Vec v(dim());
        add_pair(v, i, j, RationalFunction(1));
        return v;
    }

    Vec theta(const Vec& v) const {
        Vec r(dim());
        for (int b = 0; b < dim(); ++b) {
            if (v[b].is_zero()) continue;
            r[b] += v[b].theta();
            auto [i, j] = basis_[b];
            add_pair(r, i + 1, j, v[b]);
            add_pair(r, i, j + 1, v[b]);
        }
        return r;
    }

private:
    int m_;
    bool sym_;
    std::vector<std::pair<int, int>> basis_;
    std::map<std::pair<int, int>, int> index_;
    Vec a_;

    void add_pair(Vec& v, int i, int j, const RationalFunction& c) const {
        if (i == m_) {
            for (int k = 0; k < m_; ++k)
                if (!a_[k].is_zero()) add_pair(v, k, j, c * a_[k]);
            return;
        }
        if (j == m_) {
            for (int k = 0; k < m_; ++k)
                if (!a_[k].is_zero()) add_pair(v, i, k, c * a_[k]);
            return;
        }
        if (i == j && !sym_) return;
        RationalFunction s = c;
        if (i > j) {
            std::swap(i, j);
            if (!sym_) s = -s;
        }
        v[index_.at({i, j})] += s;
    }
};

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Smallest monic relation theta^n w + sum_{k<n} c_k theta^k w = 0 for w = v0.
std::vector<RationalFunction> minimal_relation(const PairModule& M, Vec v) {
    std::vector<Vec> rows, combs;
    std::vector<int> pivots;
    for (int n = 0; n <= M.dim(); ++n) {
        Vec r = v, comb(n + 1);
        comb[n] = RationalFunction(1);
        for (size_t t = 0; t < rows.size(); ++t) {
            RationalFunction f = r[pivots[t]];
            if (f.is_zero()) continue;
            for (int b = 0; b < M.dim(); ++b)
                if (!rows[t][b].is_zero()) r[b] -= f * rows[t][b];
            for (size_t j = 0; j < combs[t].size(); ++j)
                if (!combs[t][j].is_zero()) comb[j] -= f * combs[t][j];
        }
        if (is_zero_vec(r)) return comb;
        int p = 0;
        while (r[p].is_zero()) ++p;
        RationalFunction inv = RationalFunction(1) / r[p];
        for (auto& x : r) x *= inv;
        for (auto& x : comb) x *= inv;
        rows.push_back(std::move(r));
        combs.push_back(std::move(comb));
        pivots.push_back(p);
        v = M.theta(v);
    }
    fail(Errc::DegenerateCase, "no relation found within the module dimension");
}

}  // namespace

ThetaOperator exterior_square(const ThetaOperator& op) {
    if (op.order() < 2) fail(Errc::BadInput, "exterior square needs order >= 2");
    PairModule M(op, false);
    std::vector<RationalFunction> rel = minimal_relation(M, M.unit(0, 1));
    int n = static_cast<int>(rel.size()) - 1;
    if (op.order() == 4 && n < 5)
        fail(Errc::DegenerateCase, "exterior square has order " + std::to_string(n) + " < 5");
    // rel annihilates u theta v - v theta u = z W(u, v)
    return gauge_transform(ThetaOperator(rel), Q(-1));
}

ThetaOperator symmetric_square(const ThetaOperator& op) {
    if (op.order() < 1) fail(Errc::BadInput, "symmetric square needs order >= 1");
    PairModule M(op, true);
    return ThetaOperator(minimal_relation(M, M.unit(0, 0)));
}

}  // namespace pf
