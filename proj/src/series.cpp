#include "pf/series.hpp"

#include "pf/error.hpp"
#include "pf/kernels.hpp"

#include <algorithm>

namespace pf {

Series::Series(int val, int order, std::vector<Constant> coeffs) : val_(val), ord_(order), c_(std::move(coeffs)) {
    int len = std::max(0, ord_ - val_);
    c_.resize(len);
    normalize();
}

void Series::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        val_ = ord_;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        val_ += static_cast<int>(lead);
    }
    if (val_ < -kMaxPoleOrder) fail(Errc::PoleOrder, "pole of order " + std::to_string(-val_) + " at z=0");
}

Series Series::constant(const Constant& c, int order) { return Series(0, order, {c}); }

Series Series::monomial(const Constant& c, int k, int order) {
    if (k >= order) return Series(order);
    return Series(k, order, {c});
}

Series Series::from_rational(const std::vector<Q>& coeffs, int val, int order) {
    std::vector<Constant> c;
    c.reserve(coeffs.size());
    for (const auto& q : coeffs) c.emplace_back(q);
    return Series(val, order, std::move(c));
}

Constant Series::coeff(int k) const {
    if (k >= ord_) fail(Errc::BadInput, "coefficient z^" + std::to_string(k) + " beyond truncation order " + std::to_string(ord_));
    if (k < val_) return Constant();
    return c_[k - val_];
}

const Constant& Series::leading() const {
    if (c_.empty()) fail(Errc::ZeroLeadingCoefficient, "series vanishes to its truncation order");
    return c_.front();
}

bool Series::is_rational() const {
    return std::all_of(c_.begin(), c_.end(), [](const Constant& c) { return c.is_rational(); });
}

std::vector<Q> Series::rational_coeffs(int from) const {
    std::vector<Q> r;
    for (int k = from; k < ord_; ++k) r.push_back(coeff(k).rational());
    return r;
}

Series Series::truncated(int order) const {
    if (order >= ord_) return *this;
    if (order <= val_) return Series(order);
    return Series(val_, order, std::vector<Constant>(c_.begin(), c_.begin() + (order - val_)));
}

Series Series::shifted(int k) const {
    Series r = *this;
    r.val_ += k;
    r.ord_ += k;
    if (!r.c_.empty() && r.val_ < -kMaxPoleOrder) fail(Errc::PoleOrder, "pole of order " + std::to_string(-r.val_));
    return r;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Series& Series::operator+=(const Series& o) {
    int ord = std::min(ord_, o.ord_);
    int val = std::min(val_, o.val_);
    if (val >= ord) return *this = Series(ord);
    std::vector<Constant> c(ord - val);
    for (int k = std::max(val_, val); k < std::min(ord, ord_); ++k) c[k - val] = c_[k - val_];
    for (int k = std::max(o.val_, val); k < std::min(ord, o.ord_); ++k) c[k - val] += o.c_[k - o.val_];
    *this = Series(val, ord, std::move(c));
    return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series operator*(const Series& a, const Series& b) {
    int ord = std::min(a.ord_ + b.val_, b.ord_ + a.val_);
    if (a.is_zero() || b.is_zero()) return Series(ord);
    int val = a.val_ + b.val_;
    if (val >= ord) return Series(ord);
    return Series(val, ord, kernels::convolve(a.c_, b.c_, ord - val));
}

Series operator*(const Series& a, const Constant& c) {
    if (c.is_zero()) return Series(a.ord_);
    Series r = a;
    for (auto& x : r.c_) x = x * c;
    r.normalize();
    return r;
}

Series Series::theta() const {
    std::vector<Constant> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        long k = val_ + static_cast<long>(i);
        if (k != 0) c[i] = c_[i] * Constant(k);
    }
    return Series(val_, ord_, std::move(c));
}

Series Series::derivative() const {
    if (c_.empty()) return Series(ord_ - 1);
    return theta().shifted(-1);
}

std::string Series::str(int max_terms) const {
    std::string s;
    int shown = 0;
    for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
        if (c_[i].is_zero()) continue;
        int k = val_ + static_cast<int>(i);
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].str() + ")";
        if (k != 0) s += "*z^" + std::to_string(k);
        ++shown;
    }
    if (s.empty()) s = "0";
    return s + " + O(z^" + std::to_string(ord_) + ")";
}

Series series_reciprocal(const Series& s) {
    if (s.is_zero()) fail(Errc::ZeroLeadingCoefficient, "reciprocal of a series that vanishes to order " + std::to_string(s.order()));
    const auto& c = s.coeffs();
    int v = s.valuation();
    int len = s.order() - v;
    Constant b0 = c[0].inverse();
    std::vector<Constant> b(len);
    b[0] = b0;
    bool rat = s.is_rational();
    for (int n = 1; n < len; ++n) {
        Constant acc;
        for (int i = 1; i <= n; ++i) {
            if (c[i].is_zero() || b[n - i].is_zero()) continue;
            acc.add_scaled(c[i], b[n - i]);
        }
        b[n] = rat ? Constant(-(acc.rational() * b0.rational())) : -(acc * b0);
    }
    return Series(-v, -v + len, std::move(b));
}

Series series_sqrt(const Series& s, int sign) {
    if (s.is_zero()) fail(Errc::ZeroLeadingCoefficient, "sqrt of a vanishing series");
    int v = s.valuation();
    if (v % 2 != 0) fail(Errc::OddValuation, "valuation " + std::to_string(v));
    const auto& c = s.coeffs();
    int len = s.order() - v;
    Constant y0 = c[0].sqrt(sign);
    Constant inv2y0 = (y0 * Constant(2)).inverse();
    std::vector<Constant> y(len);
    y[0] = y0;
    for (int n = 1; n < len; ++n) {
        Constant acc = c[n];
        for (int i = 1; i < n; ++i) acc -= y[i] * y[n - i];
        y[n] = acc * inv2y0;
    }
    return Series(v / 2, v / 2 + len, std::move(y));
}

Series series_exp(const Series& s) {
    if (!s.is_zero() && s.valuation() < 1) fail(Errc::BadInput, "exp needs a series without constant term");
    int N = s.order();
    if (N <= 0) return Series(N);
    std::vector<Constant> e(N);
    e[0] = Constant(1);
    for (int n = 1; n < N; ++n) {
        Constant acc;
        for (int k = 1; k <= n; ++k) {
            Constant sk = s.coeff(k);
            if (sk.is_zero() || e[n - k].is_zero()) continue;
            acc.add_scaled(sk * Constant(k), e[n - k]);
        }
        e[n] = acc * Constant(Q(1, n));
    }
    return Series(0, N, std::move(e));
}

Series integrate_dz_over_z(const Series& s) {
    if (!s.is_zero() && s.valuation() < 1) fail(Errc::BadInput, "integrand has a z^0 or pole term");
    std::vector<Constant> r(std::max(0, s.order()));
    for (int n = 1; n < s.order(); ++n) r[n] = s.coeff(n) * Constant(Q(1, n));
    return Series(0, s.order(), std::move(r));
}

Series to_series(const Polynomial& p, int order) {
    std::vector<Q> c;
    for (int k = 0; k < order && k <= p.degree(); ++k) c.push_back(p[k]);
    return Series::from_rational(c, 0, order);
}

Series to_series(const RationalFunction& f, int order) {
    const Polynomial& d = f.den();
    int vd = d.valuation();
    int n_inner = order + vd;
    std::vector<Q> r(std::max(0, n_inner), Q(0));
    Q d0inv = Q(1) / d[vd];
    for (int n = 0; n < n_inner; ++n) {
        Q acc = f.num()[n];
        for (int i = 1; i <= n && vd + i <= d.degree(); ++i) acc -= d[vd + i] * r[n - i];
        r[n] = acc * d0inv;
    }
    return Series::from_rational(r, -vd, order);
}

}  // namespace pf
