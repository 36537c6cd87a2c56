#include "pf/logseries.hpp"

#include "pf/error.hpp"

#include <algorithm>

namespace pf {

LogSeries::LogSeries(std::vector<Series> comps) : c_(std::move(comps)) {
    if (c_.empty()) c_.push_back(Series(0));
    normalize();
}

void LogSeries::normalize() {
    int ord = c_[0].order();
    for (const auto& s : c_) ord = std::min(ord, s.order());
    for (auto& s : c_)
        if (s.order() != ord) s = s.truncated(ord);
    while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
    if (static_cast<int>(c_.size()) - 1 > kMaxLogDegree)
        fail(Errc::LogDegree, "log degree " + std::to_string(c_.size() - 1) + " exceeds cap");
}

LogSeries LogSeries::ell(int order) {
    return LogSeries(std::vector<Series>{Series(order), Series::constant(Constant(1), order)});
}

Series LogSeries::component(int k) const {
    if (k < 0 || k > degree()) return Series(order());
    return c_[k];
}

int LogSeries::valuation() const {
    int v = order();
    for (const auto& s : c_) v = std::min(v, s.valuation());
    return v;
}

LogSeries LogSeries::truncated(int order) const {
    std::vector<Series> r;
    for (const auto& s : c_) r.push_back(s.truncated(order));
    return LogSeries(std::move(r));
}

LogSeries LogSeries::shifted(int k) const {
    std::vector<Series> r;
    for (const auto& s : c_) r.push_back(s.shifted(k));
    return LogSeries(std::move(r));
}

LogSeries LogSeries::operator-() const {
    std::vector<Series> r;
    for (const auto& s : c_) r.push_back(-s);
    return LogSeries(std::move(r));
}

LogSeries& LogSeries::operator+=(const LogSeries& o) {
    size_t n = std::max(c_.size(), o.c_.size());
    int oa = order(), ob = o.order();
    std::vector<Series> r(n);
    for (size_t k = 0; k < n; ++k) {
        Series a = k < c_.size() ? c_[k] : Series(oa);
        Series b = k < o.c_.size() ? o.c_[k] : Series(ob);
        r[k] = a + b;
    }
    c_ = std::move(r);
    normalize();
    return *this;
}

LogSeries& LogSeries::operator-=(const LogSeries& o) { return *this += -o; }

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
    int da = a.degree(), db = b.degree();
    if (da + db > kMaxLogDegree) fail(Errc::LogDegree, "product log degree " + std::to_string(da + db));
    std::vector<Series> r;
    for (int k = 0; k <= da + db; ++k) {
        Series acc;
        bool first = true;
        for (int i = std::max(0, k - db); i <= std::min(k, da); ++i) {
            Series t = a.c_[i] * b.c_[k - i];
            if (first) {
                acc = t;
                first = false;
            } else {
                acc += t;
            }
        }
        r.push_back(acc);
    }
    return LogSeries(std::move(r));
}

LogSeries operator*(const LogSeries& a, const Series& b) { return a * LogSeries(b); }

LogSeries operator*(const LogSeries& a, const Constant& c) {
    std::vector<Series> r;
    for (const auto& s : a.c_) r.push_back(s * c);
    return LogSeries(std::move(r));
}

LogSeries LogSeries::theta() const {
    // theta(S l^k) = theta(S) l^k + k P^-1 S l^(k-1)
    std::vector<Series> r;
    Constant pinv = Constant::P(-1);
    for (int k = 0; k <= degree(); ++k) {
        Series t = c_[k].theta();
        if (k < degree()) t += c_[k + 1] * (pinv * Constant(k + 1));
        r.push_back(t);
    }
    return LogSeries(std::move(r));
}

LogSeries LogSeries::derivative() const { return theta().shifted(-1); }

LogSeries LogSeries::pow(int e) const {
    if (e < 0) fail(Errc::BadInput, "negative power of a log series");
    LogSeries r = LogSeries::constant(Constant(1), order());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

LogSeries LogSeries::ell_shift(const Constant& s) const {
    // (l+s)^k = sum_j C(k,j) s^(k-j) l^j
    int d = degree();
    std::vector<Series> r(d + 1, Series(order()));
    for (int k = 0; k <= d; ++k) {
        Constant sp(1);
        for (int j = k; j >= 0; --j) {
            r[j] += c_[k] * (sp * Constant(binomial(k, j)));
            sp = sp * s;
        }
    }
    return LogSeries(std::move(r));
}

std::string LogSeries::str(int max_terms) const {
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
        if (c_[k].is_zero() && degree() > 0) continue;
        if (!s.empty()) s += "\n  + ";
        s += "[" + c_[k].str(max_terms) + "]";
        if (k > 0) s += "*l^" + std::to_string(k);
    }
    return s;
}

LogSeries reciprocal(const LogSeries& b) {
    if (!b.is_ell_free()) fail(Errc::LogDivision, "divisor carries powers of log z");
    return LogSeries(series_reciprocal(b[0]));
}

LogSeries operator/(const LogSeries& a, const LogSeries& b) { return a * reciprocal(b); }

}  // namespace pf
