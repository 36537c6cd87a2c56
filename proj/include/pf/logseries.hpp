#pragma once

#include "pf/series.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace pf {

constexpr int kMaxLogDegree = 8;

// sum_k S_k(z) * l^k with l = log(z)/(2*pi*i); all components share one truncation order.
class LogSeries {
public:
    LogSeries() : c_(1, Series(0)) {}
    explicit LogSeries(const Series& s) : c_(1, s) {}
    explicit LogSeries(std::vector<Series> comps);
    static LogSeries ell(int order);  // l itself
    static LogSeries constant(const Constant& c, int order) { return LogSeries(Series::constant(c, order)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int order() const { return c_[0].order(); }
    const Series& operator[](int k) const { return c_[k]; }
    Series component(int k) const;
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    bool is_ell_free() const { return c_.size() == 1; }
    int valuation() const;  // minimal z-valuation over components

    LogSeries truncated(int order) const;
    LogSeries shifted(int k) const;
    LogSeries operator-() const;
    LogSeries& operator+=(const LogSeries& o);
    LogSeries& operator-=(const LogSeries& o);
    friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
    friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
    friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
    friend LogSeries operator*(const LogSeries& a, const Series& b);
    friend LogSeries operator*(const LogSeries& a, const Constant& c);
    friend LogSeries operator*(const Constant& c, const LogSeries& a) { return a * c; }
    friend bool operator==(const LogSeries& a, const LogSeries& b) { return a.c_ == b.c_; }

    LogSeries theta() const;
    LogSeries derivative() const;  // d/dz
    LogSeries pow(int e) const;
    LogSeries ell_shift(const Constant& s) const;  // l -> l + s

    std::string str(int max_terms = 6) const;

private:
    std::vector<Series> c_;
    void normalize();
};

LogSeries operator/(const LogSeries& a, const LogSeries& b);  // b must be l-free
LogSeries reciprocal(const LogSeries& b);
inline std::ostream& operator<<(std::ostream& os, const LogSeries& x) { return os << x.str(); }


}  // namespace pf
