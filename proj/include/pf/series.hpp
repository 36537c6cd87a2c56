#pragma once

#include "pf/constant.hpp"
#include "pf/ratfunc.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace pf {

constexpr int kMaxPoleOrder = 4;
constexpr int kDefaultOrder = 40;

// Truncated Laurent series  sum_{k=val}^{order-1} c_k z^k + O(z^order).
class Series {
public:
    Series() = default;
    explicit Series(int order) : val_(order), ord_(order) {}
    Series(int val, int order, std::vector<Constant> coeffs);
    static Series constant(const Constant& c, int order);
    static Series monomial(const Constant& c, int k, int order);
    static Series from_rational(const std::vector<Q>& coeffs, int val, int order);

    int valuation() const { return val_; }
    int order() const { return ord_; }
    bool is_zero() const { return c_.empty(); }
    Constant coeff(int k) const;
    const Constant& leading() const;
    const std::vector<Constant>& coeffs() const { return c_; }
    bool is_rational() const;
    std::vector<Q> rational_coeffs(int from) const;  // z^from .. z^(order-1)

    Series truncated(int order) const;
    Series shifted(int k) const;  // z^k * s
    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Constant& c);
    friend Series operator*(const Constant& c, const Series& a) { return a * c; }
    friend bool operator==(const Series& a, const Series& b) {
        return a.ord_ == b.ord_ && a.val_ == b.val_ && a.c_ == b.c_;
    }

    Series theta() const;
    Series derivative() const;

    std::string str(int max_terms = 8) const;

private:
    int val_ = 0;
    int ord_ = 0;
    std::vector<Constant> c_;
    void normalize();
};

Series series_reciprocal(const Series& s);
Series series_sqrt(const Series& s, int sign = 1);
Series series_exp(const Series& s);              // requires valuation >= 1
Series integrate_dz_over_z(const Series& s);     // sum s_n z^n / n, requires s_0 = 0 and valuation >= 0
Series to_series(const RationalFunction& f, int order);
Series to_series(const Polynomial& p, int order);
inline std::ostream& operator<<(std::ostream& os, const Series& x) { return os << x.str(); }


}  // namespace pf
