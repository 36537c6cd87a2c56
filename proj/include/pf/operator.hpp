#pragma once

#include "pf/logseries.hpp"
#include "pf/ratfunc.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace pf {

// L = sum_k r_k(z) theta^k, stored normalized: polynomial coefficients,
// no common polynomial factor, coprime integer coefficients, and the lowest
// nonzero coefficient of r_m positive.
class ThetaOperator {
public:
    ThetaOperator() = default;
    explicit ThetaOperator(const std::vector<RationalFunction>& coeffs);
    // from sum_i z^i P_i(theta)
    static ThetaOperator from_pieces(const std::map<int, Polynomial>& pieces);

    int order() const { return static_cast<int>(r_.size()) - 1; }
    const Polynomial& coeff(int k) const { return r_[k]; }
    const std::vector<Polynomial>& coeffs() const { return r_; }
    int zdegree() const;
    Polynomial piece(int i) const;  // P_i(theta)
    std::map<int, Polynomial> pieces() const;

    std::string str() const;
    friend bool operator==(const ThetaOperator& a, const ThetaOperator& b) { return a.r_ == b.r_; }

private:
    std::vector<Polynomial> r_;
};

inline std::ostream& operator<<(std::ostream& os, const ThetaOperator& x) { return os << x.str(); }

ThetaOperator parse_operator(const std::string& text);

LogSeries apply(const ThetaOperator& op, const LogSeries& s);

struct IndicialData {
    std::vector<Q> exponents;  // rational roots with multiplicity, sorted
    bool irrational = false;    // indicial polynomial has a factor without rational roots
    Polynomial indicial;
};

IndicialData local_exponents(const ThetaOperator& op);
bool is_mum(const ThetaOperator& op);

// Operator annihilating z^k u for every solution u (theta -> theta - k).
ThetaOperator gauge_transform(const ThetaOperator& op, const Q& k);

// Coefficients q_j(z) of the equivalent form sum_j q_j(z) (d/dz)^j.
std::vector<Polynomial> d_form(const ThetaOperator& op);

ThetaOperator exterior_square(const ThetaOperator& op);
ThetaOperator symmetric_square(const ThetaOperator& op);

}  // namespace pf
