#include "pf/constant.hpp"

#include "pf/error.hpp"

#include <algorithm>
#include <atomic>

namespace pf {

namespace {
std::atomic<int> g_pbound{8};

void check_mono(const Constant::Mono& m) {
    if (m.xi > 1) fail(Errc::XiSquared, "Xi^2 term produced");
    int b = g_pbound.load();
    if (m.p > b || m.p < -b) fail(Errc::PExponentRange, "P^" + std::to_string(m.p));
}
}  // namespace

int p_exponent_bound() { return g_pbound.load(); }
void set_p_exponent_bound(int b) { g_pbound.store(b); }

Constant::Constant(long v) {
    if (v != 0) t_.push_back({Mono{}, Q(v)});
}

Constant::Constant(const Q& q) {
    if (q != 0) t_.push_back({Mono{}, q});
}

Constant Constant::monomial(const Q& c, int p, int xi) {
    Constant r;
    Mono m{p, xi};
    check_mono(m);
    if (c != 0) r.t_.push_back({m, c});
    return r;
}

bool Constant::is_rational() const {
    return t_.empty() || (t_.size() == 1 && t_[0].first == Mono{});
}

Q Constant::rational() const {
    if (!is_rational()) fail(Errc::MixedConstants, str());
    return t_.empty() ? Q(0) : t_[0].second;
}

Q Constant::coeff(int p, int xi) const {
    for (const auto& [m, c] : t_)
        if (m.p == p && m.xi == xi) return c;
    return 0;
}

void Constant::add_term(const Mono& m, const Q& c) {
    if (c == 0) return;
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& t, const Mono& k) { return t.first < k; });
    if (it != t_.end() && it->first == m) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    } else {
        check_mono(m);
        t_.insert(it, {m, c});
    }
}

Constant Constant::operator-() const {
    Constant r = *this;
    for (auto& t : r.t_) t.second = -t.second;
    return r;
}

Constant& Constant::operator+=(const Constant& o) {
    if (t_.empty()) return *this = o;
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Constant& Constant::operator-=(const Constant& o) {
    for (const auto& [m, c] : o.t_) add_term(m, Q(-c));
    return *this;
}

void Constant::add_scaled(const Constant& a, const Constant& b) {
    if (a.t_.size() == 1 && b.t_.size() == 1 && t_.size() <= 1) {
        Mono m{a.t_[0].first.p + b.t_[0].first.p, a.t_[0].first.xi + b.t_[0].first.xi};
        if (t_.empty()) {
            check_mono(m);
            t_.push_back({m, a.t_[0].second * b.t_[0].second});
            return;
        }
        if (t_[0].first == m) {
            t_[0].second += a.t_[0].second * b.t_[0].second;
            if (t_[0].second == 0) t_.clear();
            return;
        }
    }
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) add_term(Mono{ma.p + mb.p, ma.xi + mb.xi}, Q(ca * cb));
}

Constant operator*(const Constant& a, const Constant& b) {
    Constant r;
    r.add_scaled(a, b);
    return r;
}

Constant& Constant::operator*=(const Constant& o) { return *this = *this * o; }

bool Constant::is_invertible() const { return t_.size() == 1 && t_[0].first.xi == 0; }

Constant Constant::inverse() const {
    if (!is_invertible()) fail(Errc::NonInvertible, "constant " + str() + " is not a unit");
    return monomial(Q(1) / t_[0].second, -t_[0].first.p, 0);
}

Constant Constant::sqrt(int sign) const {
    if (!is_invertible()) fail(Errc::NonSquareLeadingCoefficient, str());
    const Mono& m0 = t_[0].first;
    const Q& c0 = t_[0].second;
    if (m0.p % 2 != 0 || c0 < 0) fail(Errc::NonSquareLeadingCoefficient, str());
    Z n = c0.get_num(), d = c0.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        fail(Errc::NonSquareLeadingCoefficient, str());
    Z sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    Q s(sn, sd);
    s.canonicalize();
    if (sign < 0) s = -s;
    return monomial(s, m0.p / 2, 0);
}

std::string Constant::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t_) {
        if (!s.empty()) s += (c < 0) ? " - " : " + ";
        else if (c < 0) s += "-";
        Q a = abs(c);
        bool unit = (a == 1) && (m.p != 0 || m.xi != 0);
        if (!unit) s += a.get_str();
        std::string mono;
        if (m.p != 0) mono += "P^" + std::to_string(m.p);
        if (m.xi != 0) mono += std::string(mono.empty() ? "" : "*") + "Xi";
        if (!mono.empty()) s += (unit ? "" : "*") + mono;
    }
    return s;
}

}  // namespace pf
