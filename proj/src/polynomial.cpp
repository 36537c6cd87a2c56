#include "pf/polynomial.hpp"

#include "pf/error.hpp"

#include <algorithm>
#include <set>

namespace pf {

Polynomial::Polynomial(const Q& c) {
    if (c != 0) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Q> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Q& c, int k) {
    Polynomial p;
    if (c == 0) return p;
    p.c_.assign(k + 1, Q(0));
    p.c_[k] = c;
    return p;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Polynomial::valuation() const {
    for (int i = 0; i < static_cast<int>(c_.size()); ++i)
        if (c_[i] != 0) return i;
    return -1;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Q(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Q(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Q> r(a.c_.size() + b.c_.size() - 1, Q(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Q& s) {
    if (s == 0) return {};
    Polynomial r = a;
    for (auto& c : r.c_) c *= s;
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Q> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Q(static_cast<long>(i));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::theta() const {
    Polynomial r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] *= Q(static_cast<long>(i));
    r.trim();
    return r;
}

Polynomial Polynomial::shifted(const Q& s) const {
    // Horner in x + s
    Polynomial r;
    Polynomial lin(std::vector<Q>{s, Q(1)});
    for (int i = degree(); i >= 0; --i) r = r * lin + Polynomial(c_[i]);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    Polynomial r(1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Q Polynomial::eval(const Q& x) const {
    Q r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * (Q(1) / lead());
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) fail(Errc::BadInput, "polynomial division by zero");
    r = a;
    int db = b.degree();
    if (r.degree() < db) {
        q = Polynomial();
        return;
    }
    std::vector<Q> qc(r.degree() - db + 1, Q(0));
    Q inv = Q(1) / b.lead();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Q f = r.lead() * inv;
        qc[k] = f;
        for (int i = 0; i <= db; ++i) r.c_[i + k] -= f * b.c_[i];
        r.trim();
    }
    q = Polynomial(std::move(qc));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.monic();
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= degree(); ++i) {
        const Q& c = c_[i];
        if (c == 0) continue;
        Q a = abs(c);
        if (s.empty()) s += (c < 0) ? "-" : "";
        else s += (c < 0) ? " - " : " + ";
        if (i == 0 || a != 1) s += a.get_str();
        if (i > 0) {
            if (a != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::vector<Q> rational_roots(const Polynomial& p0, Polynomial* leftover) {
    std::vector<Q> roots;
    if (p0.is_zero()) {
        if (leftover) *leftover = p0;
        return roots;
    }
    Polynomial p = p0;
    // integer-primitive version
    auto scaled = [](const Polynomial& f) { return f * primitive_scale(f.coeffs()); };
    while (p.degree() > 0 && p[0] == 0) {
        roots.push_back(0);
        Polynomial q, r;
        Polynomial::divmod(p, Polynomial::z(), q, r);
        p = q;
    }
    bool found = true;
    while (found && p.degree() > 0) {
        found = false;
        Polynomial ip = scaled(p);
        Z a0 = abs(ip[0].get_num()), an = abs(ip.lead().get_num());
        auto divisors = [](Z n) {
            std::vector<Z> d;
            for (Z i = 1; i * i <= n; ++i)
                if (n % i == 0) {
                    d.push_back(i);
                    if (i * i != n) d.push_back(n / i);
                }
            return d;
        };
        auto dn = divisors(a0), dd = divisors(an);
        std::set<Q> cands;
        for (const auto& x : dn)
            for (const auto& y : dd) {
                Q c(x, y);
                c.canonicalize();
                cands.insert(c);
                cands.insert(-c);
            }
        for (const auto& c : cands) {
            if (ip.eval(c) == 0) {
                roots.push_back(c);
                Polynomial q, r;
                Polynomial::divmod(p, Polynomial(std::vector<Q>{-c, Q(1)}), q, r);
                p = q;
                found = true;
                break;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    if (leftover) *leftover = p;
    return roots;
}

}  // namespace pf
