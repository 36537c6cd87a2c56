#include "pf/operator.hpp"

#include "pf/error.hpp"

#include <algorithm>
#include <cctype>

namespace pf {

namespace {

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    Polynomial g = Polynomial::gcd(a, b), q, r;
    Polynomial::divmod(a * b, g, q, r);
    return q.monic();
}

std::string theta_poly_str(const Polynomial& p) {
    std::string s = p.str("theta");
    return s;
}

}  // namespace

ThetaOperator::ThetaOperator(const std::vector<RationalFunction>& coeffs) {
    int m = static_cast<int>(coeffs.size()) - 1;
    while (m >= 0 && coeffs[m].is_zero()) --m;
    if (m < 0) fail(Errc::BadInput, "zero operator");
    Polynomial L(1);
    for (int k = 0; k <= m; ++k) L = lcm(L, coeffs[k].den());
    std::vector<Polynomial> p(m + 1);
    for (int k = 0; k <= m; ++k) {
        Polynomial q, r;
        Polynomial::divmod(L, coeffs[k].den(), q, r);
        p[k] = coeffs[k].num() * q;
    }
    Polynomial g;
    for (const auto& x : p) g = Polynomial::gcd(g, x);
    if (g.degree() > 0)
        for (auto& x : p) {
            Polynomial q, r;
            Polynomial::divmod(x, g, q, r);
            x = q;
        }
    std::vector<Q> all;
    for (const auto& x : p) all.insert(all.end(), x.coeffs().begin(), x.coeffs().end());
    Q s = primitive_scale(all);
    if (p[m][p[m].valuation()] * s < 0) s = -s;
    for (auto& x : p) x = x * s;
    r_ = std::move(p);
}

ThetaOperator ThetaOperator::from_pieces(const std::map<int, Polynomial>& pieces) {
    int m = 0, lo = 0;
    for (const auto& [i, P] : pieces) {
        m = std::max(m, P.degree());
        lo = std::min(lo, i);
    }
    std::vector<std::vector<Q>> c(m + 1);
    for (const auto& [i, P] : pieces)
        for (int k = 0; k <= P.degree(); ++k) {
            auto& v = c[k];
            if (static_cast<int>(v.size()) <= i - lo) v.resize(i - lo + 1, Q(0));
            v[i - lo] += P[k];
        }
    std::vector<RationalFunction> r;
    for (auto& v : c) r.emplace_back(Polynomial(v));
    return ThetaOperator(r);
}

int ThetaOperator::zdegree() const {
    int d = 0;
    for (const auto& p : r_) d = std::max(d, p.degree());
    return d;
}

Polynomial ThetaOperator::piece(int i) const {
    std::vector<Q> c(r_.size());
    for (size_t k = 0; k < r_.size(); ++k) c[k] = r_[k][i];
    return Polynomial(c);
}

std::map<int, Polynomial> ThetaOperator::pieces() const {
    std::map<int, Polynomial> m;
    for (int i = 0; i <= zdegree(); ++i) {
        Polynomial p = piece(i);
        if (!p.is_zero()) m[i] = p;
    }
    return m;
}

std::string ThetaOperator::str() const {
    std::string s;
    for (const auto& [i, P] : pieces()) {
        bool neg = std::all_of(P.coeffs().begin(), P.coeffs().end(), [](const Q& q) { return q <= 0; });
        Polynomial Q0 = neg ? -P : P;
        std::string zs = i == 0 ? "" : (i == 1 ? "z*" : "z^" + std::to_string(i) + "*");
        std::string body = theta_poly_str(Q0);
        bool single = Q0.valuation() == Q0.degree() && Q0.lead() == 1;
        std::string term = zs + (single && !zs.empty() ? body : (zs.empty() && single ? body : "(" + body + ")"));
        if (s.empty()) s = (neg ? "-" : "") + term;
        else s += (neg ? " - " : " + ") + term;
    }
    return s;
}

// ---- parser: values live in the ring Q[z]<theta> with theta z = z (theta + 1)

namespace {

using Elem = std::map<int, Polynomial>;  // z-power -> polynomial in theta on the right

void add_into(Elem& a, const Elem& b, const Q& sign) {
    for (const auto& [i, P] : b) {
        a[i] += P * sign;
        if (a[i].is_zero()) a.erase(i);
    }
}

Elem mul(const Elem& a, const Elem& b) {
    Elem r;
    for (const auto& [i, P] : a)
        for (const auto& [j, R] : b) {
            r[i + j] += P.shifted(Q(j)) * R;
            if (r[i + j].is_zero()) r.erase(i + j);
        }
    return r;
}

bool is_constant(const Elem& e, Q& c) {
    if (e.empty()) {
        c = 0;
        return true;
    }
    if (e.size() != 1 || e.begin()->first != 0 || e.begin()->second.degree() != 0) return false;
    c = e.begin()->second[0];
    return true;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Elem parse() {
        Elem e = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void error(const std::string& msg) {
        fail(Errc::SyntaxError, msg + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_primary() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
               static_cast<unsigned char>(c) == 0xCE;
    }

    Elem expr() {
        Elem e;
        bool first = true;
        for (;;) {
            skip();
            Q sign = 1;
            if (peek('+')) {
                ++pos_;
            } else if (peek('-')) {
                ++pos_;
                sign = -1;
            } else if (!first) {
                break;
            }
            Elem t = term();
            add_into(e, t, sign);
            first = false;
        }
        return e;
    }

    Elem term() {
        Elem e = power();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                e = mul(e, power());
            } else if (peek('/')) {
                ++pos_;
                size_t at = pos_;
                Elem d = power();
                Q c;
                if (!is_constant(d, c)) {
                    pos_ = at;
                    fail(Errc::NonPolynomialCoefficient, "division by a non-constant at position " + std::to_string(at));
                }
                if (c == 0) error("division by zero");
                Elem inv{{0, Polynomial(Q(1) / c)}};
                e = mul(e, inv);
            } else if (starts_primary()) {
                e = mul(e, power());
            } else {
                break;
            }
        }
        return e;
    }

    Elem power() {
        if (peek('-')) {
            ++pos_;
            Elem e = power();
            Elem r;
            add_into(r, e, Q(-1));
            return r;
        }
        Elem b = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (st == pos_) error("expected a nonnegative integer exponent");
            int e = std::stoi(s_.substr(st, pos_ - st));
            Elem r{{0, Polynomial(1)}};
            for (int i = 0; i < e; ++i) r = mul(r, b);
            return r;
        }
        return b;
    }

    Elem primary() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Elem e = expr();
            if (!peek(')')) error("expected ')'");
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Elem{{0, Polynomial(Q(Z(s_.substr(st, pos_ - st))))}};
        }
        if (s_.compare(pos_, 2, "\xCE\xB8") == 0) {
            pos_ += 2;
            return Elem{{0, Polynomial::z()}};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t st = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id = s_.substr(st, pos_ - st);
            if (id == "z") return Elem{{1, Polynomial(1)}};
            if (id == "theta" || id == "t" || id == "T") return Elem{{0, Polynomial::z()}};
            pos_ = st;
            error("unknown identifier '" + id + "'");
        }
        error("unexpected character '" + std::string(1, c) + "'");
    }
};

}  // namespace

ThetaOperator parse_operator(const std::string& text) {
    Elem e = Parser(text).parse();
    if (e.empty()) fail(Errc::SyntaxError, "expression is zero");
    int lo = e.begin()->first;
    if (lo < 0) fail(Errc::NonPolynomialCoefficient, "negative power of z");
    return ThetaOperator::from_pieces(e);
}

LogSeries apply(const ThetaOperator& op, const LogSeries& s) {
    LogSeries acc;
    bool first = true;
    LogSeries th = s;
    for (int k = 0; k <= op.order(); ++k) {
        if (k > 0) th = th.theta();
        const Polynomial& r = op.coeff(k);
        for (int i = 0; i <= r.degree(); ++i) {
            if (r[i] == 0) continue;
            LogSeries t = th.shifted(i) * Constant(r[i]);
            if (first) {
                acc = t;
                first = false;
            } else {
                acc += t;
            }
        }
    }
    return acc;
}

IndicialData local_exponents(const ThetaOperator& op) {
    IndicialData d;
    std::vector<Q> c;
    for (int k = 0; k <= op.order(); ++k) c.push_back(op.coeff(k)[0]);
    d.indicial = Polynomial(c);
    Polynomial rest;
    d.exponents = rational_roots(d.indicial, &rest);
    d.irrational = rest.degree() > 0;
    return d;
}

bool is_mum(const ThetaOperator& op) {
    IndicialData d = local_exponents(op);
    if (d.irrational || static_cast<int>(d.exponents.size()) != op.order()) return false;
    return std::all_of(d.exponents.begin(), d.exponents.end(), [](const Q& e) { return e == 0; });
}

ThetaOperator gauge_transform(const ThetaOperator& op, const Q& k) {
    std::map<int, Polynomial> p = op.pieces();
    for (auto& [i, P] : p) P = P.shifted(-k);
    return ThetaOperator::from_pieces(p);
}

std::vector<Polynomial> d_form(const ThetaOperator& op) {
    int m = op.order();
    // Stirling numbers of the second kind S(k, j)
    std::vector<std::vector<Q>> S(m + 1, std::vector<Q>(m + 1, Q(0)));
    S[0][0] = 1;
    for (int k = 1; k <= m; ++k)
        for (int j = 1; j <= k; ++j) S[k][j] = S[k - 1][j - 1] + Q(j) * S[k - 1][j];
    std::vector<Polynomial> q(m + 1);
    for (int j = 0; j <= m; ++j) {
        Polynomial acc;
        for (int k = j; k <= m; ++k) acc += op.coeff(k) * S[k][j];
        q[j] = acc * Polynomial::monomial(1, j);
    }
    return q;
}

}  // namespace pf
