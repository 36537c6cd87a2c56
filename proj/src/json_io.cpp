#include "pf/json_io.hpp"

#include "pf/error.hpp"

namespace pf {

namespace {

std::string mono_key(const Constant::Mono& m) { return "P^" + std::to_string(m.p) + "*Xi^" + std::to_string(m.xi); }

Constant::Mono parse_key(const std::string& k) {
    Constant::Mono m;
    if (std::sscanf(k.c_str(), "P^%d*Xi^%d", &m.p, &m.xi) != 2) fail(Errc::BadInput, "bad constant key '" + k + "'");
    return m;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        fail(Errc::BadInput, std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

json rational_to_json(const Q& q) { return to_string(q); }

Q rational_from_json(const json& j) {
    if (j.is_number_integer()) return Q(j.get<long>());
    return parse_rational(j.get<std::string>());
}

json constant_to_json(const Constant& c) {
    json o = json::object();
    for (const auto& [m, q] : c.terms()) o[mono_key(m)] = to_string(q);
    return o;
}

Constant constant_from_json(const json& j) {
    return guarded([&] {
        if (j.is_string()) return parse_constant(j.get<std::string>());
        if (j.is_number_integer()) return Constant(j.get<long>());
        Constant c;
        for (auto it = j.begin(); it != j.end(); ++it) {
            auto m = parse_key(it.key());
            c += Constant::monomial(rational_from_json(it.value()), m.p, m.xi);
        }
        return c;
    });
}

json series_to_json(const Series& s) {
    json c = json::array();
    for (int k = s.valuation(); k < s.order(); ++k) c.push_back(constant_to_json(s.coeff(k)));
    return {{"valuation", s.valuation()}, {"order", s.order()}, {"coeffs", c}};
}

Series series_from_json(const json& j) {
    return guarded([&] {
        std::vector<Constant> c;
        for (const auto& x : j.at("coeffs")) c.push_back(constant_from_json(x));
        return Series(j.at("valuation").get<int>(), j.at("order").get<int>(), c);
    });
}

json logseries_to_json(const LogSeries& s) {
    json comps = json::array();
    for (int k = 0; k <= s.degree(); ++k) comps.push_back(series_to_json(s[k]));
    return {{"l_degree", s.degree()}, {"components", comps}};
}

LogSeries logseries_from_json(const json& j) {
    return guarded([&] {
        std::vector<Series> comps;
        for (const auto& c : j.at("components")) comps.push_back(series_from_json(c));
        return LogSeries(comps);
    });
}

json polynomial_to_json(const Polynomial& p) {
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(to_string(p[i]));
    return a;
}

json ratfunc_to_json(const RationalFunction& f) {
    return {{"num", polynomial_to_json(f.num())}, {"den", polynomial_to_json(f.den())}, {"text", f.str()}};
}

json basis_to_json(const SolutionBasis& b) {
    json sols = json::array(), ex = json::array();
    for (const auto& s : b.solutions) sols.push_back(logseries_to_json(s));
    for (const auto& e : b.exponents) ex.push_back(to_string(e));
    return {{"operator", operator_to_json(b.op)}, {"label", b.label}, {"exponents", ex}, {"solutions", sols}};
}

SolutionBasis basis_from_json(const json& j) {
    return guarded([&] {
        SolutionBasis b;
        b.op = operator_from_json(j.at("operator"));
        b.label = j.value("label", std::string());
        for (const auto& s : j.at("solutions")) b.solutions.push_back(logseries_from_json(s));
        if (j.contains("exponents"))
            for (const auto& e : j.at("exponents")) b.exponents.push_back(rational_from_json(e));
        else
            b.exponents.assign(b.solutions.size(), Q(0));
        if (b.exponents.size() != b.solutions.size()) fail(Errc::BadInput, "exponents and solutions differ in length");
        return b;
    });
}

json const_matrix_to_json(const ConstMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& c : r) row.push_back(c.str());
        rows.push_back(row);
    }
    return rows;
}

ConstMatrix const_matrix_from_json(const json& j) {
    return guarded([&] {
        ConstMatrix m;
        for (const auto& r : j) {
            m.emplace_back();
            for (const auto& c : r) m.back().push_back(constant_from_json(c));
        }
        return m;
    });
}

json complex_to_json(const Complex& z, int digits) { return {{"re", z.re.str(digits)}, {"im", z.im.str(digits)}}; }

json cmatrix_to_json(const CMatrix& m, int digits) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& z : r) row.push_back(complex_to_json(z, digits));
        rows.push_back(row);
    }
    return rows;
}

json real_to_json(const Real& x, int digits) { return x.str(digits); }

}  // namespace pf
