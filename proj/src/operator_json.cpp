#include "pf/operator_json.hpp"

#include "pf/error.hpp"

namespace pf {

nlohmann::json operator_to_json(const ThetaOperator& op) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= op.order(); ++k) {
        nlohmann::json terms = nlohmann::json::array();
        const Polynomial& r = op.coeff(k);
        for (int i = 0; i <= r.degree(); ++i)
            if (r[i] != 0) terms.push_back({to_string(r[i]), i});
        coeffs.push_back(terms);
    }
    return {{"order", op.order()}, {"coeffs", coeffs}, {"text", op.str()}};
}

ThetaOperator operator_from_json(const nlohmann::json& j) {
    try {
        if (j.contains("coeffs")) {
            std::vector<RationalFunction> r;
            for (const auto& terms : j.at("coeffs")) {
                Polynomial p;
                for (const auto& t : terms) {
                    int e = t.at(1).get<int>();
                    if (e < 0) fail(Errc::NonPolynomialCoefficient, "negative z power in operator JSON");
                    p += Polynomial::monomial(parse_rational(t.at(0).get<std::string>()), e);
                }
                r.emplace_back(p);
            }
            ThetaOperator op(r);
            if (j.contains("order") && j.at("order").get<int>() != op.order())
                fail(Errc::BadInput, "operator JSON order does not match its coefficients");
            return op;
        }
        if (j.contains("text")) return parse_operator(j.at("text").get<std::string>());
        if (j.is_string()) return parse_operator(j.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::BadInput, std::string("malformed operator JSON: ") + e.what());
    }
    fail(Errc::BadInput, "operator JSON needs \"coeffs\" or \"text\"");
}

}  // namespace pf
