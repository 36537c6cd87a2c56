#pragma once

#include "pf/frobenius.hpp"
#include "pf/hp.hpp"
#include "pf/operator_json.hpp"

#include "json.hpp"

namespace pf {

using nlohmann::json;

json rational_to_json(const Q& q);  // "p/q"
Q rational_from_json(const json& j);

// {"P^a*Xi^b": "p/q", ...}
json constant_to_json(const Constant& c);
Constant constant_from_json(const json& j);

// {"valuation": v, "order": N, "coeffs": [c_v, ..., c_{N-1}]}
json series_to_json(const Series& s);
Series series_from_json(const json& j);

// {"l_degree": d, "components": [series of l^0, ..., l^d]}
json logseries_to_json(const LogSeries& s);
LogSeries logseries_from_json(const json& j);

json polynomial_to_json(const Polynomial& p);  // ascending coefficients
json ratfunc_to_json(const RationalFunction& f);

json basis_to_json(const SolutionBasis& b);
SolutionBasis basis_from_json(const json& j);

json const_matrix_to_json(const ConstMatrix& m);  // rows of constant strings
ConstMatrix const_matrix_from_json(const json& j);  // strings, numbers or constant maps

json complex_to_json(const Complex& z, int digits = 40);
json cmatrix_to_json(const CMatrix& m, int digits = 40);
json real_to_json(const Real& x, int digits = 6);

}  // namespace pf
