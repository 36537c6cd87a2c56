#pragma once

#include "pf/operator.hpp"

#include <string>
#include <vector>

namespace pf {

using ConstMatrix = std::vector<std::vector<Constant>>;

// Solution j is z^exponents[j] * solutions[j].
struct SolutionBasis {
    ThetaOperator op;
    std::vector<LogSeries> solutions;
    std::vector<Q> exponents;
    std::string label;

    int size() const { return static_cast<int>(solutions.size()); }
    int order() const;  // common truncation order
    bool is_mum() const;
};

// y_j = sum_k g_k P^-k l^(j-k)/(j-k)!, g_0(0) = 1, g_k(0) = 0 for k >= 1.
SolutionBasis frobenius_basis(const ThetaOperator& op, int N);

// Non-resonant operators with rational exponents at 0: one block per exponent,
// each normalized like the MUM case; sorted by exponent, then by l-degree.
SolutionBasis frobenius_basis_general(const ThetaOperator& op, int N);

Constant determinant(const ConstMatrix& M);
SolutionBasis change_basis(const SolutionBasis& basis, const ConstMatrix& M, const std::string& label = "");

ConstMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows);
Constant parse_constant(const std::string& s);  // "p/q", "p/q*P^k", "p/q*Xi", sums thereof

}  // namespace pf
