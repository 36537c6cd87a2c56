#pragma once

#include "pf/ratfunc.hpp"
#include "pf/series.hpp"

namespace pf {

constexpr int kDefaultGuard = 5;

// Smallest-degree P/Q (Q(0) != 0) whose expansion matches every known coefficient of s.
RationalFunction rational_reconstruct(const Series& s, int max_num_deg, int max_den_deg, int guard = kDefaultGuard);

// Solve A x = b over Q; returns false when A is singular.
bool solve_rational(std::vector<std::vector<Q>> A, std::vector<Q> b, std::vector<Q>& x);

// Basis of the right kernel of A over Q.
std::vector<std::vector<Q>> kernel_rational(std::vector<std::vector<Q>> A, int ncols);

}  // namespace pf
