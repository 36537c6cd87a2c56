#pragma once

#include "pf/constant.hpp"

#include <vector>

namespace pf::kernels {

// out[k] = sum_{i+j=k} a[i]*b[j] for 0 <= k < len
std::vector<Constant> convolve_serial(const std::vector<Constant>& a, const std::vector<Constant>& b, int len);
std::vector<Constant> convolve_parallel(const std::vector<Constant>& a, const std::vector<Constant>& b, int len);

// Picks the OpenMP kernel above a length threshold.
std::vector<Constant> convolve(const std::vector<Constant>& a, const std::vector<Constant>& b, int len);

void set_parallel_threshold(int len);
int parallel_threshold();

}  // namespace pf::kernels
