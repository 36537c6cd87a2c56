#include "pf/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <exception>

namespace pf::kernels {

namespace {
std::atomic<int> g_threshold{48};

void conv_one(const std::vector<Constant>& a, const std::vector<Constant>& b, int k, Constant& out) {
    int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size());
    int lo = std::max(0, k - (lb - 1)), hi = std::min(k, la - 1);
    for (int i = lo; i <= hi; ++i) {
        if (a[i].is_zero() || b[k - i].is_zero()) continue;
        out.add_scaled(a[i], b[k - i]);
    }
}
}  // namespace

std::vector<Constant> convolve_serial(const std::vector<Constant>& a, const std::vector<Constant>& b, int len) {
    std::vector<Constant> out(std::max(len, 0));
    for (int k = 0; k < len; ++k) conv_one(a, b, k, out[k]);
    return out;
}

std::vector<Constant> convolve_parallel(const std::vector<Constant>& a, const std::vector<Constant>& b, int len) {
    std::vector<Constant> out(std::max(len, 0));
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 4)
    for (int k = 0; k < len; ++k) {
        try {
            conv_one(a, b, k, out[k]);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

std::vector<Constant> convolve(const std::vector<Constant>& a, const std::vector<Constant>& b, int len) {
    if (len >= g_threshold.load()) return convolve_parallel(a, b, len);
    return convolve_serial(a, b, len);
}

void set_parallel_threshold(int len) { g_threshold.store(len); }
int parallel_threshold() { return g_threshold.load(); }

}  // namespace pf::kernels
