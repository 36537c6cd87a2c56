#include "pf/sp4.hpp"

#include "pf/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace pf {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail(Errc::BadInput, "integer overflow in sp4 reduction");
    return r;
}
long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Errc::BadInput, "integer overflow in sp4 reduction");
    return r;
}
long long iabs(long long x) { return x < 0 ? -x : x; }
long long norm_max(const Vec4& v) {
    long long m = 0;
    for (long long x : v) m = std::max(m, iabs(x));
    return m;
}
long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
Vec4 normalize_signs(const Vec4& v) { return {iabs(v[0]), -iabs(v[1]), iabs(v[2]), iabs(v[3])}; }
Vec4 class_key(const Vec4& v) {
    Vec4 r = reduce(v).r, e = epsilon(r);
    return std::min(r, e);
}

}  // namespace

std::string to_string(const Vec4& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + "," +
           std::to_string(v[3]) + ")";
}

bool is_primitive(const Vec4& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    return g == 1;
}

Vec4 epsilon(const Vec4& v) { return {v[3], -v[2], -v[1], v[0]}; }

bool is_reduced(const Vec4& v) {
    if (!is_primitive(v)) fail(Errc::NotPrimitive, to_string(v) + " is not primitive");
    const long long a = v[0], b = v[1], c = v[2], d = v[3];
    return a >= 0 && b <= 0 && c >= 0 && d >= 0 && -2 * b <= d - 2 * c && 2 * c <= a + 2 * b;
}

long long best_shift(long long x, long long k) {
    if (k == 0) return 0;
    long long q = floor_div(-x, k);
    long long best = 0;
    long long best_val = iabs(x);
    for (long long n : {q - 1, q, q + 1, q + 2}) {
        long long val = iabs(checked_add(x, checked_mul(n, k)));
        auto key = std::make_tuple(val, iabs(n), n);
        if (key < std::make_tuple(best_val, iabs(best), best)) {
            best = n;
            best_val = val;
        }
    }
    return best;
}

Vec4 reduction_pass(const Vec4& v) {
    const long long a0 = v[0], b0 = v[1], c0 = v[2], d0 = v[3];
    const long long b1 = -iabs(checked_add(b0, checked_mul(best_shift(b0, a0), a0)));
    const long long c1 = iabs(checked_add(c0, checked_mul(best_shift(c0, d0), d0)));
    const long long k3 = checked_add(d0, 2 * c1);
    const long long n0 = best_shift(b1, k3);
    const long long b2 = -iabs(checked_add(b1, checked_mul(n0, k3)));
    const long long a2 = iabs(checked_add(a0, checked_mul(n0, checked_add(4 * c1, -2 * d0))));
    const long long k4 = checked_add(-a2, 2 * b2);
    const long long n1 = best_shift(c1, k4);
    const long long c2 = iabs(checked_add(c1, checked_mul(n1, k4)));
    const long long d2 = iabs(checked_add(d0, -checked_mul(n1, checked_add(2 * a2, 4 * b2))));
    return {a2, b2, c2, d2};
}

Reduction reduce(const Vec4& v, int max_passes) {
    if (!is_primitive(v)) fail(Errc::NotPrimitive, to_string(v) + " is not primitive");
    Reduction out;
    Vec4 cur = normalize_signs(v);
    for (;;) {
        Vec4 next = reduction_pass(cur);
        ++out.passes;
        if (next == cur) break;
        if (out.passes >= max_passes) fail(Errc::NonTermination, "reduction of " + to_string(v) + " did not settle");
        cur = next;
    }
    out.r = cur;
    return out;
}

bool equivalent(const Vec4& x, const Vec4& y) {
    Vec4 rx = reduce(x).r, ry = reduce(y).r;
    return rx == ry || rx == epsilon(ry);
}

IMat4 gen_A() { return {{{1, 0, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}; }
IMat4 gen_B() { return {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}}; }
IMat4 gen_C() { return {{{1, 0, 4, -2}, {0, 1, 2, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}}}; }
IMat4 gamma0() { return {{{1, 0, 4, 2}, {-1, 1, -2, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}}; }
IMat4 gamma1() { return {{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}}; }

IMat4 operator*(const IMat4& a, const IMat4& b) {
    IMat4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
    return c;
}

Vec4 operator*(const IMat4& m, const Vec4& v) {
    Vec4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) r[i] = checked_add(r[i], checked_mul(m[i][k], v[k]));
    return r;
}

BoxCensus box_census(int bound, bool parallel) {
    const int side = 2 * bound + 1;
    std::vector<BoxCensus> per(side);
    auto slice = [&](int ia) {
        BoxCensus& s = per[ia];
        const long long a = ia - bound;
        for (long long b = -bound; b <= bound; ++b)
            for (long long c = -bound; c <= bound; ++c)
                for (long long d = -bound; d <= bound; ++d) {
                    Vec4 v{a, b, c, d};
                    if (!is_primitive(v)) continue;
                    ++s.total;
                    const bool red = is_reduced(v);
                    const Vec4 r = reduce(v).r;
                    const bool fixed = r == v;
                    s.reduced += red;
                    s.reduced_not_fixed += red && !fixed;
                    if (fixed && !red) {
                        ++s.fixed_not_reduced;
                        if (s.fixed_not_reduced_examples.size() < 8) s.fixed_not_reduced_examples.push_back(v);
                    }
                    s.image_not_reduced += !is_reduced(r);
                    s.epsilon_failures += reduce(epsilon(v)).r != epsilon(r);
                    s.sign_failures += reduce(Vec4{-a, b, -c, d}).r != r || reduce(Vec4{a, -b, c, -d}).r != r;
                    Vec4 n = normalize_signs(v);
                    s.grew += norm_max(reduction_pass(n)) > norm_max(n);
                }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int ia = 0; ia < side; ++ia) slice(ia);
    } else {
        for (int ia = 0; ia < side; ++ia) slice(ia);
    }
    BoxCensus out;
    for (auto& s : per) {
        out.total += s.total;
        out.reduced += s.reduced;
        out.reduced_not_fixed += s.reduced_not_fixed;
        out.fixed_not_reduced += s.fixed_not_reduced;
        out.image_not_reduced += s.image_not_reduced;
        out.epsilon_failures += s.epsilon_failures;
        out.sign_failures += s.sign_failures;
        out.grew += s.grew;
        for (auto& e : s.fixed_not_reduced_examples)
            if (out.fixed_not_reduced_examples.size() < 8) out.fixed_not_reduced_examples.push_back(e);
    }
    return out;
}

Vec4 random_primitive(std::uint64_t seed, long long max_entry) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> d(-max_entry, max_entry);
    for (;;) {
        Vec4 v{d(rng), d(rng), d(rng), d(rng)};
        if (is_primitive(v)) return v;
    }
}

GeneratorCheck generator_equivalence(long long trials, std::uint64_t seed, long long max_entry, bool parallel) {
    const std::array<IMat4, 4> gens{gen_A(), gen_B(), gen_C(), gamma1()};
    std::vector<std::array<char, 4>> bad(trials);
    auto trial = [&](long long i) {
        Vec4 v = random_primitive(seed + 104729 * static_cast<std::uint64_t>(i), max_entry);
        for (int g = 0; g < 4; ++g) bad[i][g] = !equivalent(v, gens[g] * v);
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < trials; ++i) trial(i);
    } else {
        for (long long i = 0; i < trials; ++i) trial(i);
    }
    GeneratorCheck out;
    out.trials = trials;
    for (long long i = 0; i < trials; ++i)
        for (int g = 0; g < 4; ++g)
            if (bad[i][g]) {
                if (out.failures[g]++ == 0)
                    out.example[g] = random_primitive(seed + 104729 * static_cast<std::uint64_t>(i), max_entry);
            }
    return out;
}

WitnessCensus witness_census(int pmax, int qmax, bool parallel) {
    if (pmax < 2 || qmax < 2) fail(Errc::BadInput, "pmax and qmax must be at least 2");
    const int np = pmax - 1, nq = qmax - 1;
    std::vector<Vec4> keys(static_cast<size_t>(np) * nq);
    auto one = [&](int i) {
        const long long p = 2 + i / nq, q = 2 + i % nq;
        keys[i] = class_key({p, -1, 0, q});
    };
    const int n = np * nq;
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) one(i);
    } else {
        for (int i = 0; i < n; ++i) one(i);
    }
    std::map<Vec4, int> classes;
    for (auto& k : keys) ++classes[k];
    WitnessCensus out;
    out.vectors = n;
    out.classes = static_cast<int>(classes.size());
    out.all_singletons = true;
    for (auto& [k, count] : classes) {
        out.representatives.push_back(k);
        out.all_singletons = out.all_singletons && count == 1;
    }
    return out;
}

WordStability witness_word_stability(int pmax, int qmax, int words, int max_len, std::uint64_t seed) {
    const std::array<IMat4, 4> gens{gen_A(), gen_B(), gen_C(), gamma1()};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3), len(1, max_len);
    WordStability out;
    out.words = words;
    for (int w = 0; w < words; ++w) {
        IMat4 g = gens[pick(rng)];
        for (int k = len(rng) - 1; k > 0; --k) g = gens[pick(rng)] * g;
        for (long long p = 2; p <= pmax; ++p)
            for (long long q = 2; q <= qmax; ++q) {
                Vec4 v{p, -1, 0, q};
                ++out.images;
                out.failures += !equivalent(v, g * v);
            }
    }
    return out;
}

std::vector<std::vector<Q>> sl2_embed(const std::array<std::array<Q, 2>, 2>& m) {
    const Q &a = m[0][0], &b = m[0][1], &c = m[1][0], &d = m[1][1];
    if (a * d - b * c != 1) fail(Errc::BadInput, "sl2_embed needs determinant 1");
    const Q h(1, 2), s(1, 6);
    return {
        {a * a * d + 2 * a * b * c, -3 * a * a * c, a * b * d + h * b * b * c, h * b * b * d},
        {-a * a * b, a * a * a, -h * a * b * b, -s * b * b * b},
        {4 * a * c * d + 2 * b * c * c, -6 * a * c * c, a * d * d + 2 * b * c * d, b * d * d},
        {6 * c * c * d, -6 * c * c * c, 3 * c * d * d, d * d * d},
    };
}

}  // namespace pf
