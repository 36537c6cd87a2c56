#pragma once

#include "pf/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pf {

using Vec4 = std::array<long long, 4>;
using IMat4 = std::array<std::array<long long, 4>, 4>;

std::string to_string(const Vec4& v);
bool is_primitive(const Vec4& v);

// (a,b,c,d) -> (d,-c,-b,a)
Vec4 epsilon(const Vec4& v);
// a >= 0, b <= 0, c >= 0, d >= 0, -b <= d/2 - c, c <= a/2 + b; throws NotPrimitive
bool is_reduced(const Vec4& v);

// argmin_n |x + n k|; ties go to smaller |n|, then smaller n; k = 0 gives 0
long long best_shift(long long x, long long k);

// Steps 1-4 once on a vector already in the sign pattern (+,-,+,+)
Vec4 reduction_pass(const Vec4& v);

struct Reduction {
    Vec4 r;
    int passes = 0;
};
// Step 0, then passes until a fixed point; NonTermination after max_passes
Reduction reduce(const Vec4& v, int max_passes = 10000);
bool equivalent(const Vec4& x, const Vec4& y);

IMat4 gen_A();
IMat4 gen_B();
IMat4 gen_C();
IMat4 gamma0();
IMat4 gamma1();
IMat4 operator*(const IMat4& a, const IMat4& b);
Vec4 operator*(const IMat4& m, const Vec4& v);

// all primitive vectors with entries in [-bound, bound]
struct BoxCensus {
    long long total = 0;
    long long reduced = 0;
    long long reduced_not_fixed = 0;
    long long fixed_not_reduced = 0;
    long long image_not_reduced = 0;  // r(v) fails the reduced conditions
    long long epsilon_failures = 0;   // r(eps v) != eps r(v)
    long long sign_failures = 0;      // r(+-a, +-b, +-c, +-d) != r(a, b, c, d)
    long long grew = 0;               // a pass increased the max norm
    std::vector<Vec4> fixed_not_reduced_examples;  // lexicographically smallest few
    bool consistent() const {
        return reduced_not_fixed == 0 && fixed_not_reduced == 0 && image_not_reduced == 0 && epsilon_failures == 0 &&
               sign_failures == 0;
    }
};
BoxCensus box_census(int bound, bool parallel = true);

Vec4 random_primitive(std::uint64_t seed, long long max_entry);

struct GeneratorCheck {
    long long trials = 0;
    std::array<long long, 4> failures{};  // A, B, C, gamma1
    std::array<Vec4, 4> example{};        // first failing v for each generator
    long long total_failures() const { return failures[0] + failures[1] + failures[2] + failures[3]; }
};
GeneratorCheck generator_equivalence(long long trials, std::uint64_t seed, long long max_entry = 50,
                                     bool parallel = true);

struct WitnessCensus {
    int vectors = 0;
    int classes = 0;
    bool all_singletons = false;
    std::vector<Vec4> representatives;  // one reduced representative per class, sorted
};
// classes of (p,-1,0,q) for 2 <= p <= pmax, 2 <= q <= qmax
WitnessCensus witness_census(int pmax, int qmax, bool parallel = true);

struct WordStability {
    int words = 0;
    long long images = 0;
    long long failures = 0;
};
// images of the witness vectors under random words of length <= max_len in A, B, C, gamma1
WordStability witness_word_stability(int pmax, int qmax, int words, int max_len, std::uint64_t seed);

std::vector<std::vector<Q>> sl2_embed(const std::array<std::array<Q, 2>, 2>& m);

}  // namespace pf
