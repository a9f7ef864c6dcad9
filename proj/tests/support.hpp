#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "semitrace/group.hpp"
#include "semitrace/monoid.hpp"
#include "semitrace/report.hpp"

namespace testing {

using semitrace::ExponentVector;
using semitrace::Generator;
using semitrace::GroupPresentation;
using semitrace::Weight;

inline GroupPresentation group(int d, std::initializer_list<Generator> gens) {
    return semitrace::normalize(d, std::vector<Generator>(gens));
}

inline GroupPresentation cyclic(std::int64_t n, std::vector<std::int64_t> t) {
    const int d = static_cast<int>(t.size());
    return semitrace::normalize(d, std::vector<Generator>{Generator{n, std::move(t)}});
}

inline Weight weight(std::vector<std::int64_t> s) { return Weight{std::move(s)}; }

/// <(4;1,1,1), (6;1,2,3)> in dimension 3: non-coprime orders.
inline GroupPresentation noncoprime_example() {
    return group(3, {Generator{4, {1, 1, 1}}, Generator{6, {1, 2, 3}}});
}

/// <(2;1,1), (3;1,2)> in dimension 2: coprime orders.
inline GroupPresentation coprime_pair() {
    return group(2, {Generator{2, {1, 1}}, Generator{3, {1, 2}}});
}

/// All normalized cyclic groups with order <= max_order in dimension d, up to
/// relabeling (trivial group included).
inline std::vector<GroupPresentation> cyclic_family(std::int64_t max_order, int d) {
    return semitrace::sweep_groups(semitrace::SweepFamily::cyclic, max_order, d);
}

/// Cyclic n <= 10 in d = 2, 3, plus the two multi-generator groups.
inline std::vector<GroupPresentation> test_matrix() {
    auto out = cyclic_family(10, 2);
    auto three = cyclic_family(10, 3);
    out.insert(out.end(), three.begin(), three.end());
    out.push_back(noncoprime_example());
    out.push_back(coprime_pair());
    return out;
}

inline bool dominated(const ExponentVector& big, const ExponentVector& small) {
    for (std::size_t j = 0; j < big.size(); ++j) {
        if (big[j] < small[j]) return false;
    }
    return true;
}

/// Weight computed straight from the defining congruences, for checks that
/// must not go through weight_of.
inline std::vector<std::int64_t> residues_of(const GroupPresentation& g, const ExponentVector& u) {
    std::vector<std::int64_t> s;
    for (const auto& gen : g.generators) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < u.size(); ++j) acc += gen.exponents[j] * u[j];
        s.push_back(((acc % gen.order) + gen.order) % gen.order);
    }
    return s;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace testing
