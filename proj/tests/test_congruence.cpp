#include <numeric>

#include "doctest.h"
#include "semitrace/congruence.hpp"
#include "semitrace/error.hpp"
#include "support.hpp"

using namespace semitrace;
using testing::uniform;

namespace {

// Substitution check kept independent of CongruenceSystem::satisfied_by.
bool substitutes(const CongruenceSystem& sys, const std::vector<std::int64_t>& x) {
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        __int128 lhs = 0;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += static_cast<__int128>(sys.coefficients[i][j]) * x[j];
        const __int128 p = sys.moduli[i];
        if (((lhs - sys.rhs[i]) % p + p) % p != 0) return false;
    }
    return true;
}

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::internal_inconsistency;
}

std::vector<std::int64_t> random_coprime_moduli(std::size_t m, std::int64_t max) {
    std::vector<std::int64_t> out;
    while (out.size() < m) {
        const auto p = uniform(1, max);
        if (std::all_of(out.begin(), out.end(), [&](std::int64_t q) { return std::gcd(p, q) == 1; })) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("ext_gcd") {
    CHECK(ext_gcd(0, 0) == ExtGcd{0, 0, 0});
    CHECK(ext_gcd(1, 0) == ExtGcd{1, 1, 0});

    const auto r = ext_gcd(12, 8);
    CHECK(r.g == 4);
    CHECK(12 * r.x + 8 * r.y == 4);

    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = uniform(-100000, 100000), b = uniform(-100000, 100000);
        const auto e = ext_gcd(a, b);
        CHECK(e.g == std::gcd(a, b));
        CHECK(a * e.x + b * e.y == e.g);
    }
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(1, 5) == 1);
    CHECK(mod_inverse(3, 4) == 3);
    CHECK(code_of([] { mod_inverse(2, 4); }) == Errc::not_coprime);
    CHECK(mod_inverse(7, 1) == 1);

    SUBCASE("agrees with brute force") {
        for (std::int64_t m = 1; m <= 60; ++m) {
            for (std::int64_t a = 0; a < 2 * m; ++a) {
                std::int64_t found = 0;
                for (std::int64_t u = 1; u <= m && !found; ++u) {
                    if ((a * u) % m == 1 % m) found = u;
                }
                if (std::gcd(a, m) == 1) CHECK(mod_inverse(a, m) == found);
                else CHECK(found == 0);
            }
        }
    }
}

TEST_CASE("crt") {
    const std::vector<std::int64_t> r0{0}, m0{1};
    CHECK(crt(r0, m0) == 1);
    const std::vector<std::int64_t> r1{1, 1}, m1{4, 3};
    CHECK(crt(r1, m1) == 1);
    const std::vector<std::int64_t> r2{2, 3}, m2{3, 5};
    CHECK(crt(r2, m2) == 8);
    CHECK(crt(std::vector<std::int64_t>{}, std::vector<std::int64_t>{}) == 1);

    const std::vector<std::int64_t> bad{4, 6};
    CHECK(code_of([&] { crt(r1, bad); }) == Errc::not_pairwise_coprime);

    const std::vector<std::int64_t> huge{4611686018427387903LL, 4};
    CHECK(code_of([&] { crt(r1, huge); }) == Errc::input_too_large);

    SUBCASE("unique solution in [1, prod] by exhaustive scan") {
        for (int trial = 0; trial < 200; ++trial) {
            const auto moduli = random_coprime_moduli(static_cast<std::size_t>(uniform(1, 3)), 60);
            std::int64_t prod = 1;
            for (auto p : moduli) prod *= p;
            std::vector<std::int64_t> residues;
            for (auto p : moduli) residues.push_back(uniform(-3 * p, 3 * p));
            std::vector<std::int64_t> hits;
            for (std::int64_t c = 1; c <= prod; ++c) {
                bool ok = true;
                for (std::size_t i = 0; i < moduli.size(); ++i) ok = ok && ((c - residues[i]) % moduli[i] == 0);
                if (ok) hits.push_back(c);
            }
            REQUIRE(hits.size() == 1);
            CHECK(crt(residues, moduli) == hits.front());
        }
    }
}

TEST_CASE("solve_positive_system canonical outputs") {
    // One unknown, unit coefficient.
    CHECK(solve_positive_system({{{1}}, {1}, {4}}) == std::vector<std::int64_t>{1});

    // x1 + x2 == 1 (mod 4): x2 is solved modulo gcd(1, 4) = 1, the row drops,
    // so x2 = 1; then x1 == 0 (mod 4) gives x1 = 4.
    const CongruenceSystem two{{{1, 1}}, {1}, {4}};
    const auto x = solve_positive_system(two);
    CHECK(x == std::vector<std::int64_t>{4, 1});
    CHECK(substitutes(two, x));

    // x1+x2+x3 == 1 (mod 4), x1+2x2+3x3 == 0 (mod 3): x3 = x2 = 1, then
    // x1 == 3 (mod 4) and x1 == 1 (mod 3) gives 7.
    const CongruenceSystem three{{{1, 1, 1}, {1, 2, 3}}, {1, 0}, {4, 3}};
    const auto y = solve_positive_system(three);
    CHECK(y == std::vector<std::int64_t>{7, 1, 1});
    CHECK(substitutes(three, y));
}

TEST_CASE("solve_positive_system edge cases") {
    // Negative and oversized right-hand sides are reduced.
    const CongruenceSystem neg{{{3, 5}}, {-7}, {11}};
    const auto x = solve_positive_system(neg);
    CHECK(substitutes(neg, x));

    // A modulus-1 row is trivially satisfied.
    const CongruenceSystem unit{{{2, 4}, {1, 1}}, {0, 1}, {1, 5}};
    CHECK(substitutes(unit, solve_positive_system(unit)));

    // Zero coefficient columns still get a positive value.
    const CongruenceSystem zero_col{{{0, 1}}, {3}, {7}};
    const auto z = solve_positive_system(zero_col);
    CHECK(z[0] >= 1);
    CHECK(substitutes(zero_col, z));

    CHECK(code_of([] { solve_positive_system({{{1, 1}, {1, 1}}, {0, 0}, {4, 6}}); }) == Errc::hypothesis_violation);
    CHECK(code_of([] { solve_positive_system({{{2, 4}}, {1}, {6}}); }) == Errc::hypothesis_violation);
    CHECK(code_of([] { solve_positive_system({{{1, 1}}, {1, 2}, {4}}); }) == Errc::dimension_mismatch);
    CHECK(code_of([] { solve_positive_system({{{-1}}, {1}, {4}}); }) == Errc::invalid_argument);
    CHECK(code_of([] { solve_positive_system({{{1}}, {1}, {0}}); }) == Errc::invalid_argument);
}

TEST_CASE("solve_positive_system property: random precondition-satisfying systems") {
    int solved = 0;
    while (solved < 500) {
        const auto m = static_cast<std::size_t>(uniform(1, 4));
        const auto n = static_cast<std::size_t>(uniform(1, 5));
        CongruenceSystem sys;
        sys.moduli = random_coprime_moduli(m, 30);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<std::int64_t> row;
            do {
                row.clear();
                for (std::size_t j = 0; j < n; ++j) row.push_back(uniform(0, 40));
            } while (std::gcd(gcd_of(row), sys.moduli[i]) != 1);
            sys.coefficients.push_back(row);
            sys.rhs.push_back(uniform(-50, 50));
        }
        const auto x = solve_positive_system(sys);
        REQUIRE(x.size() == n);
        CHECK(std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v >= 1; }));
        CHECK(substitutes(sys, x));
        CHECK(solve_positive_system(sys) == x);
        ++solved;
    }
}

TEST_CASE("solve_positive_system property: violating systems are refused") {
    int refused = 0;
    while (refused < 100) {
        const auto n = static_cast<std::size_t>(uniform(1, 5));
        CongruenceSystem sys;
        if (uniform(0, 1) == 0) {
            // Two moduli sharing a factor.
            const auto f = uniform(2, 5);
            sys.moduli = {f * uniform(1, 6), f * uniform(1, 6)};
            for (int i = 0; i < 2; ++i) {
                std::vector<std::int64_t> row(n, 0);
                row[0] = 1;
                for (std::size_t j = 1; j < n; ++j) row[j] = uniform(0, 40);
                sys.coefficients.push_back(row);
                sys.rhs.push_back(uniform(0, 30));
            }
        } else {
            // One row whose coefficients all share a factor with its modulus.
            const auto f = uniform(2, 5);
            sys.moduli = {f * uniform(1, 6)};
            std::vector<std::int64_t> row;
            for (std::size_t j = 0; j < n; ++j) row.push_back(f * uniform(0, 8));
            sys.coefficients.push_back(row);
            sys.rhs.push_back(uniform(0, 30));
        }
        CHECK(code_of([&] { solve_positive_system(sys); }) == Errc::hypothesis_violation);
        ++refused;
    }
}
