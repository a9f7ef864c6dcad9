// Acceptance suite: one line per criterion, exact integer comparisons only.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "semitrace/congruence.hpp"
#include "semitrace/criteria.hpp"
#include "semitrace/error.hpp"
#include "semitrace/oracle.hpp"
#include "semitrace/report.hpp"
#include "semitrace/trace.hpp"
#include "support.hpp"

using namespace semitrace;
using testing::cyclic;
using testing::weight;
using Gens = std::vector<ExponentVector>;

namespace {

struct Checker {
    std::vector<std::string> failures;
    void require(bool cond, const std::string& what) {
        if (!cond) failures.push_back(what);
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<void(Checker&)> run;
};

bool total(const PurePowers& p) {
    return std::all_of(p.begin(), p.end(), [](const auto& x) { return x.has_value(); });
}

bool has(const Gens& gens, const ExponentVector& v) { return std::find(gens.begin(), gens.end(), v) != gens.end(); }

void example_4_4_1(Checker& c) {
    const auto g = cyclic(4, {1, 1, 3});
    c.require(inverse_weight(g, det_weight(g)) == weight({3}), "det^-1 weight is (3)");
    c.require(!is_gorenstein(g).value, "not Gorenstein");
    c.require(nearly_gorenstein(g).value, "nearly Gorenstein");
    c.require(gorenstein_on_punctured(g).value, "Gorenstein on the punctured spectrum");

    const auto prod = module_product(g, semi_invariant_generators(g, weight({1})), semi_invariant_generators(g, weight({3})));
    c.require(!module_membership(g, prod, ExponentVector{0, 0, 0}), "1 not in R^(1) R^(3)");

    // The printed generator list of m_G has X1*X2^4, of weight 5 = 1 mod 4 and
    // so not invariant; the oracle gives X1*X2^3 in its place.
    const Gens derived{{0, 0, 4}, {0, 1, 1}, {0, 4, 0}, {1, 0, 1}, {1, 3, 0}, {2, 2, 0}, {3, 1, 0}, {4, 0, 0}};
    c.require(oracle::brute_minimal_generators(g, zero_weight(g), 2 * g.lcm_order) == derived, "oracle m_G list");
    c.require(invariant_hilbert_basis(g).gens == derived, "engine m_G list equals the 8 oracle generators");
    c.require(!weight_of(g, ExponentVector{1, 4, 0}).is_trivial(), "X1*X2^4 is not invariant");
}

void example_4_4_2(Checker& c) {
    const auto g = cyclic(4, {1, 2, 3});
    const Gens expected{{0, 2, 0}, {1, 0, 1}, {0, 1, 2}, {2, 1, 0}, {0, 0, 4}, {4, 0, 0}};
    const auto hb = invariant_hilbert_basis(g).gens;
    c.require(std::set<ExponentVector>(hb.begin(), hb.end()) == std::set<ExponentVector>(expected.begin(), expected.end()) &&
                  hb.size() == expected.size(),
              "m_G generators X2^2, X1X3, X2X3^2, X1^2X2, X3^4, X1^4");

    const auto punct = gorenstein_on_punctured(g);
    c.require(punct.value, "Gorenstein on the punctured spectrum");
    c.require(pure_power_exponents(g, weight({2})) == PurePowers{2, 1, 2}, "pure powers (2,1,2) in R^(2)");
    c.require(punct.witness.pure_powers == PurePowers{2, 1, 2}, "verdict witness (2,1,2)");

    const auto near = nearly_gorenstein(g);
    c.require(!near.value, "not nearly Gorenstein");
    c.require(near.witness.generator == ExponentVector{1, 0, 1}, "witness X1*X3");
}

void example_4_4_3(Checker& c) {
    const auto g = cyclic(6, {1, 1, 3});
    const auto inv = inverse_weight(g, det_weight(g));
    c.require(inv == weight({1}), "det^-1 weight is (1)");
    const auto v = gorenstein_on_punctured(g);
    c.require(!v.value, "not Gorenstein on the punctured spectrum");

    bool solvable = false;
    for (std::int64_t u = 1; u <= 6; ++u) solvable = solvable || (3 * u) % 6 == 1;
    c.require(!solvable, "3u = 1 mod 6 has no solution");
    const auto pp = pure_power_exponents(g, inv);
    c.require(pp.size() == 3 && !pp[2].has_value(), "no pure power of X3 in R^(1)");
    c.require(v.witness.pure_powers.size() == 3 && !v.witness.pure_powers[2].has_value(), "verdict witness misses X3");
    const auto sig = semi_invariant_generators(g, inv);
    for (std::int64_t k = 1; k <= 6; ++k)
        c.require(!module_membership(g, sig, ExponentVector{0, 0, k}), "X3^" + std::to_string(k) + " not in R^(1)");
}

void example_4_5(Checker& c) {
    const auto g = cyclic(6, {1, 1, 2});
    c.require(nearly_gorenstein(g).value, "nearly Gorenstein");
    const auto v = locally_free_on_punctured(g, weight({1}));
    c.require(!v.value, "R^(1) not locally free on the punctured spectrum");

    bool solvable = false;
    for (std::int64_t u = 1; u <= 6; ++u) solvable = solvable || (2 * u) % 6 == 1;
    c.require(!solvable, "2u = 1 mod 6 has no solution");
    const auto pp = pure_power_exponents(g, weight({1}));
    c.require(pp.size() == 3 && !pp[2].has_value(), "no pure power of X3 in R^(1)");
    c.require(v.witness.variable == std::size_t{2}, "verdict names X3");
}

void example_3_10(Checker& c) {
    const auto g = testing::noncoprime_example();
    const auto ws = all_weights(g);
    c.require(ws.size() == 24, "24 weight tuples");
    c.require(std::all_of(ws.begin(), ws.end(), [&](const Weight& w) { return is_nonzero(g, w); }),
              "every weight realizable");

    const auto r10 = semi_invariant_generators(g, weight({1, 0}));
    const auto r01 = semi_invariant_generators(g, weight({0, 1}));
    c.require(weight_of(g, ExponentVector{1, 1, 23}) == weight({1, 0}) &&
                  module_membership(g, r10, ExponentVector{1, 1, 23}),
              "X1 X2 X3^23 in R^(1,0)");
    c.require(weight_of(g, ExponentVector{0, 23, 1}) == weight({0, 1}) &&
                  module_membership(g, r01, ExponentVector{0, 23, 1}),
              "X2^23 X3 in R^(0,1)");

    c.require(std::all_of(r10.gens.begin(), r10.gens.end(), [](const auto& u) { return u[1] >= 1; }),
              "X2 divides every generator of R^(1,0)");
    const auto prod = module_product(g, r10, semi_invariant_generators(g, weight({3, 0})));
    c.require(std::all_of(prod.gens.begin(), prod.gens.end(), [](const auto& u) { return u[1] >= 1; }),
              "X2 divides every generator of R^(1,0) R^(3,0)");

    const auto colon = colon_generators(g, weight({1, 0}));
    c.require(module_membership(g, colon, ExponentVector{11, -1, 1}), "X1^11 X3 / X2 in the colon");

    const auto tr = trace_ideal(g, weight({1, 0}));
    c.require(tr.path == TracePath::colon_formula, "trace via the colon path");
    c.require(module_membership(g, tr.ideal, ExponentVector{12, 0, 24}), "X1^12 X3^24 in the trace");
    const bool contains_product = std::all_of(prod.gens.begin(), prod.gens.end(),
                                              [&](const auto& u) { return module_membership(g, tr.ideal, u); });
    const bool strictly = std::any_of(tr.ideal.gens.begin(), tr.ideal.gens.end(),
                                      [&](const auto& u) { return !module_membership(g, prod, u); });
    c.require(contains_product && strictly, "trace strictly contains the product");
    c.require(!has(prod.gens, ExponentVector{12, 0, 24}) && !module_membership(g, prod, ExponentVector{12, 0, 24}),
              "X1^12 X3^24 not in the product");
}

void paths_agree(Checker& c) {
    std::size_t groups = 0, weights = 0;
    for (const auto& g : testing::cyclic_family(10, 3)) {
        if (has_pseudo_reflection(g)) continue;
        ++groups;
        for (const auto& w : all_weights(g)) {
            ++weights;
            c.require(colon_formula(g, w).gens == product_formula(g, w).gens, to_string(g) + " weight " + to_string(w));
        }
    }
    c.require(groups > 0 && weights > groups, "family is nonempty");
}

void solver(Checker& c) {
    using testing::uniform;
    auto coprime_moduli = [](std::size_t m) {
        std::vector<std::int64_t> out;
        while (out.size() < m) {
            const auto p = uniform(1, 30);
            if (std::all_of(out.begin(), out.end(), [&](auto q) { return std::gcd(p, q) == 1; })) out.push_back(p);
        }
        return out;
    };
    for (int trial = 0; trial < 500; ++trial) {
        const auto m = static_cast<std::size_t>(uniform(1, 4));
        const auto n = static_cast<std::size_t>(uniform(1, 5));
        CongruenceSystem sys;
        sys.moduli = coprime_moduli(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<std::int64_t> row;
            do {
                row.assign(n, 0);
                for (auto& a : row) a = uniform(0, 40);
            } while (std::gcd(gcd_of(row), sys.moduli[i]) != 1);
            sys.coefficients.push_back(row);
            sys.rhs.push_back(uniform(-40, 40));
        }
        const auto x = solve_positive_system(sys);
        bool ok = x.size() == n && std::all_of(x.begin(), x.end(), [](auto v) { return v >= 1; });
        for (std::size_t i = 0; ok && i < m; ++i) {
            __int128 lhs = 0;
            for (std::size_t j = 0; j < n; ++j) lhs += static_cast<__int128>(sys.coefficients[i][j]) * x[j];
            ok = (lhs - sys.rhs[i]) % sys.moduli[i] == 0;
        }
        c.require(ok, "system " + std::to_string(trial) + " solved exactly");
    }
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(1, 5));
        const auto f = uniform(2, 5);
        CongruenceSystem sys;
        if (trial % 2 == 0) {
            sys.moduli = {f * uniform(1, 6), f * uniform(1, 6)};
            for (int i = 0; i < 2; ++i) {
                std::vector<std::int64_t> row(n, 1);
                for (std::size_t j = 1; j < n; ++j) row[j] = uniform(0, 40);
                sys.coefficients.push_back(row);
                sys.rhs.push_back(uniform(0, 30));
            }
        } else {
            sys.moduli = {f * uniform(1, 6)};
            std::vector<std::int64_t> row(n);
            for (auto& a : row) a = f * uniform(0, 8);
            sys.coefficients.push_back(row);
            sys.rhs.push_back(uniform(0, 30));
        }
        bool refused = false;
        try {
            solve_positive_system(sys);
        } catch (const Error& e) {
            refused = e.code() == Errc::hypothesis_violation;
        }
        c.require(refused, "violating system " + std::to_string(trial) + " refused");
    }
}

void hilbert_completeness(Checker& c) {
    for (const auto& g : testing::test_matrix()) {
        const auto targets = oracle::enumerate_by_weight(g, zero_weight(g), 2 * g.lcm_order);
        c.require(oracle::combination_check(g, targets, invariant_hilbert_basis(g).gens), to_string(g));
    }
}

// X_j^1..X_j^n in pairwise different weights, straight from the residues.
bool pure_powers_injective(const GroupPresentation& g) {
    for (int j = 0; j < g.dimension; ++j) {
        std::set<std::vector<std::int64_t>> seen;
        for (std::int64_t u = 1; u <= g.product_order; ++u) {
            ExponentVector e(static_cast<std::size_t>(g.dimension), 0);
            e[static_cast<std::size_t>(j)] = u;
            if (!seen.insert(testing::residues_of(g, e)).second) return false;
        }
    }
    return true;
}

bool cyclic_gcd_rule(const GroupPresentation& g) {
    if (g.trivial()) return true;
    const auto& gen = g.generators[0];
    return std::all_of(gen.exponents.begin(), gen.exponents.end(),
                       [&](std::int64_t t) { return std::gcd(t, gen.order) == 1; });
}

void coherence(Checker& c) {
    const auto rows = sweep(SweepFamily::cyclic, 12, 3);
    c.require(!rows.empty(), "sweep is nonempty");
    for (const auto& row : rows) {
        const auto& g = row.group;
        const auto name = to_string(g);
        if (row.gorenstein.value) c.require(row.nearly_gorenstein.value, name + ": Gorenstein => nearly");
        if (row.nearly_gorenstein.value) c.require(row.gorenstein_on_punctured.value, name + ": nearly => punctured");

        const bool cond2 = total(pure_power_exponents(g, det_weight(g)));
        const bool cond3 = total(pure_power_exponents(g, inverse_weight(g, det_weight(g))));
        c.require(cond2 == cond3, name + ": det and det^-1 pure-power conditions agree");
        if (row.hypotheses.hold()) c.require(row.gorenstein_on_punctured.value == cond3, name + ": punctured verdict");

        if (row.hypotheses.pseudo_reflection_free) {
            c.require(pure_powers_injective(g) == cyclic_gcd_rule(g), name + ": injectivity vs gcd rule");
            c.require(row.all_weights_locally_free.value == cyclic_gcd_rule(g), name + ": all-weights verdict");
        }
    }
}

void two_dimensional(Checker& c) {
    std::size_t checked = 0;
    for (const auto& row : sweep(SweepFamily::cyclic, 12, 2)) {
        if (!row.hypotheses.pseudo_reflection_free) continue;
        ++checked;
        c.require(row.nearly_gorenstein.value, to_string(row.group) + " nearly Gorenstein");
    }
    c.require(checked > 0, "family is nonempty");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "G=(4;1,1,3): canonical weight, verdicts, m_G list", 5, example_4_4_1},
        {2, "G=(4;1,2,3): m_G list, punctured witness, nearly-Gorenstein witness", 5, example_4_4_2},
        {3, "G=(6;1,1,3): not Gorenstein off the maximal ideal", 5, example_4_4_3},
        {4, "G=(6;1,1,2): nearly Gorenstein, R^(1) not locally free", 5, example_4_5},
        {5, "G=<(4;1,1,1),(6;1,2,3)>: memberships, X2 divisibility, strict trace", 5, example_3_10},
        {6, "colon path == product path, cyclic pseudo-reflection free, n<=10, d=3", 60, paths_agree},
        {7, "positive congruence solver: 500 solved, 100 refused", 5, solver},
        {8, "Hilbert basis completeness up to degree 2N on the test matrix", 5, hilbert_completeness},
        {9, "criteria coherence over cyclic n<=12, d=3", 120, coherence},
        {10, "cyclic n<=12, d=2, no pseudo-reflection: nearly Gorenstein", 5, two_dimensional},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        Checker c;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.budget_seconds) {
            c.failures.push_back("took " + std::to_string(secs) + " s, budget " + std::to_string(cr.budget_seconds) + " s");
        }
        const bool ok = c.failures.empty();
        if (!ok) ++failed;
        std::printf("[%s] AC%-2d %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.title.c_str(), secs);
        for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::printf("       - %s\n", c.failures[i].c_str());
        if (c.failures.size() > 10) std::printf("       - ... %zu more\n", c.failures.size() - 10);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
