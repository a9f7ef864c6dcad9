#include "semitrace/trace.hpp"

#include <algorithm>

#include "semitrace/congruence.hpp"
#include "semitrace/error.hpp"

namespace semitrace {

namespace {

MonomialModule as_ideal(const GroupPresentation& g, MonomialModule m) {
    for (const auto& u : m.gens) {
        const bool nonnegative = std::all_of(u.begin(), u.end(), [](std::int64_t e) { return e >= 0; });
        if (!nonnegative || !weight_of(g, u).is_trivial()) {
            throw Error(Errc::internal_inconsistency, "trace generator " + render_monomial(u) + " is not invariant");
        }
    }
    m.kind = ModuleKind::ideal_of_invariants;
    return m;
}

}  // namespace

MonomialModule product_formula(const GroupPresentation& g, const Weight& w, const Limits& limits) {
    const auto module = semi_invariant_generators(g, w, limits);
    if (module.empty()) throw Error(Errc::empty_module, "R^X = 0 for weight " + to_string(w));
    const auto dual = semi_invariant_generators(g, inverse_weight(g, w), limits);
    return as_ideal(g, module_product(g, module, dual));
}

MonomialModule colon_formula(const GroupPresentation& g, const Weight& w, const Limits& limits) {
    const auto module = semi_invariant_generators(g, w, limits);
    if (module.empty()) throw Error(Errc::empty_module, "R^X = 0 for weight " + to_string(w));
    const auto colon = colon_generators(g, w, limits);
    return as_ideal(g, module_product(g, colon, module));
}

TraceResult trace_ideal(const GroupPresentation& g, const Weight& w, PathChoice choice, const Limits& limits) {
    const auto module = semi_invariant_generators(g, w, limits);
    if (module.empty()) throw Error(Errc::empty_module, "R^X = 0 for weight " + to_string(w));

    TraceResult result;
    result.hypotheses = hypotheses_check(g, limits);
    result.gcd_is_one = gcd_is_one(module);
    const bool product_exact = result.hypotheses.hold() || result.gcd_is_one;

    const bool use_product =
        choice == PathChoice::product || (choice == PathChoice::automatic && product_exact);
    if (use_product) {
        result.ideal = product_formula(g, w, limits);
        result.path = TracePath::product_formula;
        result.exact = product_exact;
    } else {
        result.ideal = colon_formula(g, w, limits);
        result.path = TracePath::colon_formula;
        result.exact = true;
    }
    return result;
}

bool trace_contains_power_ideal(const GroupPresentation& g, const TraceResult& tr, std::int64_t k) {
    if (k < 1) throw Error(Errc::invalid_argument, "power ideal exponent must be >= 1");
    const auto d = static_cast<std::size_t>(g.dimension);
    for (std::size_t j = 0; j < d; ++j) {
        ExponentVector power(d, 0);
        power[j] = k;
        if (!module_membership(g, tr.ideal, power)) return false;
    }
    return true;
}

ExponentVector unit_weight_witness(const GroupPresentation& g, std::size_t j) {
    const auto d = static_cast<std::size_t>(g.dimension);
    if (j >= d) throw Error(Errc::index_out_of_range, "variable index " + std::to_string(j) + " out of range");
    CongruenceSystem sys;
    for (const auto& gen : g.generators) {
        std::vector<std::int64_t> row;
        for (std::size_t k = 0; k < d; ++k) {
            if (k != j) row.push_back(gen.exponents[k]);
        }
        sys.coefficients.push_back(std::move(row));
        sys.rhs.push_back(1);
        sys.moduli.push_back(gen.order);
    }
    ExponentVector u(d, 1);
    if (g.trivial()) {
        u[j] = 0;
        return u;
    }
    const auto c = solve_positive_system(sys);
    for (std::size_t k = 0, col = 0; k < d; ++k) u[k] = (k == j) ? 0 : c[col++];
    return u;
}

std::string_view path_name(TracePath path) noexcept {
    return path == TracePath::product_formula ? "product_formula" : "colon_formula";
}

}  // namespace semitrace
