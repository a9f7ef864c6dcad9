#include "semitrace/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "semitrace/error.hpp"

namespace semitrace {

namespace {

bool total(const PurePowers& pp) {
    return std::all_of(pp.begin(), pp.end(), [](const auto& u) { return u.has_value(); });
}

std::optional<std::size_t> first_missing(const PurePowers& pp) {
    for (std::size_t j = 0; j < pp.size(); ++j) {
        if (!pp[j]) return j;
    }
    return std::nullopt;
}

bool dominates(const ExponentVector& big, const ExponentVector& small) {
    for (std::size_t j = 0; j < big.size(); ++j) {
        if (big[j] < small[j]) return false;
    }
    return true;
}

void add_check(Verdict& v, std::string route, bool value, bool required) {
    if (required && value != v.value) {
        throw Error(Errc::internal_inconsistency, "verdict route '" + v.justification + "' disagrees with '" + route + "'");
    }
    v.checks.push_back(CrossCheck{std::move(route), value, required});
}

}  // namespace

bool Witness::empty() const noexcept {
    return pure_powers.empty() && dual_pure_powers.empty() && !generator && !weight && !variable;
}

PurePowers pure_power_exponents(const GroupPresentation& g, const Weight& w) {
    if (w.residues.size() != g.rank()) throw Error(Errc::dimension_mismatch, "weight length differs from group rank");
    const auto d = static_cast<std::size_t>(g.dimension);
    PurePowers out(d);
    for (std::size_t j = 0; j < d; ++j) {
        ExponentVector u(d, 0);
        for (std::int64_t power = 1; power <= g.lcm_order; ++power) {
            u[j] = power;
            if (weight_of(g, u) == w) {
                out[j] = power;
                break;
            }
        }
    }
    return out;
}

std::optional<std::size_t> first_non_primary_variable(const MonomialModule& ideal) {
    if (ideal.gens.empty()) return 0;
    const std::size_t d = ideal.gens.front().size();
    for (std::size_t j = 0; j < d; ++j) {
        const bool has_pure_power = std::any_of(ideal.gens.begin(), ideal.gens.end(), [&](const ExponentVector& u) {
            for (std::size_t k = 0; k < d; ++k) {
                if (k != j && u[k] != 0) return false;
            }
            return true;
        });
        if (!has_pure_power) return j;
    }
    return std::nullopt;
}

Verdict locally_free_on_punctured(const GroupPresentation& g, const Weight& w, const Limits& limits) {
    if (!is_nonzero(g, w, limits)) throw Error(Errc::empty_module, "R^X = 0 for weight " + to_string(w));
    const auto trace = trace_ideal(g, w, PathChoice::automatic, limits);
    const auto bad_variable = first_non_primary_variable(trace.ideal);
    const bool primary = !bad_variable.has_value();

    Verdict v;
    v.witness.pure_powers = pure_power_exponents(g, w);
    if (w.is_trivial()) {
        v.value = true;
        v.justification = "trivial-weight";
    } else if (total(v.witness.pure_powers)) {
        v.value = true;
        v.justification = "pure-power";
    } else if (trace.hypotheses.hold()) {
        v.value = false;
        v.justification = "pure-power-converse";
        v.witness.variable = first_missing(v.witness.pure_powers);
    } else {
        v.value = primary;
        v.justification = "trace-primary";
        v.witness.variable = bad_variable;
        return v;
    }
    add_check(v, "trace-primary", primary, true);
    return v;
}

Verdict all_weights_locally_free(const GroupPresentation& g, const Limits& limits) {
    const auto hyp = hypotheses_check(g, limits);

    // Conjunction of the per-character verdicts; always exact.
    bool conjunction = true;
    std::optional<Weight> failing;
    for (const auto& w : realizable_weights(g, limits)) {
        if (!locally_free_on_punctured(g, w, limits).value) {
            conjunction = false;
            failing = w;
            break;
        }
    }

    Verdict v;
    if (!hyp.hold()) {
        v.value = conjunction;
        v.justification = "all-weights-trace";
        v.witness.weight = failing;
        return v;
    }

    // X_j^1, ..., X_j^n land in pairwise different characters.
    const auto d = static_cast<std::size_t>(g.dimension);
    v.value = true;
    v.justification = "pure-power-injective";
    for (std::size_t j = 0; j < d && v.value; ++j) {
        std::set<Weight> seen;
        ExponentVector u(d, 0);
        for (std::int64_t power = 1; power <= g.product_order; ++power) {
            u[j] = power;
            if (!seen.insert(weight_of(g, u)).second) {
                v.value = false;
                v.witness.variable = j;
                break;
            }
        }
    }
    if (g.rank() == 1) {
        const auto& gen = g.generators.front();
        const bool units = std::all_of(gen.exponents.begin(), gen.exponents.end(),
                                       [&](std::int64_t t) { return std::gcd(t, gen.order) == 1; });
        add_check(v, "cyclic-gcd", units, true);
    }
    add_check(v, "all-weights-trace", conjunction, true);
    return v;
}

Verdict is_gorenstein(const GroupPresentation& g, const Limits& limits) {
    const Weight det = det_weight(g);
    const auto trace = trace_ideal(g, inverse_weight(g, det), PathChoice::automatic, limits);

    Verdict v;
    v.value = trace.ideal.is_unit();
    v.justification = "trace-unit";
    v.witness.weight = inverse_weight(g, det);
    // G inside SL always gives Gorenstein; the converse needs no pseudo-reflections.
    const bool special_linear = det.is_trivial();
    add_check(v, "special-linear", special_linear, special_linear || trace.hypotheses.pseudo_reflection_free);
    return v;
}

Verdict gorenstein_on_punctured(const GroupPresentation& g, const Limits& limits) {
    const Weight det = det_weight(g);
    const Weight canonical = inverse_weight(g, det);
    const auto by_trace = locally_free_on_punctured(g, canonical, limits);
    const auto hyp = hypotheses_check(g, limits);

    Verdict v;
    v.value = by_trace.value;
    v.justification = by_trace.justification;
    v.witness.pure_powers = by_trace.witness.pure_powers;
    v.witness.dual_pure_powers = pure_power_exponents(g, det);
    v.witness.variable = by_trace.witness.variable;
    v.checks = by_trace.checks;
    add_check(v, "det-pure-power", total(v.witness.dual_pure_powers), hyp.hold());
    return v;
}

Verdict nearly_gorenstein(const GroupPresentation& g, const Limits& limits) {
    const Weight det = det_weight(g);
    const auto trace = trace_ideal(g, inverse_weight(g, det), PathChoice::automatic, limits);
    const auto maximal = invariant_hilbert_basis(g, limits);

    std::optional<ExponentVector> outside_trace;
    for (const auto& f : maximal.gens) {
        if (!module_membership(g, trace.ideal, f)) {
            outside_trace = f;
            break;
        }
    }

    const auto det_module = semi_invariant_generators(g, det, limits);
    std::optional<ExponentVector> undivided;
    for (const auto& f : maximal.gens) {
        const bool divided = std::any_of(det_module.gens.begin(), det_module.gens.end(),
                                         [&](const ExponentVector& m) { return dominates(f, m); });
        if (!divided) {
            undivided = f;
            break;
        }
    }

    Verdict v;
    const bool fast_route_valid = trace.path == TracePath::product_formula && trace.exact;
    if (fast_route_valid) {
        v.value = !undivided;
        v.justification = "canonical-divisibility";
        v.witness.generator = undivided;
        add_check(v, "trace-contains-maximal-ideal", !outside_trace, true);
    } else {
        v.value = !outside_trace;
        v.justification = "trace-contains-maximal-ideal";
        v.witness.generator = outside_trace;
        add_check(v, "canonical-divisibility", !undivided, false);
    }
    return v;
}

}  // namespace semitrace
