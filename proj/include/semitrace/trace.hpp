#pragma once

#include <cstdint>
#include <optional>

#include "semitrace/group.hpp"
#include "semitrace/monoid.hpp"

namespace semitrace {

enum class TracePath { product_formula, colon_formula };

/// Route request for trace_ideal. `automatic` picks the product formula only
/// where it is known to equal the trace.
enum class PathChoice { automatic, product, colon };

struct TraceResult {
    MonomialModule ideal;  // weight 0, nonnegative generators
    TracePath path = TracePath::colon_formula;
    Hypotheses hypotheses;
    bool gcd_is_one = false;
    /// False only when the product formula was forced outside its validity
    /// range; the ideal is then R^X R^{X^-1}, which may be strictly smaller.
    bool exact = true;

    friend bool operator==(const TraceResult&, const TraceResult&) = default;
};

/// R^X R^{X^-1}, minimalized. Always contained in the trace.
MonomialModule product_formula(const GroupPresentation& g, const Weight& w, const Limits& limits = {});

/// (R^G :_{S^{-1}R} R^X) R^X, the trace by the colon characterization.
MonomialModule colon_formula(const GroupPresentation& g, const Weight& w, const Limits& limits = {});

/// tr_{R^G}(R^X). The product path is exact when the orders are pairwise
/// coprime and G has no pseudo-reflection, or when gcd(R^X) = 1 (the colon is
/// then exactly R^{X^-1}); everything else goes through the colon.
TraceResult trace_ideal(const GroupPresentation& g, const Weight& w, PathChoice choice = PathChoice::automatic,
                        const Limits& limits = {});

/// (X_1^k, ..., X_d^k) contained in the trace ideal.
bool trace_contains_power_ideal(const GroupPresentation& g, const TraceResult& tr, std::int64_t k);

/// A monomial of weight (1, ..., 1) avoiding X_j with every other exponent
/// positive, built by solving t_i1 c_1 + ... (skipping j) == 1 (mod n_i).
/// Requires the coprime/pseudo-reflection-free hypotheses (otherwise the
/// solver refuses with HypothesisViolation). Its existence for every j is
/// what forces gcd(R^X) = 1 for all X.
ExponentVector unit_weight_witness(const GroupPresentation& g, std::size_t j);

std::string_view path_name(TracePath path) noexcept;

}  // namespace semitrace
