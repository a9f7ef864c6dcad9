#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semitrace/group.hpp"
#include "semitrace/monoid.hpp"
#include "semitrace/trace.hpp"

namespace semitrace {

using PurePowers = std::vector<std::optional<std::int64_t>>;

/// A second route evaluated alongside the one that decided a verdict.
/// When `required` is set the two routes are theorems about the same
/// property and must agree; disagreement raises InternalInconsistency.
struct CrossCheck {
    std::string route;
    bool value = false;
    bool required = false;

    friend bool operator==(const CrossCheck&, const CrossCheck&) = default;
};

struct Witness {
    PurePowers pure_powers;       // smallest u_j with X_j^{u_j} in R^X (X = det^-1 for canonical verdicts)
    PurePowers dual_pure_powers;  // the same for the inverse character
    std::optional<ExponentVector> generator;  // offending m_G generator
    std::optional<Weight> weight;             // offending character
    std::optional<std::size_t> variable;      // offending variable, 0-based

    bool empty() const noexcept;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Two-valued decision plus the route that produced it.
///
/// Justification tags:
///   trivial-weight           R^X = R^G
///   pure-power               every X_j has a power in R^X, so R^X is locally free off m_G
///   pure-power-converse      a pure power is missing and G is coprime + pseudo-reflection free
///   trace-primary            exact trace ideal is (or is not) m_G-primary
///   pure-power-injective     u -> weight(X_j^u) injective on 1..n for every j
///   all-weights-trace        conjunction of trace-primary over realizable characters
///   trace-unit               1 in tr(omega)
///   canonical-divisibility   every m_G generator is divisible by a monomial of R^det
///   trace-contains-maximal-ideal  m_G inside tr(omega), tested generator by generator
struct Verdict {
    bool value = false;
    std::string justification;
    Witness witness;
    std::vector<CrossCheck> checks;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// For each variable, the smallest 0 < u <= N with weight(X_j^u) = w, if any.
/// Absence certifies unsolvability since weights of X_j^u are N-periodic in u.
PurePowers pure_power_exponents(const GroupPresentation& g, const Weight& w);

/// Whether R^X is locally free on the graded punctured spectrum.
Verdict locally_free_on_punctured(const GroupPresentation& g, const Weight& w, const Limits& limits = {});

/// Whether every R^X is locally free on the graded punctured spectrum.
Verdict all_weights_locally_free(const GroupPresentation& g, const Limits& limits = {});

Verdict is_gorenstein(const GroupPresentation& g, const Limits& limits = {});
Verdict gorenstein_on_punctured(const GroupPresentation& g, const Limits& limits = {});
Verdict nearly_gorenstein(const GroupPresentation& g, const Limits& limits = {});

/// Exact primariness test: every variable has a pure power among the trace
/// generators. Returns the first variable without one.
std::optional<std::size_t> first_non_primary_variable(const MonomialModule& ideal);

}  // namespace semitrace
