#pragma once

#include <cstdint>
#include <vector>

#include "semitrace/group.hpp"
#include "semitrace/monoid.hpp"

// Brute-force reference implementations. Nothing here touches the box
// enumeration or minimalization of the engine; only weight_of is shared.
namespace semitrace::oracle {

/// All exponent vectors of total degree <= max_degree with weight w, sorted.
std::vector<ExponentVector> enumerate_by_weight(const GroupPresentation& g, const Weight& w, std::int64_t max_degree,
                                                const Limits& limits = {});

/// Generators by definition: m (of weight w, degree <= D) is kept iff no
/// nonzero invariant g of degree <= D has m - g back in the weight-w set.
/// For the trivial weight the origin is excluded, so the result is the
/// generating set of m_G rather than of R^G.
///
/// Minimal generators have degree below the Davenport constant of the
/// character group, which is at most |G|; D >= |G| makes the result exact.
std::vector<ExponentVector> brute_minimal_generators(const GroupPresentation& g, const Weight& w,
                                                     std::int64_t max_degree, const Limits& limits = {});

/// Whether every target is a nonnegative integer combination of `basis`,
/// by dynamic programming over the box [0, max target]^d.
bool combination_check(const GroupPresentation& g, const std::vector<ExponentVector>& targets,
                       const std::vector<ExponentVector>& basis, const Limits& limits = {});

}  // namespace semitrace::oracle
