#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semitrace/group.hpp"
#include "semitrace/limits.hpp"

namespace semitrace {

/// Exponents of a monomial X^e. Entries are nonnegative for elements of R and
/// may be negative for the fractional monomials that generate colon modules.
using ExponentVector = std::vector<std::int64_t>;

enum class ModuleKind { semi_invariant, ideal_of_invariants, colon };

/// A monomial R^G-module given by its minimal generators. All generators share
/// `weight`; `gens` is a lexicographically sorted antichain for the
/// componentwise order, which for a single weight class coincides with
/// divisibility by invariant monomials.
struct MonomialModule {
    Weight weight;
    std::vector<ExponentVector> gens;
    ModuleKind kind = ModuleKind::semi_invariant;

    bool empty() const noexcept { return gens.empty(); }
    /// True iff the module is all of R^G (its only generator is 1).
    bool is_unit() const noexcept;

    friend bool operator==(const MonomialModule&, const MonomialModule&) = default;
};

Weight weight_of(const GroupPresentation& g, std::span<const std::int64_t> u);

/// Characters with R^X != 0. These form the subgroup generated by the weights
/// of X_1, ..., X_d, found by closure over at most prod n_i residue tuples.
std::vector<Weight> realizable_weights(const GroupPresentation& g, const Limits& limits = {});

bool is_nonzero(const GroupPresentation& g, const Weight& w, const Limits& limits = {});

/// Minimal monomial generators of the graded maximal ideal of R^G, i.e. the
/// Hilbert basis of the invariant exponent semigroup. Each lies in [0, N]^d
/// because N e_j is invariant.
MonomialModule invariant_hilbert_basis(const GroupPresentation& g, const Limits& limits = {});

/// Minimal monomial generators of R^X over R^G. Each lies in [0, N)^d.
/// Empty when R^X = 0; {0} when w is trivial.
MonomialModule semi_invariant_generators(const GroupPresentation& g, const Weight& w, const Limits& limits = {});

/// Whether X^u lies in the R^G-module generated by m.gens.
bool module_membership(const GroupPresentation& g, const MonomialModule& m, std::span<const std::int64_t> u);

MonomialModule module_product(const GroupPresentation& g, const MonomialModule& a, const MonomialModule& b);

/// Componentwise minimum of the generators, the exponent of gcd(M).
ExponentVector module_gcd(const MonomialModule& m);
bool gcd_is_one(const MonomialModule& m);

/// Minimal Laurent generators of R^G :_{S^{-1}R} R^X with S = R^G \ {0}.
///
/// The colon is spanned by Laurent monomials: R^G and R^X are spanned by
/// monomials, every element of S^{-1}R is a Laurent polynomial whose
/// denominator divides a power of X_1^N ... X_d^N, and distinct monomials are
/// linearly independent, so alpha maps R^X into R^G iff each of its terms
/// does. A Laurent monomial X^v qualifies iff weight(v) is the inverse of w
/// and v + u >= 0 for every generator u, i.e. v >= -gcd(R^X). Shifting by
/// g = gcd(R^X) identifies the colon with X^{-g} R^{w^{-1} + weight(g)}.
MonomialModule colon_generators(const GroupPresentation& g, const Weight& w, const Limits& limits = {});

/// Sorted componentwise-minimal elements of a list of same-weight vectors.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> vectors);

/// Antichain + sortedness check used by tests and report assertions.
bool is_canonical(const MonomialModule& m);

/// "X1^2*X3", "X2^-1", "1".
std::string render_monomial(std::span<const std::int64_t> u);

std::string_view kind_name(ModuleKind kind) noexcept;

}  // namespace semitrace
