#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semitrace/limits.hpp"

namespace semitrace {

/// One diagonal generator diag(xi^t_1, ..., xi^t_d) with xi a primitive
/// order-th root of unity.
struct Generator {
    std::int64_t order = 1;
    std::vector<std::int64_t> exponents;

    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// A finite abelian group acting diagonally on K[X_1..X_d], normalized so that
/// 0 <= t_ij < n_i and gcd(t_i1, ..., t_id, n_i) = 1 for every generator.
/// An empty generator list is the trivial group.
struct GroupPresentation {
    int dimension = 2;
    std::vector<Generator> generators;
    std::int64_t lcm_order = 1;      // N, the exponent of the ambient root-of-unity group
    std::int64_t product_order = 1;  // n = prod n_i
    bool reduced_to_trivial = false; // raw input had generators but all normalized away

    std::size_t rank() const noexcept { return generators.size(); }
    bool trivial() const noexcept { return generators.empty(); }

    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Character of G as residues s_i with chi(sigma_i) = xi_i^{s_i}, 0 <= s_i < n_i.
struct Weight {
    std::vector<std::int64_t> residues;

    bool is_trivial() const noexcept;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// A group element sigma_1^{a_1} ... sigma_l^{a_l}. diag holds the exponents
/// of a fixed primitive N-th root omega, with xi_i = omega^{N / n_i}.
struct GroupElement {
    std::vector<std::int64_t> powers;
    std::vector<std::int64_t> diag;

    bool is_identity() const noexcept;
    /// Number of diagonal entries equal to 1.
    std::size_t fixed_coordinates() const noexcept;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct ElementList {
    std::vector<GroupElement> elements;  // sorted by diag, identity first
    std::int64_t order = 1;
};

struct Hypotheses {
    bool orders_pairwise_coprime = true;
    bool pseudo_reflection_free = true;

    bool hold() const noexcept { return orders_pairwise_coprime && pseudo_reflection_free; }

    friend bool operator==(const Hypotheses&, const Hypotheses&) = default;
};

GroupPresentation normalize(int dimension, std::span<const Generator> raw);

/// Throws DimensionMismatch / InvalidArgument if g is not in normal form.
void check_normalized(const GroupPresentation& g);

Weight zero_weight(const GroupPresentation& g);
Weight det_weight(const GroupPresentation& g);
Weight inverse_weight(const GroupPresentation& g, const Weight& w);
Weight add_weights(const GroupPresentation& g, const Weight& a, const Weight& b);
/// Reduces arbitrary integers into a weight; DimensionMismatch on length.
Weight make_weight(const GroupPresentation& g, std::span<const std::int64_t> residues);

/// Every character as a residue tuple in lexicographic order; prod n_i of them.
std::vector<Weight> all_weights(const GroupPresentation& g, const Limits& limits = {});

/// gcd test over (d-1)-subsets of row i (0-based).
bool cyclic_has_pseudo_reflection(const GroupPresentation& g, std::size_t i);

ElementList enumerate_elements(const GroupPresentation& g, const Limits& limits = {});
bool has_pseudo_reflection(const GroupPresentation& g, const Limits& limits = {});
bool orders_pairwise_coprime(const GroupPresentation& g);
Hypotheses hypotheses_check(const GroupPresentation& g, const Limits& limits = {});

std::string to_string(const GroupPresentation& g);
std::string to_string(const Weight& w);

}  // namespace semitrace
