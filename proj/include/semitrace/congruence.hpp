#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace semitrace {

struct ExtGcd {
    std::int64_t g;
    std::int64_t x;
    std::int64_t y;

    friend bool operator==(const ExtGcd&, const ExtGcd&) = default;
};

/// Bezout coefficients: a*x + b*y == g with g = gcd(|a|, |b|) >= 0.
ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

/// Nonnegative gcd of a list; gcd of the empty list is 0.
std::int64_t gcd_of(std::span<const std::int64_t> values);

/// Least nonnegative residue of a modulo m (m >= 1).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

/// u in [1, m] with a*u == 1 (mod m). Throws NotCoprime when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Smallest positive c with c == residues[i] (mod moduli[i]) for every i.
/// The result lies in [1, prod(moduli)]; the empty system yields 1.
/// Throws NotPairwiseCoprime, InvalidArgument (modulus < 1) or InputTooLarge
/// when the product of the moduli does not fit in 64 bits.
std::int64_t crt(std::span<const std::int64_t> residues, std::span<const std::int64_t> moduli);

/// A system  sum_j coefficients[i][j] * x_j == rhs[i]  (mod moduli[i]),  i < m.
struct CongruenceSystem {
    std::vector<std::vector<std::int64_t>> coefficients;
    std::vector<std::int64_t> rhs;
    std::vector<std::int64_t> moduli;

    std::size_t rows() const noexcept { return coefficients.size(); }
    std::size_t cols() const noexcept { return coefficients.empty() ? 0 : coefficients.front().size(); }

    /// Shape and sign checks only (DimensionMismatch / InvalidArgument).
    void validate() const;
    /// Exact check that x satisfies every row.
    bool satisfied_by(std::span<const std::int64_t> x) const;
};

/// Positive integer solution of a congruence system whose moduli are
/// pairwise coprime and whose rows each have gcd(a_i1, ..., a_in, p_i) = 1.
///
/// Solves by induction on the number of unknowns: the last unknown is fixed
/// first from the single-variable system modulo g_i = gcd(a_i1..a_i,n-1, p_i),
/// then it is substituted, each row is divided by g_i and the remaining
/// n-1 unknowns are solved recursively. Rows whose modulus collapses to 1 are
/// dropped. Every single-variable step takes the smallest positive CRT value,
/// so the output is a deterministic function of the input.
///
/// Right-hand sides may be any integers; they are reduced first.
/// Throws HypothesisViolation if either precondition fails, and
/// InputTooLarge if the product of the moduli overflows 64 bits.
std::vector<std::int64_t> solve_positive_system(const CongruenceSystem& sys);

}  // namespace semitrace
