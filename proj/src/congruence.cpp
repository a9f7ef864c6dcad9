#include "semitrace/congruence.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "semitrace/error.hpp"

namespace semitrace {

namespace {

using i128 = __int128;

constexpr i128 kInt64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t narrow(i128 v, const char* what) {
    if (v > kInt64Max || v < -kInt64Max) throw Error(Errc::input_too_large, what);
    return static_cast<std::int64_t>(v);
}

i128 mod_floor128(i128 a, i128 m) {
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

struct Row {
    std::vector<std::int64_t> a;
    std::int64_t b;
    std::int64_t p;
};

// Single unknown: a_i x == b_i (mod p_i) with gcd(a_i, p_i) = 1 on every row.
std::int64_t solve_one_unknown(const std::vector<Row>& rows) {
    std::vector<std::int64_t> residues;
    std::vector<std::int64_t> moduli;
    residues.reserve(rows.size());
    moduli.reserve(rows.size());
    for (const auto& row : rows) {
        const std::int64_t inv = mod_inverse(row.a[0], row.p);
        residues.push_back(static_cast<std::int64_t>(mod_floor128(static_cast<i128>(row.b) * inv, row.p)));
        moduli.push_back(row.p);
    }
    return crt(residues, moduli);
}

void solve_rows(std::vector<Row> rows, std::size_t unknowns, std::vector<std::int64_t>& out) {
    std::erase_if(rows, [](const Row& r) { return r.p == 1; });
    if (unknowns == 1) {
        out[0] = solve_one_unknown(rows);
        return;
    }
    const std::size_t last = unknowns - 1;

    // x_last modulo g_i = gcd(a_i1, ..., a_i,last-1, p_i).
    std::vector<Row> head;
    std::vector<std::int64_t> g(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::int64_t gi = rows[i].p;
        for (std::size_t j = 0; j < last; ++j) gi = std::gcd(gi, rows[i].a[j]);
        g[i] = gi;
        head.push_back(Row{{rows[i].a[last] % gi}, mod_floor(rows[i].b, gi), gi});
    }
    std::erase_if(head, [](const Row& r) { return r.p == 1; });
    const std::int64_t c_last = solve_one_unknown(head);
    out[last] = c_last;

    // Substitute, then divide each row by g_i.
    std::vector<Row> tail;
    tail.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const i128 rest = mod_floor128(static_cast<i128>(row.b) - static_cast<i128>(row.a[last] % row.p) * c_last, row.p);
        Row reduced{std::vector<std::int64_t>(last), static_cast<std::int64_t>(rest / g[i]), row.p / g[i]};
        for (std::size_t j = 0; j < last; ++j) reduced.a[j] = row.a[j] / g[i];
        tail.push_back(std::move(reduced));
    }
    solve_rows(std::move(tail), last, out);
}

}  // namespace

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) return {0, 0, 0};
    i128 old_r = a, r = b;
    i128 old_s = 1, s = 0;
    i128 old_t = 0, t = 1;
    while (r != 0) {
        const i128 q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {narrow(old_r, "gcd does not fit in 64 bits"), narrow(old_s, "Bezout coefficient overflow"),
            narrow(old_t, "Bezout coefficient overflow")};
}

std::int64_t gcd_of(std::span<const std::int64_t> values) {
    std::int64_t g = 0;
    for (auto v : values) g = std::gcd(g, v);
    return g;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 1) throw Error(Errc::invalid_argument, "modulus must be >= 1");
    const auto [g, x, y] = ext_gcd(mod_floor(a, m), m);
    if (g != 1) {
        throw Error(Errc::not_coprime, "gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") = " + std::to_string(g));
    }
    const std::int64_t u = mod_floor(x, m);
    return u == 0 ? m : u;
}

std::int64_t crt(std::span<const std::int64_t> residues, std::span<const std::int64_t> moduli) {
    if (residues.size() != moduli.size()) throw Error(Errc::dimension_mismatch, "crt: residues and moduli differ in length");
    for (auto m : moduli) {
        if (m < 1) throw Error(Errc::invalid_argument, "crt: modulus must be >= 1");
    }
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        for (std::size_t j = i + 1; j < moduli.size(); ++j) {
            if (std::gcd(moduli[i], moduli[j]) != 1) {
                throw Error(Errc::not_pairwise_coprime, "crt: moduli " + std::to_string(moduli[i]) + " and " +
                                                            std::to_string(moduli[j]) + " share a factor");
            }
        }
    }
    i128 c = 0;
    i128 big_m = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        const std::int64_t m = moduli[i];
        const std::int64_t r = mod_floor(residues[i], m);
        // c + big_m * k == r (mod m)
        const std::int64_t inv = mod_inverse(static_cast<std::int64_t>(big_m % m), m);
        const i128 k = mod_floor128((static_cast<i128>(r) - c) % m * inv, m);
        c += big_m * k;
        big_m *= m;
        if (big_m > kInt64Max) throw Error(Errc::input_too_large, "crt: product of moduli exceeds 64 bits");
    }
    return c == 0 ? static_cast<std::int64_t>(big_m) : static_cast<std::int64_t>(c);
}

void CongruenceSystem::validate() const {
    if (rhs.size() != coefficients.size() || moduli.size() != coefficients.size()) {
        throw Error(Errc::dimension_mismatch, "congruence system: row counts of matrix, rhs and moduli differ");
    }
    const std::size_t n = cols();
    for (const auto& row : coefficients) {
        if (row.size() != n) throw Error(Errc::dimension_mismatch, "congruence system: ragged coefficient matrix");
        for (auto a : row) {
            if (a < 0) throw Error(Errc::invalid_argument, "congruence system: coefficients must be nonnegative");
        }
    }
    for (auto p : moduli) {
        if (p < 1) throw Error(Errc::invalid_argument, "congruence system: moduli must be >= 1");
    }
}

bool CongruenceSystem::satisfied_by(std::span<const std::int64_t> x) const {
    for (std::size_t i = 0; i < rows(); ++i) {
        if (coefficients[i].size() != x.size()) return false;
        i128 lhs = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            lhs = mod_floor128(lhs + mod_floor128(coefficients[i][j], moduli[i]) * mod_floor128(x[j], moduli[i]), moduli[i]);
        }
        if (lhs != mod_floor128(rhs[i], moduli[i])) return false;
    }
    return true;
}

std::vector<std::int64_t> solve_positive_system(const CongruenceSystem& sys) {
    sys.validate();
    const std::size_t n = sys.cols();
    if (n == 0) throw Error(Errc::invalid_argument, "congruence system has no unknowns");

    i128 product = 1;
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        for (std::size_t k = i + 1; k < sys.rows(); ++k) {
            if (std::gcd(sys.moduli[i], sys.moduli[k]) != 1) {
                throw Error(Errc::hypothesis_violation, "moduli " + std::to_string(sys.moduli[i]) + " and " +
                                                            std::to_string(sys.moduli[k]) + " are not coprime");
            }
        }
        std::int64_t g = sys.moduli[i];
        for (auto a : sys.coefficients[i]) g = std::gcd(g, a);
        if (g != 1) {
            throw Error(Errc::hypothesis_violation, "row " + std::to_string(i) + " has gcd " + std::to_string(g) +
                                                        " with its modulus");
        }
        product *= sys.moduli[i];
        if (product > kInt64Max) throw Error(Errc::input_too_large, "product of moduli exceeds 64 bits");
    }

    std::vector<Row> rows;
    rows.reserve(sys.rows());
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        Row row{sys.coefficients[i], mod_floor(sys.rhs[i], sys.moduli[i]), sys.moduli[i]};
        for (auto& a : row.a) a %= row.p;
        rows.push_back(std::move(row));
    }
    std::vector<std::int64_t> x(n, 0);
    solve_rows(std::move(rows), n, x);
    if (!sys.satisfied_by(x)) throw Error(Errc::internal_inconsistency, "solver produced a non-solution");
    return x;
}

}  // namespace semitrace
