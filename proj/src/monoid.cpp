#include "semitrace/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "semitrace/congruence.hpp"
#include "semitrace/error.hpp"

namespace semitrace {

namespace {

bool dominates(const ExponentVector& big, const ExponentVector& small) {
    for (std::size_t j = 0; j < big.size(); ++j) {
        if (big[j] < small[j]) return false;
    }
    return true;
}

std::int64_t degree(const ExponentVector& u) {
    return std::accumulate(u.begin(), u.end(), std::int64_t{0});
}

void check_box(const GroupPresentation& g, std::int64_t side, const Limits& limits) {
    __int128 points = 1;
    for (int j = 0; j < g.dimension; ++j) {
        points *= side;
        if (points > limits.max_box) {
            throw Error(Errc::box_too_large, "enumeration box " + std::to_string(side) + "^" +
                                                 std::to_string(g.dimension) + " exceeds limit " +
                                                 std::to_string(limits.max_box));
        }
    }
}

// Points of [0, bound]^d whose weight is `target`, walked with an odometer
// that updates the running weight incrementally.
std::vector<ExponentVector> box_points_of_weight(const GroupPresentation& g, const Weight& target,
                                                 std::int64_t bound, bool skip_origin, const Limits& limits) {
    check_box(g, bound + 1, limits);
    const auto d = static_cast<std::size_t>(g.dimension);
    const std::size_t rank = g.rank();

    // column[j][i] = t_ij, the weight of X_j.
    std::vector<std::vector<std::int64_t>> column(d, std::vector<std::int64_t>(rank));
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < d; ++j) column[j][i] = g.generators[i].exponents[j];
    }

    std::vector<ExponentVector> out;
    ExponentVector u(d, 0);
    std::vector<std::int64_t> running(rank, 0);
    while (true) {
        if (running == target.residues && !(skip_origin && degree(u) == 0)) out.push_back(u);
        std::size_t k = d;
        while (k-- > 0) {
            if (u[k] < bound) {
                ++u[k];
                for (std::size_t i = 0; i < rank; ++i) {
                    running[i] = (running[i] + column[k][i]) % g.generators[i].order;
                }
                break;
            }
            for (std::size_t i = 0; i < rank; ++i) {
                const std::int64_t n = g.generators[i].order;
                running[i] = mod_floor(running[i] - (bound % n) * column[k][i] % n, n);
            }
            u[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

ModuleKind classify(const Weight& w, const std::vector<ExponentVector>& gens) {
    for (const auto& u : gens) {
        if (std::any_of(u.begin(), u.end(), [](std::int64_t e) { return e < 0; })) return ModuleKind::colon;
    }
    return w.is_trivial() ? ModuleKind::ideal_of_invariants : ModuleKind::semi_invariant;
}

void check_length(const GroupPresentation& g, std::span<const std::int64_t> u) {
    if (u.size() != static_cast<std::size_t>(g.dimension)) {
        throw Error(Errc::dimension_mismatch, "exponent vector has " + std::to_string(u.size()) +
                                                  " entries, dimension is " + std::to_string(g.dimension));
    }
}

}  // namespace

bool MonomialModule::is_unit() const noexcept {
    return gens.size() == 1 && std::all_of(gens[0].begin(), gens[0].end(), [](std::int64_t e) { return e == 0; });
}

Weight weight_of(const GroupPresentation& g, std::span<const std::int64_t> u) {
    check_length(g, u);
    Weight w = zero_weight(g);
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const auto& gen = g.generators[i];
        __int128 s = 0;
        for (std::size_t j = 0; j < u.size(); ++j) {
            s = (s + static_cast<__int128>(mod_floor(u[j], gen.order)) * gen.exponents[j]) % gen.order;
        }
        w.residues[i] = static_cast<std::int64_t>(s);
    }
    return w;
}

std::vector<Weight> realizable_weights(const GroupPresentation& g, const Limits& limits) {
    if (g.product_order > limits.max_weights) {
        throw Error(Errc::bound_too_large, "group has " + std::to_string(g.product_order) + " characters, limit is " +
                                               std::to_string(limits.max_weights));
    }
    const auto d = static_cast<std::size_t>(g.dimension);
    std::vector<Weight> steps;
    for (std::size_t j = 0; j < d; ++j) {
        ExponentVector e(d, 0);
        e[j] = 1;
        steps.push_back(weight_of(g, e));
    }
    std::set<Weight> seen{zero_weight(g)};
    std::vector<Weight> frontier{zero_weight(g)};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier) {
            for (const auto& s : steps) {
                auto sum = add_weights(g, w, s);
                if (seen.insert(sum).second) next.push_back(std::move(sum));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool is_nonzero(const GroupPresentation& g, const Weight& w, const Limits& limits) {
    if (w.residues.size() != g.rank()) throw Error(Errc::dimension_mismatch, "weight length differs from group rank");
    const auto all = realizable_weights(g, limits);
    return std::binary_search(all.begin(), all.end(), w);
}

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> vectors) {
    std::sort(vectors.begin(), vectors.end(), [](const ExponentVector& a, const ExponentVector& b) {
        const auto da = degree(a), db = degree(b);
        return da != db ? da < db : a < b;
    });
    vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
    std::vector<ExponentVector> kept;
    for (auto& v : vectors) {
        const bool covered = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& k) { return dominates(v, k); });
        if (!covered) kept.push_back(std::move(v));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

MonomialModule invariant_hilbert_basis(const GroupPresentation& g, const Limits& limits) {
    const Weight zero = zero_weight(g);
    auto points = box_points_of_weight(g, zero, g.lcm_order, /*skip_origin=*/true, limits);
    return MonomialModule{zero, minimalize(std::move(points)), ModuleKind::ideal_of_invariants};
}

MonomialModule semi_invariant_generators(const GroupPresentation& g, const Weight& w, const Limits& limits) {
    if (w.residues.size() != g.rank()) throw Error(Errc::dimension_mismatch, "weight length differs from group rank");
    auto points = box_points_of_weight(g, w, g.lcm_order - 1, /*skip_origin=*/false, limits);
    auto gens = minimalize(std::move(points));
    const ModuleKind kind = w.is_trivial() ? ModuleKind::ideal_of_invariants : ModuleKind::semi_invariant;
    return MonomialModule{w, std::move(gens), kind};
}

bool module_membership(const GroupPresentation& g, const MonomialModule& m, std::span<const std::int64_t> u) {
    check_length(g, u);
    ExponentVector diff(u.size());
    for (const auto& gen : m.gens) {
        check_length(g, gen);
        bool nonnegative = true;
        for (std::size_t j = 0; j < u.size() && nonnegative; ++j) {
            diff[j] = u[j] - gen[j];
            nonnegative = diff[j] >= 0;
        }
        if (nonnegative && weight_of(g, diff).is_trivial()) return true;
    }
    return false;
}

MonomialModule module_product(const GroupPresentation& g, const MonomialModule& a, const MonomialModule& b) {
    const Weight w = add_weights(g, a.weight, b.weight);
    std::vector<ExponentVector> sums;
    sums.reserve(a.gens.size() * b.gens.size());
    for (const auto& x : a.gens) {
        check_length(g, x);
        for (const auto& y : b.gens) {
            check_length(g, y);
            ExponentVector s(x.size());
            for (std::size_t j = 0; j < s.size(); ++j) s[j] = x[j] + y[j];
            sums.push_back(std::move(s));
        }
    }
    auto gens = minimalize(std::move(sums));
    const ModuleKind kind = classify(w, gens);
    return MonomialModule{w, std::move(gens), kind};
}

ExponentVector module_gcd(const MonomialModule& m) {
    if (m.gens.empty()) throw Error(Errc::empty_module, "gcd of the zero module");
    ExponentVector g = m.gens.front();
    for (const auto& u : m.gens) {
        for (std::size_t j = 0; j < g.size(); ++j) g[j] = std::min(g[j], u[j]);
    }
    return g;
}

bool gcd_is_one(const MonomialModule& m) {
    const auto g = module_gcd(m);
    return std::all_of(g.begin(), g.end(), [](std::int64_t e) { return e == 0; });
}

MonomialModule colon_generators(const GroupPresentation& g, const Weight& w, const Limits& limits) {
    const auto module = semi_invariant_generators(g, w, limits);
    if (module.empty()) throw Error(Errc::empty_module, "R^X = 0 for weight " + to_string(w));
    const ExponentVector shift = module_gcd(module);
    const Weight target = add_weights(g, inverse_weight(g, w), weight_of(g, shift));
    auto shifted = semi_invariant_generators(g, target, limits);
    for (auto& v : shifted.gens) {
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= shift[j];
    }
    std::sort(shifted.gens.begin(), shifted.gens.end());
    return MonomialModule{inverse_weight(g, w), std::move(shifted.gens), ModuleKind::colon};
}

bool is_canonical(const MonomialModule& m) {
    if (!std::is_sorted(m.gens.begin(), m.gens.end())) return false;
    for (std::size_t a = 0; a < m.gens.size(); ++a) {
        for (std::size_t b = 0; b < m.gens.size(); ++b) {
            if (a != b && dominates(m.gens[a], m.gens[b])) return false;
        }
    }
    return true;
}

std::string render_monomial(std::span<const std::int64_t> u) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'X' << (j + 1);
        if (u[j] != 1) os << '^' << u[j];
    }
    return first ? std::string("1") : os.str();
}

std::string_view kind_name(ModuleKind kind) noexcept {
    switch (kind) {
        case ModuleKind::semi_invariant: return "semi_invariant";
        case ModuleKind::ideal_of_invariants: return "ideal_of_invariants";
        case ModuleKind::colon: return "colon";
    }
    return "unknown";
}

}  // namespace semitrace
