#include "semitrace/group.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "semitrace/congruence.hpp"
#include "semitrace/error.hpp"

namespace semitrace {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::input_too_large, what);
    return r;
}

// Advances a mixed-radix counter (last digit fastest); false once it wraps.
bool next_tuple(std::vector<std::int64_t>& digits, const std::vector<std::int64_t>& radix) {
    for (std::size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < radix[k]) return true;
        digits[k] = 0;
    }
    return false;
}

std::vector<std::int64_t> orders_of(const GroupPresentation& g) {
    std::vector<std::int64_t> r;
    r.reserve(g.rank());
    for (const auto& gen : g.generators) r.push_back(gen.order);
    return r;
}

}  // namespace

bool Weight::is_trivial() const noexcept {
    return std::all_of(residues.begin(), residues.end(), [](std::int64_t s) { return s == 0; });
}

bool GroupElement::is_identity() const noexcept {
    return std::all_of(diag.begin(), diag.end(), [](std::int64_t e) { return e == 0; });
}

std::size_t GroupElement::fixed_coordinates() const noexcept {
    return static_cast<std::size_t>(std::count(diag.begin(), diag.end(), 0));
}

GroupPresentation normalize(int dimension, std::span<const Generator> raw) {
    if (dimension < 2) throw Error(Errc::invalid_dimension, "dimension must be >= 2, got " + std::to_string(dimension));
    GroupPresentation out;
    out.dimension = dimension;
    for (const auto& gen : raw) {
        if (gen.order <= 0) throw Error(Errc::invalid_order, "generator order must be >= 1, got " + std::to_string(gen.order));
        if (gen.exponents.size() != static_cast<std::size_t>(dimension)) {
            throw Error(Errc::dimension_mismatch, "generator has " + std::to_string(gen.exponents.size()) +
                                                      " exponents, dimension is " + std::to_string(dimension));
        }
        Generator g{gen.order, gen.exponents};
        for (auto& t : g.exponents) t = mod_floor(t, g.order);
        const std::int64_t common = std::gcd(gcd_of(g.exponents), g.order);
        if (common > 1) {
            g.order /= common;
            for (auto& t : g.exponents) t /= common;
        }
        if (g.order > 1) out.generators.push_back(std::move(g));
    }
    out.reduced_to_trivial = out.generators.empty() && !raw.empty();
    for (const auto& gen : out.generators) {
        out.lcm_order = checked_mul(out.lcm_order / std::gcd(out.lcm_order, gen.order), gen.order, "lcm of orders overflows");
        out.product_order = checked_mul(out.product_order, gen.order, "product of orders overflows");
    }
    return out;
}

void check_normalized(const GroupPresentation& g) {
    if (g.dimension < 2) throw Error(Errc::invalid_dimension, "dimension must be >= 2");
    for (const auto& gen : g.generators) {
        if (gen.order < 2) throw Error(Errc::invalid_argument, "normalized generators have order >= 2");
        if (gen.exponents.size() != static_cast<std::size_t>(g.dimension)) {
            throw Error(Errc::dimension_mismatch, "generator length differs from dimension");
        }
        for (auto t : gen.exponents) {
            if (t < 0 || t >= gen.order) throw Error(Errc::invalid_argument, "exponent outside [0, order)");
        }
        if (std::gcd(gcd_of(gen.exponents), gen.order) != 1) {
            throw Error(Errc::invalid_argument, "generator row is not primitive");
        }
    }
}

Weight zero_weight(const GroupPresentation& g) {
    return Weight{std::vector<std::int64_t>(g.rank(), 0)};
}

Weight det_weight(const GroupPresentation& g) {
    Weight w = zero_weight(g);
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const auto& gen = g.generators[i];
        std::int64_t s = 0;
        for (auto t : gen.exponents) s = (s + t) % gen.order;
        w.residues[i] = s;
    }
    return w;
}

Weight inverse_weight(const GroupPresentation& g, const Weight& w) {
    if (w.residues.size() != g.rank()) throw Error(Errc::dimension_mismatch, "weight length differs from group rank");
    Weight inv = w;
    for (std::size_t i = 0; i < g.rank(); ++i) inv.residues[i] = mod_floor(-w.residues[i], g.generators[i].order);
    return inv;
}

Weight add_weights(const GroupPresentation& g, const Weight& a, const Weight& b) {
    if (a.residues.size() != g.rank() || b.residues.size() != g.rank()) {
        throw Error(Errc::dimension_mismatch, "weight length differs from group rank");
    }
    Weight sum = a;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        sum.residues[i] = (a.residues[i] + b.residues[i]) % g.generators[i].order;
    }
    return sum;
}

Weight make_weight(const GroupPresentation& g, std::span<const std::int64_t> residues) {
    if (residues.size() != g.rank()) {
        throw Error(Errc::dimension_mismatch, "weight has " + std::to_string(residues.size()) + " entries, group rank is " +
                                                  std::to_string(g.rank()));
    }
    Weight w;
    w.residues.reserve(residues.size());
    for (std::size_t i = 0; i < residues.size(); ++i) w.residues.push_back(mod_floor(residues[i], g.generators[i].order));
    return w;
}

std::vector<Weight> all_weights(const GroupPresentation& g, const Limits& limits) {
    if (g.product_order > limits.max_weights) {
        throw Error(Errc::bound_too_large, "group has " + std::to_string(g.product_order) + " characters, limit is " +
                                               std::to_string(limits.max_weights));
    }
    const auto radix = orders_of(g);
    std::vector<Weight> out;
    out.reserve(static_cast<std::size_t>(g.product_order));
    std::vector<std::int64_t> digits(g.rank(), 0);
    do {
        out.push_back(Weight{digits});
    } while (next_tuple(digits, radix));
    return out;
}

bool cyclic_has_pseudo_reflection(const GroupPresentation& g, std::size_t i) {
    if (i >= g.rank()) {
        throw Error(Errc::index_out_of_range, "generator index " + std::to_string(i) + " out of range (rank " +
                                                  std::to_string(g.rank()) + ")");
    }
    const auto& gen = g.generators[i];
    for (std::size_t skip = 0; skip < gen.exponents.size(); ++skip) {
        std::int64_t common = gen.order;
        for (std::size_t j = 0; j < gen.exponents.size(); ++j) {
            if (j != skip) common = std::gcd(common, gen.exponents[j]);
        }
        if (common != 1) return true;
    }
    return false;
}

ElementList enumerate_elements(const GroupPresentation& g, const Limits& limits) {
    if (g.product_order > limits.max_group_elements) {
        throw Error(Errc::group_too_large, "group has " + std::to_string(g.product_order) +
                                               " power tuples, limit is " + std::to_string(limits.max_group_elements));
    }
    const auto d = static_cast<std::size_t>(g.dimension);
    const std::int64_t big_n = g.lcm_order;
    std::vector<std::int64_t> scale;
    for (const auto& gen : g.generators) scale.push_back(big_n / gen.order);

    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> by_diag;
    const auto radix = orders_of(g);
    std::vector<std::int64_t> powers(g.rank(), 0);
    do {
        std::vector<std::int64_t> diag(d, 0);
        for (std::size_t i = 0; i < g.rank(); ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const auto term = static_cast<__int128>(powers[i]) * g.generators[i].exponents[j] * scale[i];
                diag[j] = static_cast<std::int64_t>((diag[j] + term % big_n) % big_n);
            }
        }
        by_diag.try_emplace(std::move(diag), powers);
    } while (next_tuple(powers, radix));

    ElementList out;
    out.elements.reserve(by_diag.size());
    for (auto& [diag, pw] : by_diag) out.elements.push_back(GroupElement{pw, diag});
    out.order = static_cast<std::int64_t>(out.elements.size());
    return out;
}

bool has_pseudo_reflection(const GroupPresentation& g, const Limits& limits) {
    const auto list = enumerate_elements(g, limits);
    const auto hyperplane = static_cast<std::size_t>(g.dimension - 1);
    return std::any_of(list.elements.begin(), list.elements.end(),
                       [&](const GroupElement& e) { return e.fixed_coordinates() == hyperplane; });
}

bool orders_pairwise_coprime(const GroupPresentation& g) {
    for (std::size_t i = 0; i < g.rank(); ++i) {
        for (std::size_t k = i + 1; k < g.rank(); ++k) {
            if (std::gcd(g.generators[i].order, g.generators[k].order) != 1) return false;
        }
    }
    return true;
}

Hypotheses hypotheses_check(const GroupPresentation& g, const Limits& limits) {
    return Hypotheses{orders_pairwise_coprime(g), !has_pseudo_reflection(g, limits)};
}

std::string to_string(const GroupPresentation& g) {
    std::ostringstream os;
    os << "d=" << g.dimension << " <";
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i) os << ", ";
        os << '(' << g.generators[i].order << ';';
        for (std::size_t j = 0; j < g.generators[i].exponents.size(); ++j) {
            os << (j ? "," : "") << g.generators[i].exponents[j];
        }
        os << ')';
    }
    os << '>';
    return os.str();
}

std::string to_string(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.residues.size(); ++i) os << (i ? "," : "") << w.residues[i];
    os << ')';
    return os.str();
}

}  // namespace semitrace
