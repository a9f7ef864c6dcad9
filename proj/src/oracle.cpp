#include "semitrace/oracle.hpp"

#include <algorithm>
#include <set>

#include "semitrace/error.hpp"

namespace semitrace::oracle {

namespace {

void collect(const GroupPresentation& g, const Weight& w, std::int64_t budget, std::size_t j, ExponentVector& u,
             std::vector<ExponentVector>& out) {
    if (j == u.size()) {
        if (weight_of(g, u) == w) out.push_back(u);
        return;
    }
    for (std::int64_t e = 0; e <= budget; ++e) {
        u[j] = e;
        collect(g, w, budget - e, j + 1, u, out);
    }
    u[j] = 0;
}

}  // namespace

std::vector<ExponentVector> enumerate_by_weight(const GroupPresentation& g, const Weight& w, std::int64_t max_degree,
                                                const Limits& limits) {
    if (max_degree < 0) throw Error(Errc::invalid_argument, "degree bound must be >= 0");
    __int128 points = 1;
    for (int j = 0; j < g.dimension; ++j) {
        points *= max_degree + 1;
        if (points > limits.max_box) throw Error(Errc::bound_too_large, "degree box exceeds limit");
    }
    std::vector<ExponentVector> out;
    ExponentVector u(static_cast<std::size_t>(g.dimension), 0);
    collect(g, w, max_degree, 0, u, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ExponentVector> brute_minimal_generators(const GroupPresentation& g, const Weight& w,
                                                     std::int64_t max_degree, const Limits& limits) {
    auto members = enumerate_by_weight(g, w, max_degree, limits);
    auto invariants = enumerate_by_weight(g, zero_weight(g), max_degree, limits);
    const auto is_origin = [](const ExponentVector& u) {
        return std::all_of(u.begin(), u.end(), [](std::int64_t e) { return e == 0; });
    };
    std::erase_if(invariants, is_origin);
    if (w.is_trivial()) std::erase_if(members, is_origin);

    const std::set<ExponentVector> member_set(members.begin(), members.end());
    std::vector<ExponentVector> out;
    ExponentVector diff(static_cast<std::size_t>(g.dimension));
    for (const auto& m : members) {
        bool reducible = false;
        for (const auto& inv : invariants) {
            bool nonnegative = true;
            for (std::size_t j = 0; j < m.size() && nonnegative; ++j) {
                diff[j] = m[j] - inv[j];
                nonnegative = diff[j] >= 0;
            }
            if (nonnegative && member_set.count(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.push_back(m);
    }
    return out;
}

bool combination_check(const GroupPresentation& g, const std::vector<ExponentVector>& targets,
                       const std::vector<ExponentVector>& basis, const Limits& limits) {
    const auto d = static_cast<std::size_t>(g.dimension);
    if (targets.empty()) return true;
    ExponentVector top(d, 0);
    for (const auto& t : targets) {
        if (t.size() != d) throw Error(Errc::dimension_mismatch, "target length differs from dimension");
        for (std::size_t j = 0; j < d; ++j) {
            if (t[j] < 0) return false;
            top[j] = std::max(top[j], t[j]);
        }
    }
    std::vector<std::int64_t> stride(d, 1);
    __int128 size = 1;
    for (std::size_t j = d; j-- > 0;) {
        stride[j] = static_cast<std::int64_t>(size);
        size *= top[j] + 1;
        if (size > limits.max_box) throw Error(Errc::bound_too_large, "combination box exceeds limit");
    }

    // Row-major index order is compatible with subtraction of a nonzero
    // nonnegative vector, so each cell depends only on earlier cells.
    std::vector<char> reachable(static_cast<std::size_t>(size), 0);
    reachable[0] = 1;
    ExponentVector x(d, 0);
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(size); ++idx) {
        std::int64_t rest = idx;
        for (std::size_t j = 0; j < d; ++j) {
            x[j] = rest / stride[j];
            rest %= stride[j];
        }
        if (idx == 0) continue;
        for (const auto& b : basis) {
            bool fits = std::any_of(b.begin(), b.end(), [](std::int64_t e) { return e != 0; });
            std::int64_t from = idx;
            for (std::size_t j = 0; j < d && fits; ++j) {
                fits = b[j] >= 0 && b[j] <= x[j];
                from -= b[j] * stride[j];
            }
            if (fits && reachable[static_cast<std::size_t>(from)]) {
                reachable[static_cast<std::size_t>(idx)] = 1;
                break;
            }
        }
    }
    return std::all_of(targets.begin(), targets.end(), [&](const ExponentVector& t) {
        std::int64_t idx = 0;
        for (std::size_t j = 0; j < d; ++j) idx += t[j] * stride[j];
        return reachable[static_cast<std::size_t>(idx)] != 0;
    });
}

}  // namespace semitrace::oracle
