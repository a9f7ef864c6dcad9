#include "semitrace/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "semitrace/error.hpp"

namespace semitrace {

using nlohmann::json;

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

bool parse_yes_no(const json& j) {
    const auto s = j.get<std::string>();
    if (s == "yes") return true;
    if (s == "no") return false;
    throw Error(Errc::invalid_argument, "expected \"yes\" or \"no\", got \"" + s + "\"");
}

json pure_powers_to_json(const PurePowers& pp) {
    json out = json::array();
    for (const auto& u : pp) out.push_back(u ? json(*u) : json(nullptr));
    return out;
}

PurePowers pure_powers_from_json(const json& j) {
    PurePowers out;
    for (const auto& e : j) out.push_back(e.is_null() ? std::nullopt : std::optional<std::int64_t>(e.get<std::int64_t>()));
    return out;
}

TracePath parse_path(const std::string& s) {
    if (s == "product_formula") return TracePath::product_formula;
    if (s == "colon_formula") return TracePath::colon_formula;
    throw Error(Errc::invalid_argument, "unknown trace path \"" + s + "\"");
}

std::string monomial_list(const std::vector<ExponentVector>& gens) {
    if (gens.empty()) return "(zero module)";
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ", ";
        out += render_monomial(gens[i]);
    }
    return out;
}

std::string pure_power_text(const PurePowers& pp) {
    std::string out = "(";
    for (std::size_t j = 0; j < pp.size(); ++j) {
        if (j) out += ",";
        out += pp[j] ? std::to_string(*pp[j]) : std::string("-");
    }
    return out + ")";
}

std::string verdict_line(const std::string& label, const Verdict& v) {
    std::ostringstream os;
    os << "  " << std::left << std::setw(26) << label << std::setw(4) << yes_no(v.value) << v.justification;
    const auto& w = v.witness;
    if (!w.pure_powers.empty()) os << "  u=" << pure_power_text(w.pure_powers);
    if (!w.dual_pure_powers.empty()) os << " dual=" << pure_power_text(w.dual_pure_powers);
    if (w.generator) os << "  generator " << render_monomial(*w.generator);
    if (w.weight) os << "  weight " << to_string(*w.weight);
    if (w.variable) os << "  variable X" << (*w.variable + 1);
    for (const auto& c : v.checks) os << "  [" << c.route << "=" << yes_no(c.value) << (c.required ? "" : "?") << "]";
    return os.str();
}

std::vector<std::vector<std::size_t>> permutations(std::size_t d) {
    std::vector<std::size_t> p(d);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k < n; ++k) {
        if (std::gcd(k, n) == 1) out.push_back(k);
    }
    return out;
}

// Smallest rescaled exponent row of one generator under a fixed permutation.
std::vector<std::int64_t> best_row(const Generator& gen, const std::vector<std::size_t>& perm,
                                   const std::vector<std::int64_t>& units) {
    std::vector<std::int64_t> best;
    for (auto k : units) {
        std::vector<std::int64_t> row(perm.size());
        for (std::size_t j = 0; j < perm.size(); ++j) row[j] = gen.exponents[perm[j]] * k % gen.order;
        if (best.empty() || row < best) best = std::move(row);
    }
    return best;
}

}  // namespace

AnalysisReport analyze(const GroupPresentation& g, const AnalyzeOptions& options) {
    check_normalized(g);
    const auto& limits = options.limits;
    AnalysisReport r;
    r.group = g;
    r.order = enumerate_elements(g, limits).order;
    r.hypotheses = hypotheses_check(g, limits);
    r.det = det_weight(g);
    r.inverse_det = inverse_weight(g, r.det);

    if (options.include_weights) {
        const auto realizable = realizable_weights(g, limits);
        for (const auto& w : all_weights(g, limits)) {
            WeightSummary s;
            s.weight = w;
            s.nonzero = std::binary_search(realizable.begin(), realizable.end(), w);
            if (s.nonzero) {
                s.generator_count = semi_invariant_generators(g, w, limits).gens.size();
                s.locally_free = locally_free_on_punctured(g, w, limits);
            }
            r.weights.push_back(std::move(s));
        }
    }

    const auto trace = trace_ideal(g, r.inverse_det, PathChoice::automatic, limits);
    r.canonical_trace = CanonicalTrace{r.inverse_det, trace.path, trace.exact, trace.ideal.gens};

    r.gorenstein = is_gorenstein(g, limits);
    r.gorenstein_on_punctured = gorenstein_on_punctured(g, limits);
    r.nearly_gorenstein = nearly_gorenstein(g, limits);
    r.all_weights_locally_free = all_weights_locally_free(g, limits);

    if ((r.gorenstein.value && !r.nearly_gorenstein.value) ||
        (r.nearly_gorenstein.value && !r.gorenstein_on_punctured.value)) {
        throw Error(Errc::internal_inconsistency, "Gorenstein-family verdicts are not monotone for " + to_string(g));
    }
    return r;
}

GroupPresentation canonical_form(const GroupPresentation& g) {
    const auto d = static_cast<std::size_t>(g.dimension);
    std::vector<std::vector<std::int64_t>> units;
    for (const auto& gen : g.generators) units.push_back(units_mod(gen.order));

    std::optional<std::vector<Generator>> best;
    for (const auto& perm : permutations(d)) {
        std::vector<Generator> gens;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            gens.push_back(Generator{g.generators[i].order, best_row(g.generators[i], perm, units[i])});
        }
        std::sort(gens.begin(), gens.end());
        if (!best || gens < *best) best = std::move(gens);
    }
    GroupPresentation out = g;
    out.generators = std::move(*best);
    out.reduced_to_trivial = false;
    return out;
}

std::vector<GroupPresentation> sweep_groups(SweepFamily family, std::int64_t max_order, int dimension,
                                            const Limits& limits) {
    if (dimension < 2) throw Error(Errc::invalid_dimension, "dimension must be >= 2");
    if (max_order < 1) return {};

    // Raw presentations per order: all exponent rows in [0, n)^d.
    __int128 rows_total = 0;
    for (std::int64_t n = 1; n <= max_order; ++n) {
        __int128 count = 1;
        for (int j = 0; j < dimension; ++j) count *= n;
        rows_total += count;
        if (rows_total > limits.max_sweep_candidates) break;
    }
    const __int128 candidates = family == SweepFamily::cyclic ? rows_total : rows_total * rows_total;
    if (candidates > limits.max_sweep_candidates) {
        throw Error(Errc::bound_too_large, "sweep would generate more than " +
                                               std::to_string(limits.max_sweep_candidates) + " presentations");
    }

    std::vector<Generator> rows;
    for (std::int64_t n = 1; n <= max_order; ++n) {
        std::vector<std::int64_t> t(static_cast<std::size_t>(dimension), 0);
        while (true) {
            rows.push_back(Generator{n, t});
            std::size_t k = t.size();
            while (k-- > 0) {
                if (++t[k] < n) break;
                t[k] = 0;
            }
            if (k == static_cast<std::size_t>(-1)) break;
        }
    }

    const auto key_of = [](const GroupPresentation& g) {
        std::vector<std::int64_t> key{g.dimension};
        for (const auto& gen : g.generators) {
            key.push_back(gen.order);
            key.insert(key.end(), gen.exponents.begin(), gen.exponents.end());
        }
        return key;
    };
    std::set<std::vector<std::int64_t>> seen;
    std::vector<GroupPresentation> out;
    const auto offer = [&](std::span<const Generator> raw) {
        auto g = canonical_form(normalize(dimension, raw));
        if (seen.insert(key_of(g)).second) out.push_back(std::move(g));
    };

    if (family == SweepFamily::cyclic) {
        for (const auto& row : rows) offer(std::span<const Generator>(&row, 1));
    } else {
        for (std::size_t a = 0; a < rows.size(); ++a) {
            if (rows[a].order < 2) continue;
            for (std::size_t b = a; b < rows.size(); ++b) {
                if (rows[b].order < 2) continue;
                const Generator pair[2] = {rows[a], rows[b]};
                offer(pair);
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const GroupPresentation& x, const GroupPresentation& y) {
        return key_of(x) < key_of(y);
    });
    return out;
}

std::vector<SweepRow> sweep(SweepFamily family, std::int64_t max_order, int dimension, const Limits& limits,
                            unsigned threads) {
    const auto groups = sweep_groups(family, max_order, dimension, limits);
    std::vector<SweepRow> rows(groups.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, groups.size())));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto work = [&] {
        for (std::size_t i = next++; i < groups.size(); i = next++) {
            try {
                const auto& g = groups[i];
                rows[i] = SweepRow{g,
                                   enumerate_elements(g, limits).order,
                                   hypotheses_check(g, limits),
                                   is_gorenstein(g, limits),
                                   gorenstein_on_punctured(g, limits),
                                   nearly_gorenstein(g, limits),
                                   all_weights_locally_free(g, limits)};
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

GroupPresentation group_from_json(const json& j) {
    try {
        const int d = j.at("dimension").get<int>();
        std::vector<Generator> raw;
        for (const auto& gen : j.at("generators")) {
            raw.push_back(Generator{gen.at("order").get<std::int64_t>(), gen.at("exponents").get<std::vector<std::int64_t>>()});
        }
        return normalize(d, raw);
    } catch (const json::exception& e) {
        throw Error(Errc::invalid_argument, std::string("malformed group description: ") + e.what());
    }
}

json group_to_json(const GroupPresentation& g) {
    json gens = json::array();
    for (const auto& gen : g.generators) gens.push_back({{"order", gen.order}, {"exponents", gen.exponents}});
    return {{"dimension", g.dimension}, {"generators", gens}};
}

json to_json(const Verdict& v) {
    json witness = json::object();
    const auto& w = v.witness;
    if (!w.pure_powers.empty()) witness["pure_powers"] = pure_powers_to_json(w.pure_powers);
    if (!w.dual_pure_powers.empty()) witness["dual_pure_powers"] = pure_powers_to_json(w.dual_pure_powers);
    if (w.generator) witness["generator"] = *w.generator;
    if (w.weight) witness["weight"] = w.weight->residues;
    if (w.variable) witness["variable"] = *w.variable;
    json checks = json::array();
    for (const auto& c : v.checks) {
        checks.push_back({{"route", c.route}, {"value", yes_no(c.value)}, {"required", c.required}});
    }
    return {{"value", yes_no(v.value)}, {"justification", v.justification}, {"witness", witness}, {"checks", checks}};
}

Verdict verdict_from_json(const json& j) {
    Verdict v;
    v.value = parse_yes_no(j.at("value"));
    v.justification = j.at("justification").get<std::string>();
    const auto& w = j.at("witness");
    if (w.contains("pure_powers")) v.witness.pure_powers = pure_powers_from_json(w["pure_powers"]);
    if (w.contains("dual_pure_powers")) v.witness.dual_pure_powers = pure_powers_from_json(w["dual_pure_powers"]);
    if (w.contains("generator")) v.witness.generator = w["generator"].get<ExponentVector>();
    if (w.contains("weight")) v.witness.weight = Weight{w["weight"].get<std::vector<std::int64_t>>()};
    if (w.contains("variable")) v.witness.variable = w["variable"].get<std::size_t>();
    for (const auto& c : j.at("checks")) {
        v.checks.push_back(CrossCheck{c.at("route").get<std::string>(), parse_yes_no(c.at("value")),
                                      c.at("required").get<bool>()});
    }
    return v;
}

json to_json(const AnalysisReport& r) {
    json group = group_to_json(r.group);
    group["order"] = r.order;
    group["lcm_order"] = r.group.lcm_order;
    group["product_order"] = r.group.product_order;
    group["reduced_to_trivial"] = r.group.reduced_to_trivial;

    json weights = json::array();
    for (const auto& s : r.weights) {
        weights.push_back({{"weight", s.weight.residues},
                           {"nonzero", s.nonzero},
                           {"generator_count", s.generator_count},
                           {"locally_free", s.locally_free ? to_json(*s.locally_free) : json(nullptr)}});
    }
    return {
        {"group", group},
        {"hypotheses",
         {{"orders_pairwise_coprime", r.hypotheses.orders_pairwise_coprime},
          {"pseudo_reflection_free", r.hypotheses.pseudo_reflection_free}}},
        {"det_weight", r.det.residues},
        {"inverse_det_weight", r.inverse_det.residues},
        {"weights", weights},
        {"canonical_trace",
         {{"weight", r.canonical_trace.weight.residues},
          {"path", path_name(r.canonical_trace.path)},
          {"exact", r.canonical_trace.exact},
          {"generators", r.canonical_trace.generators}}},
        {"verdicts",
         {{"gorenstein", to_json(r.gorenstein)},
          {"gorenstein_on_punctured", to_json(r.gorenstein_on_punctured)},
          {"nearly_gorenstein", to_json(r.nearly_gorenstein)},
          {"all_weights_locally_free", to_json(r.all_weights_locally_free)}}},
    };
}

AnalysisReport report_from_json(const json& j) {
    try {
        AnalysisReport r;
        const auto& group = j.at("group");
        r.group.dimension = group.at("dimension").get<int>();
        for (const auto& gen : group.at("generators")) {
            r.group.generators.push_back(
                Generator{gen.at("order").get<std::int64_t>(), gen.at("exponents").get<std::vector<std::int64_t>>()});
        }
        r.group.lcm_order = group.at("lcm_order").get<std::int64_t>();
        r.group.product_order = group.at("product_order").get<std::int64_t>();
        r.group.reduced_to_trivial = group.at("reduced_to_trivial").get<bool>();
        r.order = group.at("order").get<std::int64_t>();

        const auto& hyp = j.at("hypotheses");
        r.hypotheses = Hypotheses{hyp.at("orders_pairwise_coprime").get<bool>(), hyp.at("pseudo_reflection_free").get<bool>()};
        r.det = Weight{j.at("det_weight").get<std::vector<std::int64_t>>()};
        r.inverse_det = Weight{j.at("inverse_det_weight").get<std::vector<std::int64_t>>()};

        for (const auto& s : j.at("weights")) {
            WeightSummary ws;
            ws.weight = Weight{s.at("weight").get<std::vector<std::int64_t>>()};
            ws.nonzero = s.at("nonzero").get<bool>();
            ws.generator_count = s.at("generator_count").get<std::size_t>();
            if (!s.at("locally_free").is_null()) ws.locally_free = verdict_from_json(s["locally_free"]);
            r.weights.push_back(std::move(ws));
        }

        const auto& ct = j.at("canonical_trace");
        r.canonical_trace = CanonicalTrace{Weight{ct.at("weight").get<std::vector<std::int64_t>>()},
                                           parse_path(ct.at("path").get<std::string>()), ct.at("exact").get<bool>(),
                                           ct.at("generators").get<std::vector<ExponentVector>>()};

        const auto& v = j.at("verdicts");
        r.gorenstein = verdict_from_json(v.at("gorenstein"));
        r.gorenstein_on_punctured = verdict_from_json(v.at("gorenstein_on_punctured"));
        r.nearly_gorenstein = verdict_from_json(v.at("nearly_gorenstein"));
        r.all_weights_locally_free = verdict_from_json(v.at("all_weights_locally_free"));
        return r;
    } catch (const json::exception& e) {
        throw Error(Errc::invalid_argument, std::string("malformed report: ") + e.what());
    }
}

json to_json(const MonomialModule& m) {
    return {{"weight", m.weight.residues}, {"kind", kind_name(m.kind)}, {"generators", m.gens}};
}

json to_json(const TraceResult& t) {
    return {{"ideal", to_json(t.ideal)},
            {"path", path_name(t.path)},
            {"exact", t.exact},
            {"gcd_is_one", t.gcd_is_one},
            {"hypotheses",
             {{"orders_pairwise_coprime", t.hypotheses.orders_pairwise_coprime},
              {"pseudo_reflection_free", t.hypotheses.pseudo_reflection_free}}}};
}

json to_json(const SweepRow& row) {
    return {{"group", group_to_json(row.group)},
            {"order", row.order},
            {"hypotheses",
             {{"orders_pairwise_coprime", row.hypotheses.orders_pairwise_coprime},
              {"pseudo_reflection_free", row.hypotheses.pseudo_reflection_free}}},
            {"verdicts",
             {{"gorenstein", to_json(row.gorenstein)},
              {"gorenstein_on_punctured", to_json(row.gorenstein_on_punctured)},
              {"nearly_gorenstein", to_json(row.nearly_gorenstein)},
              {"all_weights_locally_free", to_json(row.all_weights_locally_free)}}}};
}

json to_json(const std::vector<SweepRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) out.push_back(to_json(row));
    return out;
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "group       " << to_string(r.group) << (r.group.reduced_to_trivial ? "  (normalized to trivial)" : "") << '\n';
    os << "order       " << r.order << "  (N = " << r.group.lcm_order << ", n = " << r.group.product_order << ")\n";
    os << "hypotheses  orders pairwise coprime: " << yes_no(r.hypotheses.orders_pairwise_coprime)
       << "; pseudo-reflection free: " << yes_no(r.hypotheses.pseudo_reflection_free) << '\n';
    os << "det         " << to_string(r.det) << "   det^-1 " << to_string(r.inverse_det) << '\n';
    os << "canonical trace [" << path_name(r.canonical_trace.path) << (r.canonical_trace.exact ? "" : ", inexact")
       << "]\n  " << monomial_list(r.canonical_trace.generators) << '\n';
    os << "verdicts\n";
    os << verdict_line("gorenstein", r.gorenstein) << '\n';
    os << verdict_line("gorenstein_on_punctured", r.gorenstein_on_punctured) << '\n';
    os << verdict_line("nearly_gorenstein", r.nearly_gorenstein) << '\n';
    os << verdict_line("all_weights_locally_free", r.all_weights_locally_free) << '\n';
    if (!r.weights.empty()) {
        os << "weights\n";
        for (const auto& s : r.weights) {
            os << "  " << std::left << std::setw(12) << to_string(s.weight);
            if (!s.nonzero) {
                os << "zero\n";
                continue;
            }
            os << std::setw(4) << s.generator_count << "gens  locally free: " << yes_no(s.locally_free->value) << " ("
               << s.locally_free->justification << ")\n";
        }
    }
    return os.str();
}

std::string render_text(const MonomialModule& m) {
    std::ostringstream os;
    os << kind_name(m.kind) << " weight " << to_string(m.weight) << ", " << m.gens.size() << " generators\n";
    for (const auto& u : m.gens) os << "  " << render_monomial(u) << '\n';
    return os.str();
}

std::string render_text(const TraceResult& t) {
    std::ostringstream os;
    os << "trace [" << path_name(t.path) << (t.exact ? "" : ", inexact: product forced outside its range")
       << "] gcd(R^X)=1: " << yes_no(t.gcd_is_one) << ", " << t.ideal.gens.size() << " generators\n";
    for (const auto& u : t.ideal.gens) os << "  " << render_monomial(u) << '\n';
    return os.str();
}

std::string render_table(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(34) << "group" << std::setw(7) << "|G|" << std::setw(8) << "coprime" << std::setw(8)
       << "pr-free" << std::setw(6) << "gor" << std::setw(8) << "nearly" << std::setw(10) << "punctured"
       << "all-free\n";
    for (const auto& row : rows) {
        os << std::left << std::setw(34) << to_string(row.group) << std::setw(7) << row.order << std::setw(8)
           << yes_no(row.hypotheses.orders_pairwise_coprime) << std::setw(8)
           << yes_no(row.hypotheses.pseudo_reflection_free) << std::setw(6) << yes_no(row.gorenstein.value)
           << std::setw(8) << yes_no(row.nearly_gorenstein.value) << std::setw(10)
           << yes_no(row.gorenstein_on_punctured.value) << yes_no(row.all_weights_locally_free.value) << '\n';
    }
    return os.str();
}

}  // namespace semitrace
