#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semitrace/criteria.hpp"
#include "semitrace/group.hpp"
#include "semitrace/monoid.hpp"
#include "semitrace/trace.hpp"

namespace semitrace {

struct WeightSummary {
    Weight weight;
    bool nonzero = false;
    std::size_t generator_count = 0;
    std::optional<Verdict> locally_free;  // absent when R^X = 0

    friend bool operator==(const WeightSummary&, const WeightSummary&) = default;
};

struct CanonicalTrace {
    Weight weight;
    TracePath path = TracePath::colon_formula;
    bool exact = true;
    std::vector<ExponentVector> generators;

    friend bool operator==(const CanonicalTrace&, const CanonicalTrace&) = default;
};

struct AnalysisReport {
    GroupPresentation group;
    std::int64_t order = 1;
    Hypotheses hypotheses;
    Weight det;
    Weight inverse_det;
    std::vector<WeightSummary> weights;
    CanonicalTrace canonical_trace;
    Verdict gorenstein;
    Verdict gorenstein_on_punctured;
    Verdict nearly_gorenstein;
    Verdict all_weights_locally_free;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
    Limits limits;
    bool include_weights = true;
};

/// Full certificate bundle for one group. Throws InternalInconsistency if the
/// verdicts break Gorenstein => nearly Gorenstein => Gorenstein off m_G.
AnalysisReport analyze(const GroupPresentation& g, const AnalyzeOptions& options = {});

enum class SweepFamily { cyclic, multi };

struct SweepRow {
    GroupPresentation group;
    std::int64_t order = 1;
    Hypotheses hypotheses;
    Verdict gorenstein;
    Verdict gorenstein_on_punctured;
    Verdict nearly_gorenstein;
    Verdict all_weights_locally_free;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Canonical representative of a group up to relabeling the variables and
/// replacing each generator by a power coprime to its order.
GroupPresentation canonical_form(const GroupPresentation& g);

/// Every normalized group of the family with generator orders <= max_order in
/// the given dimension, deduplicated by canonical_form and sorted. `cyclic`
/// includes the trivial group; `multi` is two-generator presentations.
std::vector<GroupPresentation> sweep_groups(SweepFamily family, std::int64_t max_order, int dimension,
                                            const Limits& limits = {});

/// Analyzes every group of sweep_groups; rows keep that order. Rows are
/// computed on `threads` workers (0 = hardware concurrency).
std::vector<SweepRow> sweep(SweepFamily family, std::int64_t max_order, int dimension, const Limits& limits = {},
                            unsigned threads = 0);

// JSON surface. Group input schema:
//   {"dimension": d, "generators": [{"order": n, "exponents": [t_1, ..., t_d]}, ...]}
GroupPresentation group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const GroupPresentation& g);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MonomialModule& m);
nlohmann::json to_json(const TraceResult& t);
nlohmann::json to_json(const SweepRow& row);
nlohmann::json to_json(const std::vector<SweepRow>& rows);

std::string render_text(const AnalysisReport& r);
std::string render_text(const MonomialModule& m);
std::string render_text(const TraceResult& t);
std::string render_table(const std::vector<SweepRow>& rows);

}  // namespace semitrace
