// semitrace: semi-invariants, trace ideals and Gorenstein-type certificates
// for diagonal abelian group actions on polynomial rings.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semitrace/congruence.hpp"
#include "semitrace/criteria.hpp"
#include "semitrace/error.hpp"
#include "semitrace/group.hpp"
#include "semitrace/monoid.hpp"
#include "semitrace/oracle.hpp"
#include "semitrace/report.hpp"
#include "semitrace/trace.hpp"

using namespace semitrace;
using nlohmann::json;

namespace {

std::vector<std::int64_t> parse_list(const std::string& text) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw Error(Errc::invalid_argument, "not an integer: \"" + item + "\"");
        }
    }
    return out;
}

std::vector<std::vector<std::int64_t>> parse_matrix(const std::string& text) {
    std::vector<std::vector<std::int64_t>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_list(row));
    return rows;
}

GroupPresentation load_group(const std::string& path) {
    json j;
    try {
        if (path == "-") {
            j = json::parse(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) throw Error(Errc::invalid_argument, "cannot open " + path);
            j = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        throw Error(Errc::invalid_argument, std::string("invalid JSON: ") + e.what());
    }
    return group_from_json(j);
}

PathChoice parse_path_choice(const std::string& s) {
    if (s == "auto") return PathChoice::automatic;
    if (s == "product") return PathChoice::product;
    if (s == "colon") return PathChoice::colon;
    throw Error(Errc::invalid_argument, "--path must be product, colon or auto");
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semitrace: trace ideals of semi-invariants and Gorenstein certificates"};
    app.require_subcommand(1);

    std::string group_file;
    std::string weight_text;
    std::string path_text = "auto";
    bool as_json = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "Full certificate report for a group");
    bool no_weights = false;
    analyze_cmd->add_option("-g,--group", group_file, "Group JSON file ('-' for stdin)")->required();
    analyze_cmd->add_flag("--json", as_json, "Machine-readable output");
    analyze_cmd->add_flag("--no-weights", no_weights, "Skip the per-character summary");

    auto* gens_cmd = app.add_subcommand("gens", "Minimal generators of m_G, R^X or the colon module");
    bool colon = false;
    gens_cmd->add_option("-g,--group", group_file, "Group JSON file")->required();
    gens_cmd->add_option("-w,--weight", weight_text, "Character s_1,...,s_l (omit for m_G)");
    gens_cmd->add_flag("--colon", colon, "Dump R^G :_{S^-1 R} R^X instead of R^X");
    gens_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto* trace_cmd = app.add_subcommand("trace", "Trace ideal of R^X");
    trace_cmd->add_option("-g,--group", group_file, "Group JSON file")->required();
    trace_cmd->add_option("-w,--weight", weight_text, "Character s_1,...,s_l")->required();
    trace_cmd->add_option("--path", path_text, "product | colon | auto")->check(CLI::IsMember({"product", "colon", "auto"}));
    trace_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto* solve_cmd = app.add_subcommand("solve", "Positive solution of a congruence system");
    std::string moduli_text, matrix_text, rhs_text;
    solve_cmd->add_option("--moduli", moduli_text, "p_1,...,p_m")->required();
    solve_cmd->add_option("--matrix", matrix_text, "rows separated by ';', entries by ','")->required();
    solve_cmd->add_option("--rhs", rhs_text, "b_1,...,b_m")->required();
    solve_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto* sweep_cmd = app.add_subcommand("sweep", "Classify every group of a family");
    bool cyclic = false, multi = false;
    std::int64_t max_order = 0;
    int dimension = 3;
    unsigned threads = 0;
    auto* cyclic_flag = sweep_cmd->add_flag("--cyclic", cyclic, "Cyclic groups");
    auto* multi_flag = sweep_cmd->add_flag("--multi", multi, "Two-generator groups");
    cyclic_flag->excludes(multi_flag);
    sweep_cmd->add_option("--max-order", max_order, "Largest generator order")->required();
    sweep_cmd->add_option("--dim", dimension, "Dimension d")->required();
    sweep_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    sweep_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force generators by degree-bounded sieve");
    std::int64_t degree = 0;
    oracle_cmd->add_option("-g,--group", group_file, "Group JSON file")->required();
    oracle_cmd->add_option("--degree", degree, "Degree bound D")->required();
    oracle_cmd->add_option("-w,--weight", weight_text, "Character (default: trivial, giving m_G)");
    oracle_cmd->add_flag("--json", as_json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*analyze_cmd) {
            const auto g = load_group(group_file);
            AnalyzeOptions options;
            options.include_weights = !no_weights;
            const auto report = analyze(g, options);
            if (as_json) emit(to_json(report));
            else std::cout << render_text(report);
        } else if (*gens_cmd) {
            const auto g = load_group(group_file);
            MonomialModule m;
            if (weight_text.empty() && !colon) {
                m = invariant_hilbert_basis(g);
            } else {
                const auto w = weight_text.empty() ? zero_weight(g) : make_weight(g, parse_list(weight_text));
                m = colon ? colon_generators(g, w) : semi_invariant_generators(g, w);
            }
            if (as_json) emit(to_json(m));
            else std::cout << render_text(m);
        } else if (*trace_cmd) {
            const auto g = load_group(group_file);
            const auto w = make_weight(g, parse_list(weight_text));
            const auto t = trace_ideal(g, w, parse_path_choice(path_text));
            if (as_json) emit(to_json(t));
            else std::cout << render_text(t);
        } else if (*solve_cmd) {
            CongruenceSystem sys{parse_matrix(matrix_text), parse_list(rhs_text), parse_list(moduli_text)};
            const auto x = solve_positive_system(sys);
            if (as_json) {
                emit(json{{"solution", x}});
            } else {
                for (std::size_t j = 0; j < x.size(); ++j) std::cout << (j ? "," : "") << x[j];
                std::cout << '\n';
            }
        } else if (*sweep_cmd) {
            if (!cyclic && !multi) throw Error(Errc::invalid_argument, "sweep needs --cyclic or --multi");
            const auto rows = sweep(cyclic ? SweepFamily::cyclic : SweepFamily::multi, max_order, dimension, {}, threads);
            if (as_json) emit(to_json(rows));
            else std::cout << render_table(rows);
        } else if (*oracle_cmd) {
            const auto g = load_group(group_file);
            const auto w = weight_text.empty() ? zero_weight(g) : make_weight(g, parse_list(weight_text));
            const auto brute = oracle::brute_minimal_generators(g, w, degree);
            const auto engine = w.is_trivial() ? invariant_hilbert_basis(g) : semi_invariant_generators(g, w);
            const bool agree = brute == engine.gens;
            if (as_json) {
                emit(json{{"weight", w.residues}, {"degree", degree}, {"generators", brute}, {"engine_agrees", agree}});
            } else {
                std::cout << "oracle weight " << to_string(w) << ", degree <= " << degree << ", " << brute.size()
                          << " generators\n";
                for (const auto& u : brute) std::cout << "  " << render_monomial(u) << '\n';
                std::cout << "engine agrees: " << (agree ? "yes" : "no") << '\n';
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.code());
    }
    return 0;
}
