#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semitrace/congruence.hpp"
#include "semitrace/criteria.hpp"
#include "semitrace/error.hpp"
#include "semitrace/report.hpp"
#include "semitrace/trace.hpp"

namespace py = pybind11;
using namespace semitrace;

namespace {

using Gens = std::vector<ExponentVector>;

GroupPresentation make_group(int dimension, const std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>& gens) {
    std::vector<Generator> raw;
    for (const auto& [order, exps] : gens) raw.push_back(Generator{order, exps});
    return normalize(dimension, raw);
}

Weight as_weight(const GroupPresentation& g, const std::vector<std::int64_t>& w) { return make_weight(g, w); }

std::string verdict_json(const Verdict& v) { return to_json(v).dump(); }

PathChoice parse_path(const std::string& s) {
    if (s == "auto") return PathChoice::automatic;
    if (s == "product") return PathChoice::product;
    if (s == "colon") return PathChoice::colon;
    throw Error(Errc::invalid_argument, "path must be auto, product or colon");
}

}  // namespace

PYBIND11_MODULE(_semitrace, m) {
    m.doc() = "Semi-invariants, traces and Gorenstein criteria for diagonal abelian groups";

    // Kept alive for the interpreter's lifetime; `code` carries the Errc name.
    static py::handle error = py::exception<Error>(m, "SemitraceError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(error)(e.what());
            inst.attr("code") = std::string(errc_name(e.code()));
            PyErr_SetObject(error.ptr(), inst.ptr());
        }
    });

    py::class_<GroupPresentation>(m, "Group")
        .def(py::init(&make_group), py::arg("dimension"), py::arg("generators"),
             "Normalized group from (order, exponents) pairs.")
        .def_readonly("dimension", &GroupPresentation::dimension)
        .def_property_readonly("generators",
                               [](const GroupPresentation& g) {
                                   std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> out;
                                   for (const auto& gen : g.generators) out.emplace_back(gen.order, gen.exponents);
                                   return out;
                               })
        .def_readonly("lcm_order", &GroupPresentation::lcm_order)
        .def_readonly("product_order", &GroupPresentation::product_order)
        .def_property_readonly("trivial", &GroupPresentation::trivial)
        .def(py::self == py::self)
        .def("__repr__", [](const GroupPresentation& g) { return "Group(" + to_string(g) + ")"; });

    m.def("group_from_json", [](const std::string& s) { return group_from_json(nlohmann::json::parse(s)); });
    m.def("group_to_json", [](const GroupPresentation& g) { return group_to_json(g).dump(); });

    m.def("weight_of", [](const GroupPresentation& g, const ExponentVector& u) { return weight_of(g, u).residues; });
    m.def("det_weight", [](const GroupPresentation& g) { return det_weight(g).residues; });
    m.def("inverse_weight", [](const GroupPresentation& g, const std::vector<std::int64_t>& w) {
        return inverse_weight(g, as_weight(g, w)).residues;
    });
    m.def("all_weights", [](const GroupPresentation& g) {
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& w : all_weights(g)) out.push_back(w.residues);
        return out;
    });
    m.def("is_nonzero", [](const GroupPresentation& g, const std::vector<std::int64_t>& w) {
        return is_nonzero(g, as_weight(g, w));
    });
    m.def("group_order", [](const GroupPresentation& g) { return enumerate_elements(g).order; });
    m.def("has_pseudo_reflection", [](const GroupPresentation& g) { return has_pseudo_reflection(g); });
    m.def("hypotheses", [](const GroupPresentation& g) {
        const auto h = hypotheses_check(g);
        py::dict d;
        d["orders_pairwise_coprime"] = h.orders_pairwise_coprime;
        d["pseudo_reflection_free"] = h.pseudo_reflection_free;
        return d;
    });

    m.def("hilbert_basis", [](const GroupPresentation& g) { return invariant_hilbert_basis(g).gens; });
    m.def("semi_invariant_generators", [](const GroupPresentation& g, const std::vector<std::int64_t>& w) {
        return semi_invariant_generators(g, as_weight(g, w)).gens;
    });
    m.def("colon_generators", [](const GroupPresentation& g, const std::vector<std::int64_t>& w) {
        return colon_generators(g, as_weight(g, w)).gens;
    });
    m.def(
        "trace_ideal",
        [](const GroupPresentation& g, const std::vector<std::int64_t>& w, const std::string& path) {
            return to_json(trace_ideal(g, as_weight(g, w), parse_path(path))).dump();
        },
        py::arg("group"), py::arg("weight"), py::arg("path") = "auto");
    m.def("pure_power_exponents", [](const GroupPresentation& g, const std::vector<std::int64_t>& w) {
        return pure_power_exponents(g, as_weight(g, w));
    });

    m.def("locally_free_on_punctured", [](const GroupPresentation& g, const std::vector<std::int64_t>& w) {
        return verdict_json(locally_free_on_punctured(g, as_weight(g, w)));
    });
    m.def("all_weights_locally_free", [](const GroupPresentation& g) { return verdict_json(all_weights_locally_free(g)); });
    m.def("is_gorenstein", [](const GroupPresentation& g) { return verdict_json(is_gorenstein(g)); });
    m.def("gorenstein_on_punctured", [](const GroupPresentation& g) { return verdict_json(gorenstein_on_punctured(g)); });
    m.def("nearly_gorenstein", [](const GroupPresentation& g) { return verdict_json(nearly_gorenstein(g)); });
    m.def("analyze", [](const GroupPresentation& g) { return to_json(analyze(g)).dump(); });

    m.def(
        "solve_positive_system",
        [](std::vector<std::vector<std::int64_t>> a, std::vector<std::int64_t> b, std::vector<std::int64_t> p) {
            return solve_positive_system(CongruenceSystem{std::move(a), std::move(b), std::move(p)});
        },
        py::arg("coefficients"), py::arg("rhs"), py::arg("moduli"));
    m.def("crt", [](const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& p) { return crt(r, p); });
    m.def("mod_inverse", &mod_inverse);
}
