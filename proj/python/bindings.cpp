#include "aspbreak/oracle.hpp"
#include "aspbreak/pipeline.hpp"
#include "aspbreak/smodels.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace aspbreak;

namespace {

std::vector<std::vector<Atom>> cycles_of(const AtomPermutation& pi)
{
    return pi.cycles();
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Symmetry breaking for ground programs in smodels format.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<GroundProgram>(m, "Program")
        .def_readonly("max_atom", &GroundProgram::max_atom)
        .def_readonly("symbols", &GroundProgram::symbols)
        .def_readonly("compute_plus", &GroundProgram::compute_plus)
        .def_readonly("compute_minus", &GroundProgram::compute_minus)
        .def_property_readonly("rule_count", [](const GroundProgram& p) { return p.rules.size(); })
        .def("atom_name", &GroundProgram::atom_name)
        .def("write", [](const GroundProgram& p) { return write_program(p); })
        .def("__eq__", [](const GroundProgram& a, const GroundProgram& b) { return a == b; });

    m.def("parse", [](const std::string& text) { return parse_program(text); }, py::arg("text"));

    m.def(
        "detect",
        [](const GroundProgram& p, double node_budget) {
            SearchOptions o;
            o.node_budget = static_cast<std::size_t>(node_budget);
            std::vector<std::vector<std::vector<Atom>>> out;
            for (const auto& g : detect(p, o).generators) out.push_back(cycles_of(g));
            return out;
        },
        py::arg("program"), py::arg("node_budget") = 1e6,
        "Generators of the syntactic symmetry group, each as a list of cycles.");

    py::class_<PipelineResult>(m, "BreakResult")
        .def_readonly("output", &PipelineResult::output)
        .def_readonly("breaking_rules", &PipelineResult::breaking_rules)
        .def_readonly("aux_atoms", &PipelineResult::aux_atoms)
        .def_readonly("per_symmetry_aux", &PipelineResult::per_symmetry_aux)
        .def_readonly("search_complete", &PipelineResult::search_complete)
        .def_property_readonly("generators",
                               [](const PipelineResult& r) {
                                   std::vector<std::vector<std::vector<Atom>>> out;
                                   for (const auto& g : r.generators) out.push_back(cycles_of(g));
                                   return out;
                               })
        .def_property_readonly("rows", [](const PipelineResult& r) { return r.rows.size(); })
        .def_property_readonly("binary_pairs", [](const PipelineResult& r) { return r.pairs.size(); });

    m.def(
        "break_symmetries",
        [](const GroundProgram& p, std::size_t aux_limit, bool rows, bool binary) {
            PipelineOptions o;
            o.aux_limit = aux_limit;
            o.rows = rows;
            o.binary = binary;
            return break_symmetries(p, o);
        },
        py::arg("program"), py::arg("aux_limit") = default_aux_limit, py::arg("rows") = true,
        py::arg("binary") = true);

    m.def(
        "answer_sets",
        [](const GroundProgram& p, std::size_t atom_budget) {
            OracleOptions o;
            o.atom_budget = atom_budget;
            return answer_sets(p, o);
        },
        py::arg("program"), py::arg("atom_budget") = 20,
        "Brute-force answer sets, for small programs only.");
}
