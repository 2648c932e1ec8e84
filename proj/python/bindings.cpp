#include "treetorsor/catalog.hpp"
#include "treetorsor/divisor.hpp"
#include "treetorsor/text_format.hpp"
#include "treetorsor/torsor.hpp"
#include "treetorsor/witness.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace treetorsor;

namespace {

Divisor divisor_from_object(const RibbonGraph& g, const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_divisor(g, obj.cast<std::string>());
    Divisor d = zero_divisor(g);
    if (py::isinstance<py::dict>(obj)) {
        for (auto item : obj.cast<py::dict>())
            d[g.vertex(item.first.cast<std::string>())] = item.second.cast<long long>();
        return d;
    }
    auto values = obj.cast<std::vector<long long>>();
    if (static_cast<int>(values.size()) != g.vertex_count())
        throw py::value_error("divisor needs one coefficient per vertex");
    return values;
}

ActionKind kind_from_string(const std::string& kind) {
    if (kind == "bernardi") return ActionKind::Bernardi;
    if (kind == "rotor") return ActionKind::Rotor;
    throw py::value_error("kind must be 'bernardi' or 'rotor'");
}

std::vector<std::string> names_of_edges(const RibbonGraph& g, const std::vector<EdgeId>& edges) {
    std::vector<std::string> out;
    for (EdgeId e : edges) out.push_back(g.edge_name(e));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "ribbon graphs, divisor classes, and the two spanning-tree torsors";

    py::register_exception<Error>(m, "GraphError");

    py::class_<RibbonGraph>(m, "RibbonGraph")
        .def_static("parse", &parse_graph, py::arg("text"))
        .def("serialize", &serialize_graph)
        .def_property_readonly("vertices",
                               [](const RibbonGraph& g) {
                                   std::vector<std::string> out;
                                   for (VertexId v = 0; v < g.vertex_count(); ++v)
                                       out.push_back(g.vertex_name(v));
                                   return out;
                               })
        .def_property_readonly("edges",
                               [](const RibbonGraph& g) {
                                   std::vector<std::string> out;
                                   for (EdgeId e = 0; e < g.edge_count(); ++e)
                                       out.push_back(g.edge_name(e));
                                   return out;
                               })
        .def("rotation",
             [](const RibbonGraph& g, const std::string& v) {
                 std::vector<std::string> out;
                 for (EdgeId e : g.edges_at(g.vertex(v))) out.push_back(g.edge_name(e));
                 return out;
             },
             py::arg("vertex"), "edge names around a vertex, counterclockwise")
        .def("genus", &RibbonGraph::surface_genus)
        .def("cycle_rank", &RibbonGraph::first_betti)
        .def("face_count", [](const RibbonGraph& g) { return g.faces().size(); })
        .def("delete_edge",
             [](const RibbonGraph& g, const std::string& e) { return g.delete_edge(g.edge(e)); })
        .def("contract_edge",
             [](const RibbonGraph& g, const std::string& e) { return g.contract_edge(g.edge(e)); })
        .def("__repr__", [](const RibbonGraph& g) {
            return "<RibbonGraph V=" + std::to_string(g.vertex_count()) +
                   " E=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<TreePermutation>(m, "Permutation")
        .def("apply", [](const TreePermutation& p, int i) { return p.apply(i - 1) + 1; }, py::arg("i"),
             "image of a 1-based index")
        .def("cycle_type", &TreePermutation::cycle_type)
        .def("is_identity", &TreePermutation::is_identity)
        .def("inverse", &TreePermutation::inverse)
        .def("__mul__", [](const TreePermutation& a, const TreePermutation& b) { return a * b; })
        .def("__eq__", [](const TreePermutation& a, const TreePermutation& b) { return a == b; })
        .def("__len__", &TreePermutation::size)
        .def("__repr__", &TreePermutation::to_string)
        .def("__str__", &TreePermutation::to_string);

    m.def("catalog_names", [] { return catalog_names(); });
    m.def("catalog", [](const std::string& name) { return catalog_graph(name); }, py::arg("name"));
    m.def("catalog_note", [](const std::string& name) { return catalog(name).note; }, py::arg("name"));

    m.def("spanning_trees",
          [](const RibbonGraph& g) {
              TreeList trees = enumerate_trees(g);
              std::vector<std::vector<std::string>> out;
              for (int i = 0; i < trees.size(); ++i)
                  out.push_back(names_of_edges(g, tree_edges(g, trees[i])));
              return out;
          },
          py::arg("graph"), "edge-name lists of all spanning trees in canonical order");

    m.def("picard",
          [](const RibbonGraph& g) {
              PicardStructure p = picard_structure(g);
              return py::make_tuple(p.order, p.invariant_factors);
          },
          py::arg("graph"), "(group order, invariant factors)");

    m.def("degree", [](const RibbonGraph& g, const py::object& d) { return degree(divisor_from_object(g, d)); },
          py::arg("graph"), py::arg("divisor"));

    m.def("linearly_equivalent",
          [](const RibbonGraph& g, const py::object& d1, const py::object& d2) {
              return linearly_equivalent(g, divisor_from_object(g, d1), divisor_from_object(g, d2));
          },
          py::arg("graph"), py::arg("d1"), py::arg("d2"));

    m.def("break_representative",
          [](const RibbonGraph& g, const py::object& d) {
              TreeList trees = enumerate_trees(g);
              return break_representative(g, trees, divisor_from_object(g, d));
          },
          py::arg("graph"), py::arg("divisor"), "coefficients in canonical vertex order");

    m.def("is_break_divisor",
          [](const RibbonGraph& g, const py::object& d) {
              TreeList trees = enumerate_trees(g);
              return is_break_divisor(g, trees, divisor_from_object(g, d)).has_value();
          },
          py::arg("graph"), py::arg("divisor"));

    m.def("action_permutation",
          [](const RibbonGraph& g, const std::string& kind, const std::string& base,
             const py::object& divisor) {
              TreeList trees = enumerate_trees(g);
              return action_permutation(g, trees, kind_from_string(kind), g.vertex(base),
                                        divisor_from_object(g, divisor));
          },
          py::arg("graph"), py::arg("kind"), py::arg("base"), py::arg("divisor"),
          "permutation of canonical tree indices induced by a degree-0 divisor class");

    m.def("torsors_equal",
          [](const RibbonGraph& g, const std::string& base) {
              TreeList trees = enumerate_trees(g);
              return torsors_equal(g, trees, g.vertex(base));
          },
          py::arg("graph"), py::arg("base"));

    m.def("difference",
          [](const RibbonGraph& g, const std::string& base, const py::object& divisor) {
              TreeList trees = enumerate_trees(g);
              return difference(g, trees, g.vertex(base), divisor_from_object(g, divisor));
          },
          py::arg("graph"), py::arg("base"), py::arg("divisor"),
          "rotor(d)^-1 * bernardi(d); identity exactly when the torsors agree on d");

    m.def("scan_bases",
          [](const RibbonGraph& g) {
              TreeList trees = enumerate_trees(g);
              AgreementReport rep = scan_bases(g, trees);
              py::dict out;
              out["genus"] = rep.surface_genus;
              out["bernardi_base_independent"] = rep.bernardi_base_independent;
              out["rotor_base_independent"] = rep.rotor_base_independent;
              py::dict bases;
              for (const auto& bc : rep.bases) bases[py::str(g.vertex_name(bc.base))] = bc.agree;
              out["agree"] = bases;
              return out;
          },
          py::arg("graph"), "per-base agreement plus base-independence of each action");

    m.def("has_nonseparating_cycle", &has_nonseparating_cycle, py::arg("graph"));

    m.def("find_proper_witness_pair",
          [](const RibbonGraph& g) -> py::object {
              auto pair = find_proper_witness_pair(g);
              if (!pair) return py::none();
              py::dict out;
              out["cycle"] = names_of_edges(g, pair->cycle.edges);
              out["path"] = names_of_edges(g, pair->path.edges);
              out["z"] = g.vertex_name(pair->z);
              out["x"] = g.vertex_name(*pair->x);
              return out;
          },
          py::arg("graph"));

    m.def("construct_disagreement",
          [](const RibbonGraph& g) -> py::object {
              TreeList trees = enumerate_trees(g);
              auto ev = construct_disagreement(g, trees);
              if (!ev) return py::none();
              py::dict out;
              out["route"] = ev->route;
              out["base"] = g.vertex_name(ev->q);
              out["z"] = g.vertex_name(ev->z);
              out["tree"] = names_of_edges(g, tree_edges(g, ev->tree));
              out["rotor_image"] = names_of_edges(g, tree_edges(g, ev->rotor_image));
              return out;
          },
          py::arg("graph"), "a base vertex where the torsors provably disagree, or None");
}
