// Python bindings. Structured results (sequences, reports, verdicts) are
// returned as plain dicts/lists mirroring the CLI's JSON shapes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simptree/certify.hpp"
#include "simptree/complex.hpp"
#include "simptree/counting.hpp"
#include "simptree/cycles.hpp"
#include "simptree/enumerate.hpp"
#include "simptree/errors.hpp"
#include "simptree/fixtures.hpp"
#include "simptree/json_io.hpp"
#include "simptree/paths.hpp"

namespace py = pybind11;
using namespace simptree;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out[py::str(it.key())] = json_to_py(it.value());
            }
            return out;
        }
        default:
            return py::none();
    }
}

std::vector<Simplex> simplices_from_lists(const std::vector<std::vector<VertexId>>& rows) {
    std::vector<Simplex> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.emplace_back(row);
    return out;
}

Simplex simplex_from_list(const std::vector<VertexId>& row) { return Simplex(row); }

AltSequence sequence_from_dict(const py::dict& d) {
    AltSequence seq;
    seq.m = d["m"].cast<int>();
    for (const auto& item : d["items"].cast<py::list>()) {
        seq.items.emplace_back(item.cast<std::vector<VertexId>>());
    }
    return seq;
}

py::object opt_sequence(const std::optional<AltSequence>& seq) {
    return seq ? json_to_py(to_json(*seq)) : py::none();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "pure n-simplicial complexes: paths, cycles and tree certification";

    py::register_exception<Error>(m, "SimplicialError");

    py::class_<PureComplex>(m, "PureComplex")
        .def_static(
            "from_facets",
            [](const std::vector<std::vector<VertexId>>& facets) {
                return PureComplex::from_facets(simplices_from_lists(facets));
            },
            py::arg("facets"))
        .def_property_readonly("n", &PureComplex::dim)
        .def_property_readonly("facets",
                               [](const PureComplex& k) { return json_to_py(to_json(k.facets())); })
        .def("alpha", &PureComplex::alpha, py::arg("k"))
        .def("vertex_count", &PureComplex::vertex_count)
        .def("simplices",
             [](const PureComplex& k, int dim) { return json_to_py(to_json(k.simplices(dim))); },
             py::arg("k"))
        .def("contains",
             [](const PureComplex& k, const std::vector<VertexId>& s) {
                 return k.contains(simplex_from_list(s));
             },
             py::arg("simplex"))
        .def("attachment",
             [](const PureComplex& k, const std::vector<VertexId>& f) {
                 return json_to_py(to_json(k.attachment(simplex_from_list(f))));
             },
             py::arg("facet"))
        .def("is_m_complete", &PureComplex::is_m_complete, py::arg("m"))
        .def("k_skeleton",
             [](const PureComplex& k, int dim) { return json_to_py(to_json(k.k_skeleton(dim))); },
             py::arg("k"))
        .def("joint_simplices",
             [](const PureComplex& k, int m) {
                 return json_to_py(to_json(k.joint_simplices(m)));
             },
             py::arg("m"))
        .def("__repr__", [](const PureComplex& k) {
            return "PureComplex(n=" + std::to_string(k.dim()) +
                   ", facets=" + std::to_string(k.facet_count()) + ")";
        });

    m.def(
        "build_complex",
        [](const std::vector<std::vector<VertexId>>& facets) {
            return PureComplex::from_facets(simplices_from_lists(facets));
        },
        py::arg("facets"));

    m.def("clique_complex",
          [](const std::vector<std::pair<VertexId, VertexId>>& edges,
             const std::vector<VertexId>& extra_vertices) {
              return json_to_py(to_json(clique_complex(Graph::from_edges(edges, extra_vertices))));
          },
          py::arg("edges"), py::arg("extra_vertices") = std::vector<VertexId>{});

    m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
    m.def("tree_count_formula", &tree_count_formula, py::arg("p"), py::arg("n"), py::arg("k"));
    m.def(
        "dewdney_count_formula",
        [](long long p, int mm, int n, int k) {
            const Rational r = dewdney_count_formula(p, mm, n, k);
            py::object fraction = py::module_::import("fractions").attr("Fraction");
            return fraction(r.numerator(), r.denominator());
        },
        py::arg("p"), py::arg("m"), py::arg("n"), py::arg("k"));

    m.def("validate_walk",
          [](const py::dict& seq, const PureComplex& k) {
              return validate_walk(sequence_from_dict(seq), k);
          },
          py::arg("seq"), py::arg("complex"));
    m.def("validate_path",
          [](const py::dict& seq, const PureComplex& k) {
              return validate_path(sequence_from_dict(seq), k);
          },
          py::arg("seq"), py::arg("complex"));
    m.def("validate_reduced_path",
          [](const py::dict& seq, const PureComplex& k) -> py::object {
              auto witness = validate_reduced_path(sequence_from_dict(seq), k);
              return witness ? json_to_py(to_json(*witness)) : py::none();
          },
          py::arg("seq"), py::arg("complex"));
    m.def("reduce_walk",
          [](const py::dict& seq, const PureComplex& k) {
              return json_to_py(to_json(reduce_walk(sequence_from_dict(seq), k)));
          },
          py::arg("seq"), py::arg("complex"));
    m.def("find_path",
          [](const PureComplex& k, const std::vector<VertexId>& a,
             const std::vector<VertexId>& b) {
              return opt_sequence(find_path(k, simplex_from_list(a), simplex_from_list(b)));
          },
          py::arg("complex"), py::arg("a"), py::arg("b"));
    m.def("find_reduced_path",
          [](const PureComplex& k, const std::vector<VertexId>& a,
             const std::vector<VertexId>& b) {
              return opt_sequence(find_reduced_path(k, simplex_from_list(a), simplex_from_list(b)));
          },
          py::arg("complex"), py::arg("a"), py::arg("b"));
    m.def("is_connected", &is_connected, py::arg("complex"));
    m.def("components",
          [](const PureComplex& k) { return json_to_py(components_to_json(components(k))); },
          py::arg("complex"));
    m.def("find_ordering",
          [](const PureComplex& k) -> py::object {
              auto ordering = find_ordering(k);
              return ordering ? json_to_py(to_json(*ordering)) : py::none();
          },
          py::arg("complex"));
    m.def("compare_paths",
          [](const py::dict& x, const py::dict& y, const PureComplex& k) {
              switch (compare_paths(sequence_from_dict(x), sequence_from_dict(y), k)) {
                  case PathRelation::XDependsOnY: return std::string("x_dep_y");
                  case PathRelation::YDependsOnX: return std::string("y_dep_x");
                  case PathRelation::Equal: return std::string("equal");
                  case PathRelation::Independent: return std::string("independent");
              }
              return std::string("?");
          },
          py::arg("x"), py::arg("y"), py::arg("complex"));

    m.def("validate_circuit",
          [](const py::dict& seq, const PureComplex& k) {
              return validate_circuit(sequence_from_dict(seq), k);
          },
          py::arg("seq"), py::arg("complex"));
    m.def("validate_cycle",
          [](const py::dict& seq, const PureComplex& k) -> py::object {
              auto witness = validate_cycle(sequence_from_dict(seq), k);
              return witness ? json_to_py(to_json(*witness)) : py::none();
          },
          py::arg("seq"), py::arg("complex"));
    m.def("find_circuit",
          [](const PureComplex& k, int mm) { return opt_sequence(find_circuit(k, mm)); },
          py::arg("complex"), py::arg("m"));
    m.def("find_cycle",
          [](const PureComplex& k, int mm) -> py::object {
              auto witness = find_cycle(k, mm);
              return witness ? json_to_py(to_json(*witness)) : py::none();
          },
          py::arg("complex"), py::arg("m"));
    m.def("is_acyclic", &is_acyclic, py::arg("complex"));

    m.def("certify_by_definition", &certify_by_definition, py::arg("complex"));
    m.def("certify_by_complete_ordering",
          [](const PureComplex& k) -> py::object {
              auto ordering = certify_by_complete_ordering(k);
              return ordering ? json_to_py(to_json(*ordering)) : py::none();
          },
          py::arg("complex"));
    m.def("certify_by_count", &certify_by_count, py::arg("complex"), py::arg("k"));
    m.def("certify_by_acyclic_counts", &certify_by_acyclic_counts, py::arg("complex"));
    m.def("certify_by_unique_paths", &certify_by_unique_paths, py::arg("complex"));
    m.def("certify_tree",
          [](const PureComplex& k) { return json_to_py(to_json(certify_tree(k))); },
          py::arg("complex"));
    m.def("count_bounds",
          [](const PureComplex& k) { return json_to_py(to_json(count_bounds(k))); },
          py::arg("complex"));

    m.def("canonical_form",
          [](const PureComplex& k) { return json_to_py(to_json(canonical_form(k))); },
          py::arg("complex"));
    m.def("enumerate_complexes",
          [](int n, int max_facets, int max_vertices, bool up_to_iso) {
              EnumSpace space{n, max_facets, max_vertices, up_to_iso};
              py::list out;
              for (auto& k : enumerate_complexes(space)) out.append(std::move(k));
              return out;
          },
          py::arg("n"), py::arg("max_facets"), py::arg("max_vertices"),
          py::arg("up_to_iso") = true);
    m.def("test_conjecture",
          [](const PureComplex& k, const std::string& which) {
              Conjecture c = which == "c1"   ? Conjecture::C1
                             : which == "c2" ? Conjecture::C2
                                             : Conjecture::NewConjecture;
              return json_to_py(to_json(test_conjecture(k, c)));
          },
          py::arg("complex"), py::arg("which"));
    m.def("search_counterexamples",
          [](int n, int max_facets, int max_vertices, const std::string& which, bool up_to_iso) {
              Conjecture c = which == "c1"   ? Conjecture::C1
                             : which == "c2" ? Conjecture::C2
                                             : Conjecture::NewConjecture;
              EnumSpace space{n, max_facets, max_vertices, up_to_iso};
              auto outcome = search_counterexamples(space, c);
              py::list out;
              for (const auto& v : outcome.counterexamples) out.append(json_to_py(to_json(v)));
              return out;
          },
          py::arg("n"), py::arg("max_facets"), py::arg("max_vertices"), py::arg("which"),
          py::arg("up_to_iso") = true);

    m.def("fixtures", []() {
        py::dict out;
        for (const auto& f : builtin_fixtures()) {
            out[py::str(f.name)] = f.complex;
        }
        return out;
    });
}
