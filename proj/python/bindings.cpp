#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamfold/cover.hpp"
#include "hamfold/dot.hpp"
#include "hamfold/group.hpp"
#include "hamfold/json_io.hpp"
#include "hamfold/oracle.hpp"
#include "hamfold/pleat.hpp"
#include "hamfold/reduction.hpp"

namespace py = pybind11;
using namespace hamfold;

namespace {

GraphRef as_ref(const py::object& graph) {
  if (py::isinstance<HammingGraph>(graph)) return GraphRef(graph.cast<HammingGraph>());
  return GraphRef(graph.cast<std::shared_ptr<const GeneralGraph>>());
}

Walk make_walk(const py::object& graph, const py::object& vertices) {
  if (py::isinstance<HammingGraph>(graph)) {
    auto g = graph.cast<HammingGraph>();
    std::vector<HVertex> coords;
    for (const auto& v : vertices) coords.push_back(v.cast<HVertex>());
    return Walk::from_coords(g, coords);
  }
  auto g = graph.cast<std::shared_ptr<const GeneralGraph>>();
  std::vector<std::string> labels;
  for (const auto& v : vertices) labels.push_back(v.cast<std::string>());
  return Walk::from_labels(g, labels);
}

std::string kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Prune:
      return "prune";
    case MoveKind::AntiPrune:
      return "antiprune";
    case MoveKind::Spider:
      return "spider";
  }
  return "?";
}

Subgroup make_subgroup_py(const HammingGraph& g,
                          const std::vector<std::vector<long long>>& gens) {
  GroupPresentation p = group_of(g);
  std::vector<GroupElement> elems;
  for (const auto& v : gens) elems.push_back(make_element(p, v));
  return Subgroup(p, elems);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "walk homotopy in Hamming graphs: elementary moves, reduction "
            "certificates, fundamental-group classes, covers, and a "
            "brute-force oracle";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_IOError);

  py::class_<HammingGraph>(m, "HammingGraph")
      .def(py::init<int, int>(), py::arg("d"), py::arg("q"))
      .def_property_readonly("d", &HammingGraph::dimension)
      .def_property_readonly("q", &HammingGraph::alphabet)
      .def_property_readonly("vertex_count", &HammingGraph::vertex_count)
      .def_property_readonly("degree", &HammingGraph::degree)
      .def("origin", [](const HammingGraph& g) { return g.coords_of(g.origin()); })
      .def("coords_of", &HammingGraph::coords_of)
      .def("index_of", &HammingGraph::index_of)
      .def("adjacent",
           [](const HammingGraph& g, const HVertex& u, const HVertex& v) {
             return g.adjacent_coords(u, v);
           })
      .def("neighbors",
           [](const HammingGraph& g, const HVertex& v) {
             std::vector<HVertex> out;
             for (VertexId w : g.neighbors(g.index_of(v))) out.push_back(g.coords_of(w));
             return out;
           })
      .def("__eq__", [](const HammingGraph& a, const HammingGraph& b) { return a == b; })
      .def("__repr__", [](const HammingGraph& g) {
        return "HammingGraph(d=" + std::to_string(g.dimension()) +
               ", q=" + std::to_string(g.alphabet()) + ")";
      });

  py::class_<GeneralGraph, std::shared_ptr<GeneralGraph>>(m, "GeneralGraph")
      .def(py::init([](const std::vector<std::string>& labels,
                       const std::vector<std::pair<std::string, std::string>>& edges) {
             return std::make_shared<GeneralGraph>(make_general_graph(labels, edges));
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("vertex_count", &GeneralGraph::vertex_count)
      .def_property_readonly("edge_count", &GeneralGraph::edge_count)
      .def("label", &GeneralGraph::label)
      .def("index_of_label", &GeneralGraph::index_of_label)
      .def("adjacent",
           [](const GeneralGraph& g, const std::string& u, const std::string& v) {
             return g.adjacent(g.index_of_label(u), g.index_of_label(v));
           })
      .def("neighbors", [](const GeneralGraph& g, const std::string& v) {
        std::vector<std::string> out;
        for (VertexId w : g.neighbors(g.index_of_label(v))) out.push_back(g.label(w));
        return out;
      });

  m.def("materialize",
        [](const HammingGraph& g, long long max_vertices) {
          return std::make_shared<GeneralGraph>(materialize(g, max_vertices));
        },
        py::arg("graph"), py::arg("max_vertices") = kDefaultMaxVertices);
  m.def("neighborhood", [](const std::shared_ptr<const GeneralGraph>& g, const std::string& v) {
    std::vector<std::string> out;
    for (VertexId w : g->neighbors(g->index_of_label(v))) out.push_back(g->label(w));
    return out;
  });
  m.def("extended_neighborhood",
        [](const std::shared_ptr<const GeneralGraph>& g, const std::string& v) {
          std::vector<std::vector<std::string>> out;
          for (const auto& walk2 : extended_neighborhood(*g, g->index_of_label(v)))
            out.push_back({g->label(walk2[0]), g->label(walk2[1]), g->label(walk2[2])});
          return out;
        });

  py::class_<Walk>(m, "Walk")
      .def(py::init(&make_walk), py::arg("graph"), py::arg("vertices"))
      .def_property_readonly("length", &Walk::length)
      .def_property_readonly("closed", &Walk::closed)
      .def("vertices",
           [](const Walk& w) {
             py::list out;
             if (const HammingGraph* h = w.graph().hamming()) {
               for (VertexId v : w.vertices()) out.append(h->coords_of(v));
             } else {
               for (VertexId v : w.vertices()) out.append(w.graph().general().label(v));
             }
             return out;
           })
      .def("__eq__", [](const Walk& a, const Walk& b) { return a == b; })
      .def("__len__", &Walk::length)
      .def("__repr__", [](const Walk& w) { return "Walk(" + w.to_string() + ")"; });

  py::class_<ElementaryMove>(m, "ElementaryMove")
      .def_property_readonly("kind", [](const ElementaryMove& m_) { return kind_name(m_.kind); })
      .def_readonly("pos", &ElementaryMove::pos)
      .def_readonly("vertex", &ElementaryMove::vertex)
      .def("__repr__", [](const ElementaryMove& m_) {
        std::string s = kind_name(m_.kind) + "@" + std::to_string(m_.pos);
        if (m_.kind != MoveKind::Prune) s += "->" + std::to_string(m_.vertex);
        return s;
      });
  m.def("prune_move", &ElementaryMove::prune, py::arg("k"));
  m.def("anti_prune_move", &ElementaryMove::anti_prune, py::arg("k"), py::arg("vertex"));
  m.def("spider_move", &ElementaryMove::spider, py::arg("k"), py::arg("vertex"));

  py::class_<MoveCertificate>(m, "MoveCertificate")
      .def_readonly("initial", &MoveCertificate::initial)
      .def_readonly("moves", &MoveCertificate::moves);

  py::class_<ReplayResult>(m, "ReplayResult")
      .def_readonly("ok", &ReplayResult::ok)
      .def_readonly("final", &ReplayResult::final)
      .def_readonly("failed_at", &ReplayResult::failed_at)
      .def_readonly("reason", &ReplayResult::reason);

  m.def("validate_walk", &validate_walk);
  m.def("concat", &concat);
  m.def("inverse", &inverse);
  m.def("spider_options", &spider_options, py::arg("walk"), py::arg("k"));
  m.def("apply_move", &apply_move);
  m.def("enumerate_moves", &enumerate_moves, py::arg("walk"), py::arg("max_walk_length"));
  m.def("verify_certificate", &verify_certificate);
  m.def("change_counts", &change_counts);
  m.def("ground_walk", &ground_walk, py::arg("graph"), py::arg("coordinate"), py::arg("a") = 1,
        py::arg("b") = 2);

  py::class_<GroupPresentation>(m, "GroupPresentation")
      .def_property_readonly("kind",
                             [](const GroupPresentation& p) {
                               switch (p.kind) {
                                 case GroupKind::Trivial:
                                   return "trivial";
                                 case GroupKind::FreeAbelian:
                                   return "free_abelian";
                                 case GroupKind::ElemAbelian2:
                                   return "elem_abelian_2";
                               }
                               return "?";
                             })
      .def_readonly("rank", &GroupPresentation::rank)
      .def("__eq__", [](const GroupPresentation& a, const GroupPresentation& b) { return a == b; })
      .def("__repr__", &GroupPresentation::to_string);

  py::class_<GroupElement>(m, "GroupElement")
      .def_readonly("presentation", &GroupElement::presentation)
      .def_readonly("vector", &GroupElement::vector)
      .def("__eq__", [](const GroupElement& a, const GroupElement& b) { return a == b; })
      .def("__repr__", &GroupElement::to_string);

  m.def("group_of", &group_of);
  m.def("identity", &identity);
  m.def("make_element", &make_element);
  m.def("compose", &compose);
  m.def("invert", &invert);
  m.def("is_identity", &is_identity);
  m.def("class_of", &class_of);
  m.def("canonical_walk", &canonical_walk);
  m.def("equivalent", &equivalent);

  py::class_<ReduceResult>(m, "ReduceResult")
      .def_readonly("cls", &ReduceResult::cls)
      .def_readonly("certificate", &ReduceResult::certificate);
  m.def("reduce", &reduce);
  m.def("reduce_q2", &reduce_q2);
  m.def("reduce_class_only", &reduce_class_only);
  m.def("reorder_changes", &reorder_changes);

  py::class_<Subgroup>(m, "Subgroup")
      .def(py::init(&make_subgroup_py), py::arg("graph"), py::arg("generators"))
      .def_property_readonly("finite_index", &Subgroup::finite_index)
      .def_property_readonly("basis", &Subgroup::basis)
      .def("index", &Subgroup::index)
      .def("reduce", &Subgroup::reduce)
      .def("contains", &Subgroup::contains)
      .def("cosets", &Subgroup::cosets);

  py::class_<CoverGraph>(m, "CoverGraph")
      .def_property_readonly("fibre", &CoverGraph::fibre)
      .def_property_readonly("vertex_count",
                             [](const CoverGraph& c) { return c.graph->vertex_count(); })
      .def_property_readonly("labels", [](const CoverGraph& c) { return c.labels; })
      .def_property_readonly(
          "graph", [](const CoverGraph& c) { return std::const_pointer_cast<GeneralGraph>(
                                                 std::static_pointer_cast<const GeneralGraph>(
                                                     c.graph)); });

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("ok", &VerifyReport::ok)
      .def_readonly("detail", &VerifyReport::detail)
      .def("__bool__", [](const VerifyReport& r) { return r.ok; });

  m.def("build_cover",
        [](const HammingGraph& g, const Subgroup& s, std::optional<int> window,
           long long max_vertices) { return build_cover(g, s, window, max_vertices); },
        py::arg("graph"), py::arg("subgroup"), py::arg("window") = std::nullopt,
        py::arg("max_vertices") = kDefaultMaxVertices);
  m.def("verify_cover", [](const CoverGraph& c) { return verify_cover(c); });
  m.def("verify_homotopy_cover", [](const CoverGraph& c) { return verify_homotopy_cover(c); });
  m.def("verify_cover_morphism",
        [](const std::shared_ptr<const GeneralGraph>& cover,
           const std::shared_ptr<const GeneralGraph>& base,
           const std::vector<VertexId>& projection) {
          return verify_cover(*cover, *base, projection);
        });
  m.def("verify_homotopy_cover_morphism",
        [](const std::shared_ptr<const GeneralGraph>& cover,
           const std::shared_ptr<const GeneralGraph>& base,
           const std::vector<VertexId>& projection) {
          return verify_homotopy_cover(*cover, *base, projection);
        });
  m.def("lift_walk", &lift_walk);
  m.def("monodromy", &monodromy);

  m.def("dominated_pairs", [](const std::shared_ptr<const GeneralGraph>& g) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [v, w] : dominated_pairs(*g)) out.emplace_back(g->label(v), g->label(w));
    return out;
  });
  m.def("is_pleat", [](const std::shared_ptr<const GeneralGraph>& g) { return is_pleat(*g); });
  py::class_<FoldStep>(m, "FoldStep")
      .def_readonly("removed", &FoldStep::removed)
      .def_readonly("dominated_by", &FoldStep::dominated_by);
  m.def("fold_to_pleat", [](const std::shared_ptr<const GeneralGraph>& g) {
    FoldResult r = fold_to_pleat(*g);
    return std::make_pair(std::make_shared<GeneralGraph>(std::move(r.graph)), r.log);
  });

  py::class_<SearchBudget>(m, "SearchBudget")
      .def(py::init([](std::size_t max_walk_length, long long max_states, long long max_depth) {
             return SearchBudget{max_walk_length, max_states, max_depth};
           }),
           py::arg("max_walk_length") = 12, py::arg("max_states") = 1'000'000,
           py::arg("max_depth") = std::numeric_limits<long long>::max())
      .def_readwrite("max_walk_length", &SearchBudget::max_walk_length)
      .def_readwrite("max_states", &SearchBudget::max_states)
      .def_readwrite("max_depth", &SearchBudget::max_depth);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("equivalent", &Verdict::equivalent)
      .def_readonly("certificate", &Verdict::certificate)
      .def_readonly("states_explored", &Verdict::states_explored)
      .def("__bool__", [](const Verdict& v) { return v.equivalent; });

  m.def("bfs_equivalent", &bfs_equivalent, py::arg("walk1"), py::arg("walk2"),
        py::arg("budget") = SearchBudget{});
  m.def("enumerate_classes",
        [](const py::object& graph, const py::object& base, std::size_t max_len,
           const SearchBudget& budget) {
          GraphRef g = as_ref(graph);
          VertexId b = 0;
          if (!base.is_none()) {
            if (const HammingGraph* h = g.hamming())
              b = h->index_of(base.cast<HVertex>());
            else
              b = g.general().index_of_label(base.cast<std::string>());
          }
          return enumerate_classes(g, b, max_len, budget);
        },
        py::arg("graph"), py::arg("base") = py::none(), py::arg("max_len") = 6,
        py::arg("budget") = SearchBudget{});

  m.def("walk_to_json", [](const Walk& w) { return walk_to_json(w).dump(); });
  m.def("walk_from_json", [](const std::string& s) { return walk_from_json(Json::parse(s)); });
  m.def("certificate_to_json",
        [](const MoveCertificate& c) { return certificate_to_json(c).dump(); });
  m.def("certificate_from_json",
        [](const std::string& s) { return certificate_from_json(Json::parse(s)); });
  m.def("cover_to_json", [](const CoverGraph& c) { return cover_to_json(c).dump(); });
  m.def("cover_from_json", [](const std::string& s) { return cover_from_json(Json::parse(s)); });
  m.def("graph_to_dot", [](const py::object& graph) { return graph_to_dot(as_ref(graph)); });
  m.def("cover_to_dot", &cover_to_dot);
}
