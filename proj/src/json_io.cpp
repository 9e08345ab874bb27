#include "hamfold/json_io.hpp"

#include <fstream>

namespace hamfold {

namespace {

// Labels in files may be strings, numbers, or coordinate arrays; normalize
// everything to the printed form.
std::string label_from_json(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_array()) {
    HVertex c;
    for (const auto& x : j) c.push_back(x.get<int>());
    return coords_to_string(c);
  }
  throw IoError("unsupported vertex label: " + j.dump());
}

Json vertex_to_json(const GraphRef& g, VertexId v) {
  if (const HammingGraph* h = g.hamming()) return Json(h->coords_of(v));
  return Json(g.general().label(v));
}

VertexId vertex_from_json(const GraphRef& g, const Json& j) {
  if (const HammingGraph* h = g.hamming()) {
    if (!j.is_array()) throw IoError("Hamming vertex must be a coordinate array");
    HVertex c;
    for (const auto& x : j) c.push_back(x.get<int>());
    return h->index_of(c);
  }
  return g.general().index_of_label(label_from_json(j));
}

}  // namespace

Json graph_to_json(const GraphRef& g) {
  if (const HammingGraph* h = g.hamming())
    return Json{{"type", "hamming"}, {"d", h->dimension()}, {"q", h->alphabet()}};
  const GeneralGraph& gg = g.general();
  Json vertices = Json::array();
  for (std::size_t v = 0; v < gg.vertex_count(); ++v) vertices.push_back(gg.label(v));
  Json edges = Json::array();
  for (std::size_t v = 0; v < gg.vertex_count(); ++v)
    for (VertexId w : gg.neighbors(static_cast<VertexId>(v)))
      if (static_cast<VertexId>(v) < w) edges.push_back({gg.label(v), gg.label(w)});
  return Json{{"type", "general"}, {"vertices", vertices}, {"edges", edges}};
}

GraphRef graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw IoError("graph object needs a \"type\"");
  std::string type = j.at("type").get<std::string>();
  if (type == "hamming") {
    if (!j.contains("d") || !j.contains("q")) throw IoError("hamming graph needs d and q");
    return GraphRef(HammingGraph(j.at("d").get<int>(), j.at("q").get<int>()));
  }
  if (type == "general") {
    auto g = std::make_shared<GeneralGraph>();
    for (const auto& v : j.at("vertices")) g->add_vertex(label_from_json(v));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw IoError("edge must be a pair");
      g->add_edge(label_from_json(e[0]), label_from_json(e[1]));
    }
    g->finalize();
    return GraphRef(std::shared_ptr<const GeneralGraph>(g));
  }
  throw IoError("unknown graph type: " + type);
}

Json walk_to_json(const Walk& w) {
  Json vertices = Json::array();
  for (VertexId v : w.vertices()) vertices.push_back(vertex_to_json(w.graph(), v));
  return Json{{"graph", graph_to_json(w.graph())}, {"vertices", vertices}};
}

Walk walk_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("vertices"))
    throw IoError("walk object needs \"graph\" and \"vertices\"");
  GraphRef g = graph_from_json(j.at("graph"));
  std::vector<VertexId> verts;
  for (const auto& v : j.at("vertices")) verts.push_back(vertex_from_json(g, v));
  return Walk(g, std::move(verts));
}

Json certificate_to_json(const MoveCertificate& c) {
  Json moves = Json::array();
  for (const auto& m : c.moves) {
    Json jm{{"k", m.pos}};
    switch (m.kind) {
      case MoveKind::Prune:
        jm["kind"] = "prune";
        break;
      case MoveKind::AntiPrune:
        jm["kind"] = "antiprune";
        jm["vertex"] = vertex_to_json(c.initial.graph(), m.vertex);
        break;
      case MoveKind::Spider:
        jm["kind"] = "spider";
        jm["vertex"] = vertex_to_json(c.initial.graph(), m.vertex);
        break;
    }
    moves.push_back(std::move(jm));
  }
  return Json{{"initial", walk_to_json(c.initial)}, {"moves", moves}};
}

MoveCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("initial") || !j.contains("moves"))
    throw IoError("certificate object needs \"initial\" and \"moves\"");
  Walk initial = walk_from_json(j.at("initial"));
  std::vector<ElementaryMove> moves;
  for (const auto& jm : j.at("moves")) {
    std::string kind = jm.at("kind").get<std::string>();
    std::size_t k = jm.at("k").get<std::size_t>();
    if (kind == "prune") {
      moves.push_back(ElementaryMove::prune(k));
    } else if (kind == "antiprune") {
      moves.push_back(
          ElementaryMove::anti_prune(k, vertex_from_json(initial.graph(), jm.at("vertex"))));
    } else if (kind == "spider") {
      moves.push_back
          (ElementaryMove::spider(k, vertex_from_json(initial.graph(), jm.at("vertex"))));
    } else {
      throw IoError("unknown move kind: " + kind);
    }
  }
  return {std::move(initial), std::move(moves)};
}

Json element_to_json(const GroupElement& e) { return Json(e.vector); }

GroupElement element_from_json(const GroupPresentation& p, const Json& j) {
  if (!j.is_array()) throw IoError("group element must be an integer array");
  std::vector<long long> v;
  for (const auto& x : j) v.push_back(x.get<long long>());
  if (p.kind == GroupKind::Trivial && v.empty()) return identity(p);
  return make_element(p, std::move(v));
}

namespace {

std::string presentation_name(GroupKind k) {
  switch (k) {
    case GroupKind::Trivial:
      return "trivial";
    case GroupKind::FreeAbelian:
      return "free_abelian";
    case GroupKind::ElemAbelian2:
      return "elem_abelian_2";
  }
  return "?";
}

}  // namespace

Json cover_to_json(const CoverGraph& c) {
  Json gens = Json::array();
  for (const auto& g : c.subgroup.generators()) gens.push_back(g.vector);
  Json labels = Json::array();
  for (const auto& l : c.labels) labels.push_back(l);
  Json edges = Json::array();
  for (std::size_t v = 0; v < c.graph->vertex_count(); ++v)
    for (VertexId w : c.graph->neighbors(static_cast<VertexId>(v)))
      if (static_cast<VertexId>(v) < w) edges.push_back({v, w});
  Json out{{"type", "cover"},
           {"base", graph_to_json(GraphRef(c.base))},
           {"presentation", presentation_name(c.subgroup.presentation().kind)},
           {"generators", gens},
           {"labels", labels},
           {"edges", edges}};
  if (c.window)
    out["window"] = *c.window;
  else
    out["window"] = nullptr;
  return out;
}

CoverGraph cover_from_json(const Json& j) {
  if (!j.is_object() || j.value("type", "") != "cover") throw IoError("expected a cover object");
  GraphRef baseref = graph_from_json(j.at("base"));
  const HammingGraph* h = baseref.hamming();
  if (!h) throw IoError("cover base must be a Hamming graph");
  GroupPresentation p = group_of(*h);
  std::vector<GroupElement> gens;
  for (const auto& g : j.at("generators")) gens.push_back(element_from_json(p, g));
  Subgroup s(p, gens);
  std::optional<int> window;
  if (j.contains("window") && !j.at("window").is_null()) window = j.at("window").get<int>();
  std::vector<Label> labels;
  for (const auto& l : j.at("labels")) {
    Label lab;
    for (const auto& x : l) lab.push_back(x.get<long long>());
    labels.push_back(std::move(lab));
  }
  if (!std::is_sorted(labels.begin(), labels.end())) throw IoError("cover labels must be sorted");
  const long long n = h->vertex_count();
  const long long total = n * static_cast<long long>(labels.size());
  auto graph = std::make_shared<GeneralGraph>();
  for (const Label& l : labels)
    for (VertexId bvert = 0; bvert < n; ++bvert)
      graph->add_vertex(coords_to_string(h->coords_of(bvert)) + "@" + label_to_string(l));
  std::vector<int> incident(total, 0);
  for (const auto& e : j.at("edges")) {
    VertexId u = e.at(0).get<VertexId>();
    VertexId v = e.at(1).get<VertexId>();
    if (u < 0 || v < 0 || u >= total || v >= total) throw IoError("cover edge out of range");
    graph->add_edge(u, v);
    ++incident[u];
    ++incident[v];
  }
  graph->finalize();
  CoverGraph c{*h, std::move(s), window, std::move(labels), graph, {}, {}};
  c.projection.resize(total);
  c.complete.resize(total);
  for (long long cv = 0; cv < total; ++cv) {
    c.projection[cv] = cv % n;
    c.complete[cv] = !window || incident[cv] == h->degree() ? 1 : 0;
  }
  return c;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw IoError("parse error in " + path + ": " + e.what());
  }
  return j;
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace hamfold
