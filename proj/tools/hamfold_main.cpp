// hamfold: walk homotopy in Hamming graphs from the command line.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"

#include "hamfold/cover.hpp"
#include "hamfold/dot.hpp"
#include "hamfold/group.hpp"
#include "hamfold/json_io.hpp"
#include "hamfold/oracle.hpp"
#include "hamfold/pleat.hpp"
#include "hamfold/reduction.hpp"

using namespace hamfold;

namespace {

long long max_vertices_bound() {
  if (const char* env = std::getenv("HAMFOLD_MAX_VERTICES"))
    return std::strtoll(env, nullptr, 10);
  return kDefaultMaxVertices;
}

// Graph arguments: "H(d,q)", "hamming:d,q", or a JSON file.
GraphRef parse_graph(const std::string& spec) {
  int d = 0, q = 0;
  if (std::sscanf(spec.c_str(), "H(%d,%d)", &d, &q) == 2 ||
      std::sscanf(spec.c_str(), "hamming:%d,%d", &d, &q) == 2)
    return GraphRef(HammingGraph(d, q));
  return graph_from_json(load_json(spec));
}

std::vector<long long> parse_vector(std::string s) {
  for (char& c : s)
    if (c == '(' || c == ')' || c == ',' || c == ';') c = ' ';
  std::istringstream in(s);
  std::vector<long long> out;
  long long x;
  while (in >> x) out.push_back(x);
  return out;
}

HVertex parse_coords(const std::string& s) {
  HVertex out;
  for (long long x : parse_vector(s)) out.push_back(static_cast<int>(x));
  return out;
}

// Walk arguments: a JSON file, or an inline "v;v;...;v" list where each v is
// a coordinate tuple (Hamming) or a label (general).
Walk parse_walk(const GraphRef& g, const std::string& spec) {
  bool json_name = spec.size() > 5 && spec.rfind(".json") == spec.size() - 5;
  if (json_name || std::filesystem::exists(spec)) {
    Walk w = walk_from_json(load_json(spec));
    if (!w.graph().same_graph(g))
      throw DomainError("walk file refers to a different graph");
    return w;
  }
  std::vector<VertexId> verts;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ';')) {
    if (tok.empty()) continue;
    if (const HammingGraph* h = g.hamming())
      verts.push_back(h->index_of(parse_coords(tok)));
    else
      verts.push_back(g.general().index_of_label(tok));
  }
  return Walk(g, std::move(verts));
}

std::vector<GroupElement> parse_generators(const GroupPresentation& p, const std::string& spec) {
  std::vector<GroupElement> gens;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ';')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    gens.push_back(make_element(p, parse_vector(tok)));
  }
  return gens;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------------------
// repro: re-derive the worked examples end to end.

struct ReproOutcome {
  bool ok;
  std::string detail;
};

ReproOutcome repro_prune_example() {
  auto g = std::make_shared<GeneralGraph>(make_general_graph(
      {"a", "b", "c", "d", "e"},
      {{"d", "a"}, {"a", "c"}, {"c", "e"}, {"e", "d"}, {"c", "b"}}));
  Walk from = Walk::from_labels(g, {"a", "c", "b", "c", "e"});
  Walk to = Walk::from_labels(g, {"a", "d", "e"});
  Verdict v = bfs_equivalent(from, to, SearchBudget{8, 100000, 100});
  if (!v.equivalent) return {false, "no certificate found"};
  ReplayResult r = verify_certificate(*v.certificate);
  if (!r.ok || r.final != to) return {false, "certificate did not replay"};
  return {true, "certificate with " + std::to_string(v.certificate->moves.size()) +
                    " moves to " + to.to_string()};
}

ReproOutcome repro_h22_not_pleat() {
  GeneralGraph g = materialize(HammingGraph(2, 2));
  auto pairs = dominated_pairs(g);
  bool found = false;
  for (auto [v, w] : pairs)
    if (g.label(v) == "(0,0)" && g.label(w) == "(1,1)") found = true;
  if (!found || is_pleat(g)) return {false, "expected dominated pair ((0,0),(1,1))"};
  return {true, "dominated pair ((0,0),(1,1)); H(2,2) is not a pleat"};
}

ReproOutcome repro_h32_trivial() {
  HammingGraph g(3, 2);
  Walk hexagon = Walk::from_coords(g, {{0, 0, 0},
                                       {1, 0, 0},
                                       {1, 1, 0},
                                       {1, 1, 1},
                                       {0, 1, 1},
                                       {0, 0, 1},
                                       {0, 0, 0}});
  MoveCertificate cert = reduce_q2(hexagon);
  ReplayResult r = verify_certificate(cert);
  if (!r.ok || r.final.length() != 0) return {false, "hexagon did not reduce"};
  auto classes = enumerate_classes(GraphRef(g), g.origin(), 6,
                                   SearchBudget{10, 500000,
                                                std::numeric_limits<long long>::max()});
  if (classes.size() != 1) return {false, "expected a single class"};
  return {true, "hexagon reduces to (0,0,0) in " + std::to_string(cert.moves.size()) +
                    " moves; one class of closed walks"};
}

ReproOutcome repro_generate_reduction() {
  HammingGraph g(2, 3);
  Walk w = Walk::from_coords(
      g, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}, {0, 1}, {0, 0}});
  ReduceResult r = reduce(w);
  ReplayResult replay = verify_certificate(r.certificate);
  if (r.cls.vector != std::vector<long long>{1, 0}) return {false, "wrong class"};
  if (!replay.ok || replay.final != ground_walk(g, 0))
    return {false, "certificate does not end at the ground walk"};
  return {true, "class (1,0); certificate ends at " + replay.final.to_string()};
}

ReproOutcome repro_commutativity() {
  HammingGraph g(2, 3);
  Walk u1u2 = concat(ground_walk(g, 0), ground_walk(g, 1));
  Walk u2u1 = concat(ground_walk(g, 1), ground_walk(g, 0));
  if (!equivalent(u1u2, u2u1)) return {false, "classes differ"};
  Walk swapped = u1u2;
  auto moves = commute_ground_factors(swapped, 0);
  if (swapped != u2u1) return {false, "spider sequence did not swap the factors"};
  Verdict v = bfs_equivalent(u1u2, u2u1, SearchBudget{8, 500000, 1000});
  if (!v.equivalent) return {false, "oracle found no certificate"};
  return {true, "swapped by " + std::to_string(moves.size()) +
                    " spiders; oracle certificate with " +
                    std::to_string(v.certificate->moves.size()) + " moves"};
}

ReproOutcome repro_order_q3() {
  HammingGraph g(2, 3);
  Walk u1 = ground_walk(g, 0);
  GroupElement square = class_of(concat(u1, u1));
  if (square.vector != std::vector<long long>{2, 0} || is_identity(square))
    return {false, "square of the generator should be (2,0)"};
  // the strip cover: vertical generator killed, horizontal free
  CoverGraph strip = build_cover(g, Subgroup(group_of(g), {make_element(group_of(g), {0, 1})}),
                                 3, max_vertices_bound());
  if (lift_walk(strip, u1, Label{0, 0}).closed())
    return {false, "horizontal generator lifted closed in the strip cover"};
  if (!lift_walk(strip, ground_walk(g, 1), Label{0, 0}).closed())
    return {false, "vertical generator lifted open in the strip cover"};
  return {true, "square has class (2,0); strip cover lifts: horizontal open, vertical closed"};
}

ReproOutcome repro_order_q4() {
  HammingGraph g(2, 4);
  Walk square = concat(ground_walk(g, 0), ground_walk(g, 0));
  if (!is_identity(class_of(square))) return {false, "square is not trivial"};
  Verdict v = bfs_equivalent(square, Walk::trivial(GraphRef(g), g.origin()),
                             SearchBudget{10, 500000, 1000});
  if (!v.equivalent || !verify_certificate(*v.certificate).ok)
    return {false, "no verified contraction certificate"};
  return {true, "generator has order 2; contraction certificate with " +
                    std::to_string(v.certificate->moves.size()) + " moves"};
}

ReproOutcome repro_cover_case(int q, const std::vector<std::vector<long long>>& gens,
                              long long vertices, long long fibre, const char* what) {
  HammingGraph g(2, q);
  GroupPresentation p = group_of(g);
  std::vector<GroupElement> elems;
  for (const auto& v : gens) elems.push_back(make_element(p, v));
  CoverGraph c = build_cover(g, Subgroup(p, elems));
  if (static_cast<long long>(c.graph->vertex_count()) != vertices || c.fibre() != fibre)
    return {false, std::string(what) + ": wrong size"};
  if (!verify_cover(c).ok || !verify_homotopy_cover(c).ok)
    return {false, std::string(what) + ": verification failed"};
  return {true, std::string(what) + ": " + std::to_string(vertices) + " vertices, fibre " +
                    std::to_string(fibre) + ", both verifiers pass"};
}

ReproOutcome repro_uc_h24() {
  ReproOutcome base = repro_cover_case(4, {}, 64, 4, "universal cover of H(2,4)");
  if (!base.ok) return base;
  HammingGraph g(2, 4);
  CoverGraph c = build_cover(g, Subgroup(group_of(g), {}));
  Walk u1 = ground_walk(g, 0);
  if (lift_walk(c, u1, Label{0, 0}).closed()) return {false, "generator lifted closed"};
  if (!lift_walk(c, concat(u1, u1), Label{0, 0}).closed())
    return {false, "squared generator lifted open"};
  return {true, base.detail + "; generators lift open, their squares closed"};
}

ReproOutcome repro_hcover_pentagon() {
  GeneralGraph base = make_general_graph(
      {"a", "b", "c", "d", "e", "b'"},
      {{"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}, {"a", "b"}, {"b'", "a"}, {"b'", "c"}});
  GeneralGraph cover = make_general_graph(
      {"a1", "b1", "c1", "d1", "e1", "b'1", "a2", "b2", "c2", "d2", "e2", "b'2"},
      {{"b1", "c1"},
       {"c1", "d1"},
       {"d1", "e1"},
       {"e1", "a2"},
       {"a2", "b2"},
       {"b2", "c2"},
       {"c2", "d2"},
       {"d2", "e2"},
       {"e2", "a1"},
       {"a1", "b1"},
       {"b'1", "a1"},
       {"b'1", "c1"},
       {"b'2", "a2"},
       {"b'2", "c2"}});
  std::vector<VertexId> projection;
  for (std::size_t v = 0; v < cover.vertex_count(); ++v) {
    std::string l = cover.label(v);
    projection.push_back(base.index_of_label(l.substr(0, l.size() - 1)));
  }
  if (!verify_cover(cover, base, projection).ok) return {false, "covering axioms failed"};
  if (!verify_homotopy_cover(cover, base, projection).ok)
    return {false, "homotopy covering axioms failed"};
  return {true, "12-vertex double cover of the pentagon-with-chord is a homotopy cover"};
}

ReproOutcome repro_change_commute() {
  HammingGraph g(2, 3);
  Walk w = Walk::from_coords(g, {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}, {0, 0}});
  auto [v, move] = reorder_changes(w, 1);
  Walk expected = Walk::from_coords(g, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {0, 1}, {0, 0}});
  if (v != expected) return {false, "swap produced " + v.to_string()};
  if (!equivalent(w, v)) return {false, "swap changed the class"};
  return {true, "one spider swaps the consecutive coordinate changes: " + v.to_string()};
}

ReproOutcome repro_uc_h23_window() {
  HammingGraph g(2, 3);
  CoverGraph uc = build_cover(g, Subgroup(group_of(g), {}), 2, max_vertices_bound());
  if (!verify_cover(uc).ok || !verify_homotopy_cover(uc).ok)
    return {false, "windowed universal cover failed verification"};
  if (lift_walk(uc, ground_walk(g, 0), Label{0, 0}).closed() ||
      lift_walk(uc, ground_walk(g, 1), Label{0, 0}).closed())
    return {false, "a generator lifted closed"};
  Walk contractible = Walk::from_coords(g, {{0, 0}, {1, 0}, {1, 1}, {1, 0}, {0, 0}});
  if (!lift_walk(uc, contractible, Label{0, 0}).closed())
    return {false, "a trivial-class walk lifted open"};
  return {true, "window 2: 225 vertices; interior verified; generators lift open"};
}

int run_repro(const std::string& id) {
  struct Entry {
    const char* id;
    ReproOutcome (*run)();
  };
  static const Entry catalog[] = {
      {"prune-example", repro_prune_example},
      {"h22-not-pleat", repro_h22_not_pleat},
      {"h32-trivial", repro_h32_trivial},
      {"generate-reduction", repro_generate_reduction},
      {"commutativity", repro_commutativity},
      {"order-q3", repro_order_q3},
      {"order-q4", repro_order_q4},
      {"cover-2h",
       [] { return repro_cover_case(3, {{2, 0}, {0, 1}}, 18, 2, "two-block cover"); }},
      {"cover-3h2v",
       [] { return repro_cover_case(3, {{3, 0}, {0, 2}}, 54, 6, "six-block cover"); }},
      {"uc-h24", repro_uc_h24},
      {"hcover-pentagon", repro_hcover_pentagon},
      {"change-commute", repro_change_commute},
      {"uc-h23-window", repro_uc_h23_window},
  };
  int failures = 0;
  bool matched = false;
  for (const Entry& e : catalog) {
    if (id != "all" && id != e.id) continue;
    matched = true;
    ReproOutcome outcome{false, "exception"};
    try {
      outcome = e.run();
    } catch (const std::exception& ex) {
      outcome = {false, ex.what()};
    }
    std::cout << (outcome.ok ? "PASS " : "FAIL ") << e.id << ": " << outcome.detail << "\n";
    failures += !outcome.ok;
  }
  if (!matched) throw DomainError("unknown repro id: " + id);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walk homotopy in Hamming graphs: moves, reduction certificates, "
               "fundamental-group classes, covers, lifting, and a brute-force oracle"};
  app.require_subcommand(1);

  std::string graph_spec, walk_spec, walk2_spec, vector_spec, out_path, dot_path, cert_path;
  std::string cover_path, start_spec, base_spec, gens_spec, repro_id = "all";
  int window = -1;
  bool no_certificate = false;
  std::size_t max_len = 12;
  long long max_states = 1'000'000;
  long long max_depth = std::numeric_limits<long long>::max();

  auto* graph_cmd = app.add_subcommand("graph", "inspect a graph");
  graph_cmd->add_option("graph", graph_spec)->required();
  graph_cmd->add_option("--dot", dot_path, "write a DOT rendering");

  auto* walk_cmd = app.add_subcommand("walk", "walk utilities");
  walk_cmd->require_subcommand(1);
  auto* walk_validate = walk_cmd->add_subcommand("validate", "check consecutive adjacency");
  walk_validate->add_option("graph", graph_spec)->required();
  walk_validate->add_option("walk", walk_spec)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "normal form of a closed based walk");
  reduce_cmd->add_option("graph", graph_spec)->required();
  reduce_cmd->add_option("walk", walk_spec)->required();
  reduce_cmd->add_option("--certificate", cert_path, "write the move certificate");
  reduce_cmd->add_flag("--no-certificate", no_certificate, "class only, skip the certificate");

  auto* class_cmd = app.add_subcommand("class", "homotopy class of a closed walk");
  class_cmd->add_option("graph", graph_spec)->required();
  class_cmd->add_option("walk", walk_spec)->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "compare two closed walks");
  equiv_cmd->add_option("graph", graph_spec)->required();
  equiv_cmd->add_option("walk1", walk_spec)->required();
  equiv_cmd->add_option("walk2", walk2_spec)->required();

  auto* canon_cmd = app.add_subcommand("canon", "canonical walk of a group element");
  canon_cmd->add_option("graph", graph_spec)->required();
  canon_cmd->add_option("vector", vector_spec)->required();
  canon_cmd->add_option("--out", out_path, "write the walk as JSON");

  auto* group_cmd = app.add_subcommand("group", "fundamental group of a Hamming graph");
  group_cmd->add_option("graph", graph_spec)->required();

  auto* cover_cmd = app.add_subcommand("cover", "quotient covers");
  cover_cmd->require_subcommand(1);
  auto* cover_build = cover_cmd->add_subcommand("build", "build a quotient cover");
  cover_build->add_option("graph", graph_spec)->required();
  cover_build->add_option("--gens", gens_spec, "subgroup generators, e.g. \"(2,0);(0,1)\"");
  cover_build->add_option("--window", window, "label box radius for infinite covers");
  cover_build->add_option("--out", out_path, "write the cover as JSON");
  cover_build->add_option("--dot", dot_path, "write a DOT rendering");
  auto* cover_verify = cover_cmd->add_subcommand("verify", "verify a cover file");
  cover_verify->add_option("cover", cover_path)->required();

  auto* lift_cmd = app.add_subcommand("lift", "lift a walk into a cover");
  lift_cmd->add_option("cover", cover_path)->required();
  lift_cmd->add_option("walk", walk_spec)->required();
  lift_cmd->add_option("--start", start_spec, "starting coset label, e.g. \"(0,0)\"");

  auto* pleat_cmd = app.add_subcommand("pleat", "stiffness verdict and dominated pairs");
  pleat_cmd->add_option("graph", graph_spec)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force referee");
  oracle_cmd->require_subcommand(1);
  auto* oracle_equiv = oracle_cmd->add_subcommand("equiv", "search for a move certificate");
  oracle_equiv->add_option("graph", graph_spec)->required();
  oracle_equiv->add_option("walk1", walk_spec)->required();
  oracle_equiv->add_option("walk2", walk2_spec)->required();
  oracle_equiv->add_option("--max-len", max_len, "anti-prune cap");
  oracle_equiv->add_option("--max-states", max_states);
  oracle_equiv->add_option("--max-depth", max_depth);
  oracle_equiv->add_option("--certificate", cert_path, "write the certificate when found");
  auto* oracle_classes = oracle_cmd->add_subcommand("classes", "partition closed walks");
  oracle_classes->add_option("graph", graph_spec)->required();
  oracle_classes->add_option("--base", base_spec, "basepoint (default: the origin / vertex 0)");
  oracle_classes->add_option("--max-len", max_len, "seed walk length bound");
  oracle_classes->add_option("--max-states", max_states);

  auto* repro_cmd = app.add_subcommand("repro", "re-derive the worked examples");
  repro_cmd->add_option("id", repro_id, "catalog id or \"all\"");

  auto* export_cmd = app.add_subcommand("export", "exporters");
  export_cmd->require_subcommand(1);
  auto* export_dot = export_cmd->add_subcommand("dot", "DOT rendering of a graph or cover");
  export_dot->add_option("object", graph_spec)->required();
  export_dot->add_option("-o,--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (graph_cmd->parsed()) {
      GraphRef g = parse_graph(graph_spec);
      if (const HammingGraph* h = g.hamming()) {
        std::cout << "hamming d=" << h->dimension() << " q=" << h->alphabet()
                  << " vertices=" << h->vertex_count() << " degree=" << h->degree() << "\n";
      } else {
        std::cout << "general vertices=" << g.general().vertex_count()
                  << " edges=" << g.general().edge_count() << "\n";
      }
      if (!dot_path.empty()) write_text(dot_path, graph_to_dot(g, "G", max_vertices_bound()));
      return 0;
    }
    if (walk_validate->parsed()) {
      GraphRef g = parse_graph(graph_spec);
      Walk w = parse_walk(g, walk_spec);
      bool ok = validate_walk(w);
      std::cout << (ok ? "valid" : "invalid") << "\n";
      return ok ? 0 : 1;
    }
    if (reduce_cmd->parsed()) {
      GraphRef g = parse_graph(graph_spec);
      if (!g.is_hamming()) throw DomainError("reduce needs a Hamming graph");
      Walk w = parse_walk(g, walk_spec);
      if (no_certificate) {
        std::cout << "class " << reduce_class_only(w).to_string() << "\n";
        return 0;
      }
      ReduceResult r = reduce(w);
      std::cout << "class " << r.cls.to_string() << "\n";
      std::cout << "moves " << r.certificate.moves.size() << "\n";
      std::cout << "final " << verify_certificate(r.certificate).final.to_string() << "\n";
      if (!cert_path.empty()) save_json(cert_path, certificate_to_json(r.certificate));
      return 0;
    }
    if (class_cmd->parsed()) {
      GraphRef g = parse_graph(graph_spec);
      GroupElement e = class_of(parse_walk(g, walk_spec));
      std::cout << e.presentation.to_string() << " " << e.to_string() << "\n";
      return 0;
    }
    if (equiv_cmd->parsed()) {
      GraphRef g = parse_graph(graph_spec);
      bool eq = equivalent(parse_walk(g, walk_spec), parse_walk(g, walk2_spec));
      std::cout << (eq ? "equivalent" : "not-equivalent") << "\n";
      return 0;
    }
    if (canon_cmd->parsed()) {
      GraphRef g = parse_graph(graph_spec);
      const HammingGraph* h = g.hamming();
      if (!h) throw DomainError("canon needs a Hamming graph");
      Walk w = canonical_walk(*h, make_element(group_of(*h), parse_vector(vector_spec)));
      std::cout << w.to_string() << "\n";
      if (!out_path.empty()) save_json(out_path, walk_to_json(w));
      return 0;
    }
    if (group_cmd->parsed()) {
      GraphRef g = parse_graph(graph_spec);
      const HammingGraph* h = g.hamming();
      if (!h) throw DomainError("group classification needs a Hamming graph");
      std::cout << group_of(*h).to_string() << "\n";
      return 0;
    }
    if (cover_build->parsed()) {
      GraphRef g = parse_graph(graph_spec);
      const HammingGraph* h = g.hamming();
      if (!h) throw DomainError("covers need a Hamming base graph");
      GroupPresentation p = group_of(*h);
      Subgroup s(p, parse_generators(p, gens_spec));
      std::optional<int> win;
      if (window >= 0) win = window;
      CoverGraph c = build_cover(*h, s, win, max_vertices_bound());
      std::cout << "vertices " << c.graph->vertex_count() << "\n";
      std::cout << "fibre " << c.fibre() << "\n";
      std::cout << "index " << (s.finite_index() ? std::to_string(s.index()) : "infinite")
                << "\n";
      if (!out_path.empty()) save_json(out_path, cover_to_json(c));
      if (!dot_path.empty()) write_text(dot_path, cover_to_dot(c));
      return 0;
    }
    if (cover_verify->parsed()) {
      CoverGraph c = cover_from_json(load_json(cover_path));
      VerifyReport cov = verify_cover(c);
      VerifyReport hoc = verify_homotopy_cover(c);
      std::cout << "cover " << (cov.ok ? "ok" : "FAIL") << " (" << cov.detail << ")\n";
      std::cout << "homotopy-cover " << (hoc.ok ? "ok" : "FAIL") << " (" << hoc.detail << ")\n";
      return cov.ok && hoc.ok ? 0 : 1;
    }
    if (lift_cmd->parsed()) {
      CoverGraph c = cover_from_json(load_json(cover_path));
      Walk w = parse_walk(GraphRef(c.base), walk_spec);
      Label start(c.subgroup.presentation().kind == GroupKind::Trivial ? 0 : c.base.dimension(),
                  0);
      if (!start_spec.empty()) start = parse_vector(start_spec);
      Walk lifted = lift_walk(c, w, start);
      std::cout << "lift " << lifted.to_string() << "\n";
      std::cout << (lifted.closed() ? "closed" : "open") << "\n";
      if (w.closed()) std::cout << "monodromy " << label_to_string(monodromy(c, w)) << "\n";
      return 0;
    }
    if (pleat_cmd->parsed()) {
      GraphRef g = parse_graph(graph_spec);
      GeneralGraph m =
          g.is_hamming() ? materialize(*g.hamming(), max_vertices_bound()) : g.general();
      auto pairs = dominated_pairs(m);
      std::cout << (pairs.empty() ? "pleat" : "not-a-pleat") << "\n";
      for (auto [v, w] : pairs)
        std::cout << "dominated " << m.label(v) << " <= " << m.label(w) << "\n";
      return 0;
    }
    if (oracle_equiv->parsed()) {
      GraphRef g = parse_graph(graph_spec);
      SearchBudget b{max_len, max_states, max_depth};
      Verdict v = bfs_equivalent(parse_walk(g, walk_spec), parse_walk(g, walk2_spec), b);
      if (v.equivalent) {
        std::cout << "equivalent (certificate with " << v.certificate->moves.size()
                  << " moves, " << v.states_explored << " states)\n";
        if (!cert_path.empty()) save_json(cert_path, certificate_to_json(*v.certificate));
        return 0;
      }
      std::cout << "not-found-within-budget (" << v.states_explored << " states)\n";
      return 2;
    }
    if (oracle_classes->parsed()) {
      GraphRef g = parse_graph(graph_spec);
      VertexId base = 0;
      if (!base_spec.empty()) {
        if (const HammingGraph* h = g.hamming())
          base = h->index_of(parse_coords(base_spec));
        else
          base = g.general().index_of_label(base_spec);
      }
      SearchBudget b{std::max<std::size_t>(max_len, 2), max_states,
                     std::numeric_limits<long long>::max()};
      auto classes = enumerate_classes(g, base, max_len, b);
      std::cout << classes.size() << " classes\n";
      for (const auto& cls : classes) {
        std::cout << "size " << cls.size() << " rep " << cls.front().to_string();
        if (g.is_hamming()) std::cout << " class " << class_of(cls.front()).to_string();
        std::cout << "\n";
      }
      return 0;
    }
    if (repro_cmd->parsed()) return run_repro(repro_id);
    if (export_dot->parsed()) {
      Json j = load_json(graph_spec);
      std::string text;
      if (j.is_object() && j.value("type", "") == "cover")
        text = cover_to_dot(cover_from_json(j));
      else
        text = graph_to_dot(graph_from_json(j), "G", max_vertices_bound());
      if (out_path.empty())
        std::cout << text;
      else
        write_text(out_path, text);
      return 0;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
