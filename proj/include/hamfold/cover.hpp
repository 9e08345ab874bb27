#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamfold/group.hpp"
#include "hamfold/walk.hpp"

namespace hamfold {

using Label = std::vector<long long>;

std::string label_to_string(const Label& l);

/// A subgroup of the fundamental group, normalized to a Hermite basis over Z
/// (FreeAbelian) or a reduced row basis over GF(2) (ElemAbelian2).
class Subgroup {
 public:
  Subgroup(GroupPresentation p, std::vector<GroupElement> generators);

  const GroupPresentation& presentation() const { return pres_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  const std::vector<Label>& basis() const { return basis_; }

  bool finite_index() const { return index_.has_value(); }
  /// Throws when the index is infinite.
  long long index() const;

  /// Canonical coset representative of v.
  Label reduce(Label v) const;
  bool contains(const GroupElement& e) const;

  /// All canonical coset representatives, sorted; finite index only.
  std::vector<Label> cosets() const;
  /// Canonical representatives whose free coordinates lie in [-window,window].
  std::vector<Label> cosets_windowed(int window) const;

 private:
  GroupPresentation pres_;
  std::vector<GroupElement> gens_;
  std::vector<Label> basis_;      // row echelon; pivot columns in pivot_cols_
  std::vector<int> pivot_cols_;
  std::optional<long long> index_;
};

Subgroup subgroup_from_generators(const GroupPresentation& p,
                                  const std::vector<GroupElement>& gens);

/// Label displacement of the base edge u -> v. For q = 3 only the 2 -> 0
/// crossing in coordinate i carries +e_i (0 -> 2 carries -e_i); for q >= 4
/// every coordinate-i edge carries e_i; q <= 2 carries nothing.
Label gauge_step(const HammingGraph& g, VertexId u, VertexId v);

/// The quotient cover of a Hamming graph by a subgroup: vertex set is
/// base x cosets, edges follow the gauge. Infinite-index (q = 3) covers are
/// materialized over a windowed box of labels; vertices whose lifts get
/// clipped by the window are flagged incomplete and skipped by verification.
struct CoverGraph {
  HammingGraph base;
  Subgroup subgroup;
  std::optional<int> window;
  std::vector<Label> labels;                    // sorted coset representatives
  std::shared_ptr<const GeneralGraph> graph;    // materialized cover
  std::vector<VertexId> projection;             // cover vertex -> base vertex
  std::vector<char> complete;                   // all base neighbors lifted

  long long fibre() const { return static_cast<long long>(labels.size()); }
  VertexId vertex(VertexId base_vertex, const Label& label) const;
  const Label& label_of(VertexId cover_vertex) const;
  long long label_index(const Label& l) const;  // -1 when absent
};

CoverGraph build_cover(const HammingGraph& g, const Subgroup& s,
                       std::optional<int> window = std::nullopt,
                       long long max_vertices = kDefaultMaxVertices);

struct VerifyReport {
  bool ok = true;
  std::string detail;
};

/// Covering-map axioms for an explicit morphism: edges project to edges, the
/// projection is onto, and it restricts to a bijection N(v~) -> N(v) at every
/// checked vertex. `check` masks which cover vertices to examine (windowed
/// covers restrict to complete vertices); empty means all.
VerifyReport verify_cover(const GeneralGraph& cover, const GeneralGraph& base,
                          std::span<const VertexId> projection,
                          std::span<const char> check = {});

/// Homotopy-covering axioms: additionally the induced map on length-2 walks
/// from each checked vertex is a bijection onto N2(v) and two lifted walks
/// share an endpoint iff their projections do.
VerifyReport verify_homotopy_cover(const GeneralGraph& cover, const GeneralGraph& base,
                                   std::span<const VertexId> projection,
                                   std::span<const char> check = {});

VerifyReport verify_cover(const CoverGraph& c);
VerifyReport verify_homotopy_cover(const CoverGraph& c);

/// Unique edge-by-edge lift of a base walk from (start of w, start_label).
/// Throws BudgetError when a windowed cover runs out of labels.
Walk lift_walk(const CoverGraph& c, const Walk& w, const Label& start_label);

/// Coset displacement of the endpoint of a lifted closed walk; the lift is
/// closed iff the displacement is the identity coset.
Label monodromy(const CoverGraph& c, const Walk& w);

}  // namespace hamfold
