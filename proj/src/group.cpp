#include "hamfold/group.hpp"

#include <sstream>

namespace hamfold {

std::string GroupPresentation::to_string() const {
  switch (kind) {
    case GroupKind::Trivial:
      return "trivial";
    case GroupKind::FreeAbelian:
      return "Z^" + std::to_string(rank);
    case GroupKind::ElemAbelian2:
      return "(Z/2)^" + std::to_string(rank);
  }
  return "?";
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < vector.size(); ++i) {
    if (i) os << ',';
    os << vector[i];
  }
  os << ')';
  return os.str();
}

GroupPresentation group_of(const HammingGraph& g) {
  if (g.alphabet() <= 2) return {GroupKind::Trivial, g.dimension()};
  if (g.alphabet() == 3) return {GroupKind::FreeAbelian, g.dimension()};
  return {GroupKind::ElemAbelian2, g.dimension()};
}

GroupElement identity(const GroupPresentation& p) {
  if (p.kind == GroupKind::Trivial) return {p, {}};
  return {p, std::vector<long long>(p.rank, 0)};
}

GroupElement make_element(const GroupPresentation& p, std::vector<long long> v) {
  if (p.kind == GroupKind::Trivial) {
    for (long long x : v)
      if (x != 0) throw DomainError("trivial group has only the identity");
    return {p, {}};
  }
  if (static_cast<int>(v.size()) != p.rank) throw DomainError("element has wrong rank");
  if (p.kind == GroupKind::ElemAbelian2)
    for (auto& x : v) x = ((x % 2) + 2) % 2;
  return {p, std::move(v)};
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.presentation != b.presentation) throw DomainError("presentation mismatch");
  std::vector<long long> v = a.vector;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.vector[i];
  return make_element(a.presentation, std::move(v));
}

GroupElement invert(const GroupElement& a) {
  std::vector<long long> v = a.vector;
  for (auto& x : v) x = -x;
  return make_element(a.presentation, std::move(v));
}

bool is_identity(const GroupElement& a) {
  for (long long x : a.vector)
    if (x != 0) return false;
  return true;
}

namespace {

// Signed cyclic step for q = 3: +1 for to = from + 1 (mod 3), -1 otherwise.
int cyclic_delta(const ChangeRecord& rec) {
  return (rec.to_value - rec.from_value + 3) % 3 == 1 ? 1 : -1;
}

}  // namespace

GroupElement class_of(const Walk& w) {
  const HammingGraph* h = w.graph().hamming();
  if (!h) throw DomainError("class_of requires a Hamming-graph walk");
  if (!w.closed()) throw DomainError("class_of requires a closed walk");
  GroupPresentation p = group_of(*h);
  if (p.kind == GroupKind::Trivial) return identity(p);
  std::vector<long long> v(p.rank, 0);
  if (p.kind == GroupKind::FreeAbelian) {
    for (const auto& rec : change_sequence(w)) v[rec.coordinate] += cyclic_delta(rec);
    for (auto& x : v) {
      if (x % 3 != 0) throw DomainError("closed walk with winding not divisible by 3");
      x /= 3;
    }
    return {p, std::move(v)};
  }
  std::vector<long long> counts = change_counts(w);
  for (int i = 0; i < p.rank; ++i) v[i] = counts[i] % 2;
  return {p, std::move(v)};
}

Walk canonical_walk(const HammingGraph& g, const GroupElement& e) {
  if (e.presentation != group_of(g)) throw DomainError("presentation does not match graph");
  std::vector<VertexId> verts{g.origin()};
  for (int i = 0; i < static_cast<int>(e.vector.size()); ++i) {
    long long n = e.vector[i];
    int first = n > 0 ? 1 : 2;
    int second = n > 0 ? 2 : 1;
    for (long long rep = 0; rep < (n < 0 ? -n : n); ++rep) {
      verts.push_back(g.with_coordinate(g.origin(), i, first));
      verts.push_back(g.with_coordinate(g.origin(), i, second));
      verts.push_back(g.origin());
    }
  }
  return Walk(GraphRef(g), std::move(verts));
}

bool equivalent(const Walk& a, const Walk& b) {
  if (!a.graph().same_graph(b.graph())) throw DomainError("equivalent: walks on different graphs");
  if (!a.closed() || !b.closed()) throw DomainError("equivalent: walks must be closed");
  if (a.front() != b.front()) throw DomainError("equivalent: basepoint mismatch");
  return class_of(a) == class_of(b);
}

}  // namespace hamfold
