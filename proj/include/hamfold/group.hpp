#pragma once

#include <string>
#include <vector>

#include "hamfold/walk.hpp"

namespace hamfold {

enum class GroupKind { Trivial, FreeAbelian, ElemAbelian2 };

/// Shape of the fundamental group of H(d,q): trivial for q <= 2, Z^d for
/// q = 3, (Z/2)^d otherwise.
struct GroupPresentation {
  GroupKind kind = GroupKind::Trivial;
  int rank = 0;

  bool operator==(const GroupPresentation& o) const { return kind == o.kind && rank == o.rank; }
  bool operator!=(const GroupPresentation& o) const { return !(*this == o); }
  std::string to_string() const;
};

/// Group element as an exponent vector over the canonical generators; empty
/// for the trivial group, entries in {0,1} for ElemAbelian2.
struct GroupElement {
  GroupPresentation presentation;
  std::vector<long long> vector;

  bool operator==(const GroupElement& o) const {
    return presentation == o.presentation && vector == o.vector;
  }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  std::string to_string() const;
};

GroupPresentation group_of(const HammingGraph& g);

GroupElement identity(const GroupPresentation& p);
GroupElement make_element(const GroupPresentation& p, std::vector<long long> v);
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupElement& a);
bool is_identity(const GroupElement& a);

/// Homotopy class of a closed Hamming walk. q = 3 counts signed cyclic steps
/// per coordinate (0->1->2->0 positive) divided by 3; q >= 4 takes change
/// counts mod 2; q <= 2 is the identity. The formulas never reference the
/// basepoint, so closed walks based anywhere are accepted (the group is
/// abelian and change-of-basepoint isomorphisms are canonical).
GroupElement class_of(const Walk& w);

/// Concatenation, in ascending coordinate order, of |e_i| copies of the
/// canonical ground walk 0 -> 1_i -> 2_i -> 0 (inverted when e_i < 0).
Walk canonical_walk(const HammingGraph& g, const GroupElement& e);

/// True iff the two closed walks have the same class; complete for Hamming
/// graphs. Both walks must share the graph and basepoint.
bool equivalent(const Walk& a, const Walk& b);

}  // namespace hamfold
