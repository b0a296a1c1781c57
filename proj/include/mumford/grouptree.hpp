#pragma once

#include <string>
#include <vector>

#include "mumford/groups.hpp"

namespace mumford {

// A finite tree of groups with marked ends; the quotient data of a
// discontinuous group acting on the Bruhat-Tits tree.  Ends carry the
// stabiliser of the corresponding boundary direction (ramification data).
struct GroupTree {
  struct Vertex {
    int id;
    GroupTag tag;
  };
  struct Edge {
    int a, b;
    GroupTag tag;
  };
  struct End {
    int at;
    GroupTag tag;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<End> ends;

  const Vertex* find_vertex(int id) const;
  std::string to_json() const;
  static GroupTree from_json(const std::string& text, long p);
};

// Structural validation: tree shape, admissible edge tags, divisibility and
// containment of edge groups in their endpoints, maximal-cyclic condition on
// the tame part of edge tags, and the Borel/cyclic restriction at
// PGL/PSL vertices.  Throws domain_error with a description on failure.
void validate(const GroupTree& t);

// mu(T) = sum over edges of 1/|G_e| - sum over vertices of 1/|G_v|.
Rat mu(const GroupTree& t);

// Genus from |N/Gamma| * mu = g - 1; errors unless the result is an
// integer >= 2 genus.
Int kps_genus(const GroupTree& t, const Int& quotient_order);

// Contract to the connected subtree on `keep`: prunes leaves outside keep,
// requiring each pruned pendant edge to carry the same tag as its leaf and
// vertex groups to grow toward the kept part; ends re-attach inward.
GroupTree contract(const GroupTree& t, const std::vector<int>& keep);

// 3(f + d_v - d_e - 1) + 2(c_v - c_e) with c/d the cyclic/non-cyclic
// vertex and edge group counts and f the free rank of the quotient graph.
long herrlich_dim(const GroupTree& t, long f);

}  // namespace mumford
