#pragma once

#include <string>
#include <vector>

#include "mumford/matrix.hpp"

namespace mumford {

// Vertex of the Bruhat-Tits tree of PGL(2,K) in normal form: the lattice
// class [[pi^n, u], [0, 1]] with u a representative mod pi^n (all stored
// exponents < n, exact).  Equivalently the ball u + pi^n*O of "radius" n.
struct TreeVertex {
  long level = 0;
  LocalElement center;  // exact, exponents < level

  static TreeVertex base(const FqSpecPtr& spec);  // Lambda_0 = (0, 0)
  static TreeVertex make(long level, const LocalElement& center);
  // The standard apartment vertex Lambda_j = [[pi^j, 0], [0, 1]].
  static TreeVertex standard(const FqSpecPtr& spec, long j);

  const FqSpecPtr& spec() const { return center.spec(); }
  Mat2 lattice_rep() const;  // [[pi^n, u], [0, 1]]
  bool operator==(const TreeVertex& o) const;
  bool operator!=(const TreeVertex& o) const { return !(*this == o); }
  bool operator<(const TreeVertex& o) const;  // for ordered containers
  std::string to_string() const;
};

// Normal form of the lattice class spanned by the columns of m.
TreeVertex vertex_from_lattice(const Mat2& m);
// Action of PGL(2,K) on vertices.
TreeVertex act(const Mat2& g, const TreeVertex& v);
// Tree distance via elementary-divisor valuations of the transition matrix.
long tree_distance(const TreeVertex& v, const TreeVertex& w);
bool is_fixed(const Mat2& g, const TreeVertex& v);

// Vertices adjacent to v: one toward lower level, q toward higher level.
std::vector<TreeVertex> neighbors(const TreeVertex& v);
// The geodesic path from v to w, inclusive.
std::vector<TreeVertex> geodesic(const TreeVertex& v, const TreeVertex& w);

// The apartment ]x, y[ parametrised by g*Lambda_j where g = [y | x] maps
// (0, inf) to (x, y); returns the vertices for j in [j_min, j_max].
std::vector<TreeVertex> apartment(const ProjPoint& x, const ProjPoint& y, long j_min,
                                  long j_max);
// The unique vertex common to the three apartments through {x, y, z}.
TreeVertex median(const ProjPoint& x, const ProjPoint& y, const ProjPoint& z);

// Finite observation window: all vertices within tree distance <= radius of
// the center vertex.
struct WindowSpec {
  TreeVertex center;
  int radius = 3;
  bool contains(const TreeVertex& v) const;
};

struct TreeWindow {
  std::vector<TreeVertex> vertices;
  std::vector<std::pair<int, int>> edges;  // indices, distance-1 pairs
  std::vector<int> boundary;               // indices of window-boundary vertices

  long index_of(const TreeVertex& v) const;  // -1 if absent
  std::string to_json() const;
  std::string to_dot() const;
};

// All vertices of the window (BFS ball), with edges; interior vertices have
// valency q+1.
TreeWindow enumerate_window(const WindowSpec& w);
// Induced subgraph on an explicit vertex set.
TreeWindow window_from_vertices(std::vector<TreeVertex> verts, const WindowSpec* clip);

// Fixed-point set of g inside the window, spanned (convex hull) as a subtree.
TreeWindow mirror(const Mat2& g, const WindowSpec& w);

// Smallest subtree containing the medians of all 3-subsets of the given
// ends, clipped to the window.
TreeWindow tree_of_points(const std::vector<ProjPoint>& points, const WindowSpec& w);

// Image of a vertex-stabilising subgroup in PGL(2, residue field) acting on
// the link of v, with the kernel of the reduction flagged per element.
struct LinkRep {
  std::vector<std::array<FqElement, 4>> images;  // normalized mod-pi matrices
  std::vector<bool> in_kernel;
};
LinkRep link_rep(const std::vector<Mat2>& elements, const TreeVertex& v);

}  // namespace mumford
