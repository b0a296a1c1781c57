#pragma once

#include <string>
#include <vector>

#include "mumford/matrix.hpp"
#include "mumford/rational.hpp"

namespace mumford {

// Symbolic tags for the finite subgroups of PGL(2, k-bar), char p.
enum class GroupKind {
  Trivial,
  Cyclic,       // Z_n, gcd(n, p) = 1
  Dihedral,     // D_n (order 2n); for p = 2 only odd n
  ElemAbelian,  // E_t = (Z_p)^t
  Borel,        // B(t, n) = E_t x| Z_n with n | p^t - 1
  Tetra,        // A_4, p not in {2,3}
  Octa,         // S_4, p not in {2,3}
  Icosa,        // A_5, p not in {2,5}
  PGL2,         // PGL(2, p^t)
  PSL2,         // PSL(2, p^t)
};

struct GroupTag {
  GroupKind kind = GroupKind::Trivial;
  long p = 2;  // ambient residue characteristic
  long n = 1;  // cyclic part parameter (Cyclic, Dihedral, Borel)
  int t = 0;   // p-part exponent (ElemAbelian, Borel, PGL2, PSL2)

  static GroupTag trivial(long p);
  static GroupTag cyclic(long p, long n);
  static GroupTag dihedral(long p, long n);
  static GroupTag elem_abelian(long p, int t);
  static GroupTag borel(long p, int t, long n);
  static GroupTag tetra(long p);
  static GroupTag octa(long p);
  static GroupTag icosa(long p);
  static GroupTag pgl2(long p, int t);
  static GroupTag psl2(long p, int t);

  bool operator==(const GroupTag& o) const;
  bool operator!=(const GroupTag& o) const { return !(*this == o); }
  std::string to_string() const;
};

// Canonicalises degenerate parameters (B(0,n) -> Zn(n), B(t,1) -> E(t),
// Zn(1)/E(0) -> 1, Dn(1) -> Zn(2)) and checks catalog admissibility.
GroupTag make_tag(GroupKind kind, long p, long n, int t);
GroupTag parse_tag(const std::string& s, long p);

Int group_order(const GroupTag& g);
// p-part of the group order.
Int group_order_p_part(const GroupTag& g);
// Largest divisor of n prime to p (for the edge-tag checks).
long prime_to_p_part(long n, long p);

// Ramification data of k(x) <- k(x)^G for the genus-0 catalog action:
// list of (e, e_p) with e the ramification index and e_p its wild part.
struct BranchDatum {
  Int e;
  Int ep;
  bool operator==(const BranchDatum& o) const { return e == o.e && ep == o.ep; }
};
std::vector<BranchDatum> branch_data(const GroupTag& g);

// Whether some embedding of Z_n into the ambient group is a maximal cyclic
// subgroup (n prime to p unless n == p for the p-Sylow direction).
bool is_maximal_cyclic(long n, const GroupTag& ambient);
// Tags allowed on edges of a tree of groups.
bool admissible_edge_tag(const GroupTag& g);
// Symbolic containment test from the catalog subgroup structure.
bool tag_contains(const GroupTag& big, const GroupTag& small);
bool tag_is_cyclic(const GroupTag& g);  // includes the trivial group? no: Z_n, n>=2, E_1

// Explicit generators inside PGL(2, K) over the session field; supported for
// Trivial, Cyclic, Dihedral, ElemAbelian, Borel, PGL2, PSL2.
std::vector<Mat2> embed(const GroupTag& g, const FqSpecPtr& spec);

}  // namespace mumford
