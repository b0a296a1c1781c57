#pragma once

#include <vector>

namespace mumford::smallgroups {

// A finite group as a Cayley table. Element 0 is the identity and
// mul[a][b] is the product ab. Everything downstream (isomorphism testing,
// solvability, the order census) works on this representation; group
// orders stay small enough (<= 84) that the quadratic table is cheap.
struct Group {
  int n = 1;
  std::vector<std::vector<int>> mul;

  int inverse(int a) const;
  int element_order(int a) const;
  // multiset of element orders, sorted
  std::vector<int> order_spectrum() const;
  std::vector<int> center() const;
  std::vector<int> derived_subgroup() const;
  int conjugacy_class_count() const;
  bool is_abelian() const;
  // a short generating set, found greedily; deterministic
  std::vector<int> generators() const;
  // sanity check of the table axioms (associativity, identity, inverses)
  bool is_valid() const;
};

Group trivial_group();
Group cyclic_group(int n);
// the alternating group on five letters, via even permutations
Group alternating_a5();

// All automorphisms of g, each as a permutation of {0..n-1}.
std::vector<std::vector<int>> automorphisms(const Group& g);

bool isomorphic(const Group& a, const Group& b);

bool is_solvable(const Group& g);

// The extension of n by a cyclic group of prime order p determined by an
// automorphism phi of n and an element z with phi^p = conjugation by z and
// phi(z) = z: elements are pairs (a, i) with
//   (a, i)(b, j) = (a phi^i(b) z^[i+j>=p], (i+j) mod p).
Group cyclic_extension(const Group& n, const std::vector<int>& phi, int z, int p);

// All isomorphism classes of groups of order n, enumerated from scratch:
// every solvable group has a normal subgroup of prime index, so the
// solvable classes arise recursively as cyclic_extension of smaller ones.
// A non-solvable group needs a non-abelian simple composition factor, and
// the smallest such order is 60, so for n <= 100 the only non-solvable
// class is A5 at n = 60, added explicitly. Results are memoized.
// Supported for n <= 100.
const std::vector<Group>& groups_of_order(int n);

// number of isomorphism classes of groups of order n
long group_count(int n);
long nonsolvable_count(int n);

}  // namespace mumford::smallgroups
