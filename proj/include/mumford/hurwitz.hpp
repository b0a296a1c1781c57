#pragma once

#include <map>
#include <string>
#include <vector>

#include <mumford/rational.hpp>

namespace mumford {

// One branch point of a Galois cover of the projective line: e is the
// ramification index and ep its wild part (a power of the residue
// characteristic dividing e; ep = 1 at tame points).
struct BranchPoint {
  Int e;
  Int ep;
};

struct CoverData {
  Int group_order;
  std::vector<BranchPoint> branch;
};

// Genus of the total space of a cover of P^1 with the given branch data,
// from the Riemann-Hurwitz formula with the wild terms folded in:
//   2g - 2 = |G| * (-2 + sum (e_i + ep_i - 2) / e_i).
// Returns the exact rational value of g; callers that expect an integer
// genus should check denominator() == 1 themselves.
Rat hurwitz_genus(const CoverData& cover);

// The ratio |G| / (g - 1) for a cover of genus g >= 2, exact.
Rat ab_ratio(const CoverData& cover);

// The bound F(g) = 4g + 2(g+1)*sqrt(g) for the order of a group acting on
// a curve of genus g >= 2. F(g) is irrational for non-square g, so we never
// evaluate it numerically: compare_to_bound(n, g) decides the sign of
// n - F(g) exactly. Returns -1, 0, +1.
int compare_to_bound(const Int& n, const Int& g);

// True when n <= F(g).
bool within_bound(const Int& n, const Int& g);

// The reduction criterion for a family with |G| = a*N + b and g = N + 1 for
// a free parameter N >= 1 (so |G| = a(g-1) + b). If some member exceeds the
// bound then already the member with N = lambda0 does, provided
//   lambda0 * b <= F(lambda0 * a + 1),
// i.e. the excess is monotone from lambda0 on. This checks that inequality
// exactly.
bool lambda_criterion(const Int& lambda0, const Int& a, const Int& b);

// Whether |G| = a(g-1) + b meets F(g) with equality for some admissible
// genus g >= 2. Equality forces g = s^2 and reduces to an integer root of
//   2 s^3 - (a - 4) s^2 + 2 s + (a - b) = 0.
// Returns the genera (as s^2, sorted) at which equality holds.
std::vector<Int> bound_attained_at(const Int& a, const Int& b);

// Census of the exceptional window. For genus g in {5, 6, 7, 8} the linear
// bound 12(g-1) exceeds F(g), so a group of order n with
// F(g) < n <= 12(g-1) beats the generic bound. The census sums, over those
// four genera, the number of isomorphism classes of groups of each order
// in the window, and flags the non-solvable ones.
struct CensusGenusRow {
  Int g;
  std::vector<Int> orders;
  long group_count;
};

struct CensusReport {
  std::vector<CensusGenusRow> per_genus;
  long total;
  // orders at which non-solvable groups occur, with their counts
  std::map<Int, long> nonsolvable;
  long nonsolvable_total;
};

// Orders n with F(g) < n <= 12(g-1), decided by the exact comparison.
// Empty for g outside {5, 6, 7, 8} within 2..10^4.
std::vector<Int> exceptional_orders(const Int& g);

// Assemble the census from tables mapping order -> number of groups of
// that order and order -> number of non-solvable groups of that order.
// Throws domain_error if a needed order is missing from gnu_table.
CensusReport census_exceptional(const std::map<Int, long>& gnu_table,
                                const std::map<Int, long>& nonsolvable_table);

}  // namespace mumford
