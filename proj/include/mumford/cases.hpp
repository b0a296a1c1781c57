#pragma once

#include <string>
#include <vector>

#include "mumford/grouptree.hpp"
#include "mumford/hurwitz.hpp"
#include "mumford/rational.hpp"

namespace mumford {

// The catalog of normalizers of discontinuous groups uniformizing an
// ordinary Mumford curve whose quotient cover of P^1 is branched above two
// points (the A/B/C families) or three points (D/E/F).  Primed families
// exist in characteristic 3 (icosahedral vertex), double primed in
// characteristic 2 (dihedral vertex).
enum class CaseFamily {
  A1, A2, A3, A4, A5,
  A1p, A2p, A3p, A4p, A5p,     // p = 3
  A1pp, A2pp, A3pp,            // p = 2
  B, C, D, E, F1, F2,
  F1p,                         // p = 3
};

std::string family_name(CaseFamily f);

struct CaseId {
  CaseFamily family;
  long p = 0;
  int t = 1;        // q = p^t for the families with a P?L or Borel core
  bool psl = false; // P?L selector, uniform along the chain
  // Borel tower heights; meaning depends on the family. -1 = not set.
  int t1 = -1, t2 = -1, t3 = -1, t4 = -1, t5 = -1;
  long n = -1;      // dihedral/cyclic parameter of (B), (F2), (A1''), (A2'')
  // (F1') branch shape: a Q-branch is either a Borel B(t_i, 2) or a chain
  // through a PSL(2,3) vertex
  bool q1_chain = false, q2_chain = false;

  std::string to_string() const;
};

// Parses a descriptor like "A1 p=3 t=1 t1=2 PGL" or
// "F2 p=3 t=1 n=2 t1=0 t2=0".  Token "PSL"/"PGL" sets the selector;
// "q1=chain" / "q2=chain" select the (F1') branch shapes.
CaseId parse_case(const std::vector<std::string>& tokens);

// The contracted tree of groups of the case, ends marked with the
// ramification (end stabiliser) tags.  Throws domain_error when the
// parameters violate the side conditions, and for (D)/(E), which are
// constraints on segments rather than parameterized amalgams.
GroupTree build_case(const CaseId& id);

// Branch data of the quotient cover X -> P^1: one (e, ep) pair per marked
// end, e the order of the end stabiliser and ep its p-part.
std::vector<BranchPoint> case_branches(const CaseId& id);

// (g - 1) / |Aut| of the case family, as an exact fraction a/b evaluated
// at the id's parameters.  Available for (A1)-(A5) (the tabulated rows),
// (A3'') with t2 = 1, and the (F) cases with t1 = t2 = 0; other families
// throw domain_error.
struct AbPair {
  Rat a;
  Rat b;
  Rat ratio() const { return a / b; }
};
AbPair case_ab(const CaseId& id);

// mu recomputed from the branch data alone:
//   2 mu = sum (e + ep - 2)/e - 2,
// the Riemann-Hurwitz side of the consistency identity with mu(build_case).
Rat mu_from_branches(const std::vector<BranchPoint>& branches);

// Does some member of the case's genus family meet |Aut| = F(g) exactly?
// With (g-1)/|Aut| = a/b the equality at g = s^2 reduces to
//   2 a s^2 + (2a - b) s + b = 0,
// solved over the integers; each root is verified with the exact
// comparison.  Returns the attained genera (empty = strict inequality).
struct AttainVerdict {
  bool attains = false;
  std::vector<Int> genera;
};
AttainVerdict attains_bound(const CaseId& id);

// The lower bound lambda0 for gcd(g-1, |Aut|) used to salvage the generic
// argument, as case metadata (a description, since some values depend on
// quantities not visible in the tree).
std::string lambda0_note(const CaseId& id);

// Full JSON report: tree, ends, a, b, mu, consistency and bound verdicts.
std::string case_report(const CaseId& id);

}  // namespace mumford
