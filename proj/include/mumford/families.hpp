#pragma once

// Three explicit families of Mumford curves with large automorphism groups:
// the Artin-Schreier-Mumford curves, Drinfeld modular curves X(n) specified
// by the degree multiset of n, and the icosahedral genus 6 family.

#include <string>
#include <vector>

#include "mumford/grouptree.hpp"
#include "mumford/hurwitz.hpp"
#include "mumford/rational.hpp"

namespace mumford {

struct FamilyRecord {
    std::string name;
    Int genus = 0;
    Int aut_order = 0;
    std::string aut_description;
    GroupTree normalizer_tree;
    // "equal", "greater", or "less": sign of aut_order against F(genus)
    std::string bound_verdict;
    long stratum_dim = 0;
    std::vector<BranchPoint> branch;
    std::vector<std::string> caveats;
};

// Artin-Schreier-Mumford curve (x^q - x)(y^q - y) = c with q = p^t.
// Genus (q-1)^2, automorphism group Z_p^{2t} x| D_{q-1} of order 2q^2(q-1),
// which attains the bound 2 sqrt(g)(sqrt(g)+1)^2 exactly.  q = 2 gives
// genus 1 and is rejected.
FamilyRecord asm_family(long p, int t);

// Drinfeld modular curve X(n) over F_q[T], q = p^t, where n has the given
// multiset of prime degrees.  The full modular group acts with order
// q^{3d} prod (1 - q^{-2 deg}) where d is the total degree, and the cover
// X(n) -> X(1) = P^1 branches above two points with indices q+1 and
// q^d(q-1), the latter wild with p-part q^d.
FamilyRecord drinfeld_family(long p, int t, const std::vector<int>& prime_degrees);

// Genus 6 family with automorphism group A5, normalizer I *_{Z_5} D_5.
// Needs p not in {2, 5}; the quotient cover branches with indices
// (2,2,2,3), degenerating to (2,2,6) in characteristic 3.
FamilyRecord icosahedral_family(long p);

// Ramification filtration constraint at a wildly branched point of a cover
// of Drinfeld type: the inertia order A0 must equal A1(A1 - 1) where A1 is
// the order of the second filtration step.  A1 must be a p-power dividing
// A0, otherwise the input is rejected.
bool henn_check(long p, const Int& A0, const Int& A1);

// JSON report for a family record.
std::string family_report(const FamilyRecord& rec);

}  // namespace mumford
