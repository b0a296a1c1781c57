#pragma once

// Isometric circles and the ping-pong discreteness test for free products
// of finite subgroups of PGL(2,K), with a word-level freeness check for the
// resulting Schottky generators.

#include <optional>
#include <string>
#include <vector>

#include "mumford/matrix.hpp"

namespace mumford {

// A closed disk {z : v(z - center) >= radiusVal} in P^1(K), the isometric
// circle of a transformation not fixing infinity.  Radii are powers of
// |pi|, so the valuation scale is exact.  proper == false marks the
// degenerate case c = 0 (the transformation fixes infinity).
struct Disk {
    bool proper = false;
    LocalElement center;
    long radius_val = 0;
};

// Isometric circle {|cz + d| <= 1} of g, computed on the determinant
// balanced representative (pi-power scaling so v(det) is 0 or 1).  c = 0
// gives an improper disk; throws precision_error when c is zero to working
// precision only.
Disk isometric_circle(const Mat2& g);

// Ultrametric disjointness: two proper disks are disjoint exactly when the
// distance of their centers exceeds both radii, i.e. v(c1 - c2) < radiusVal
// on both sides.  Throws domain_error on improper input and precision_error
// when the center difference is indistinguishable from zero but the
// precision does not reach the radii.
bool disks_disjoint(const Disk& a, const Disk& b);

struct FreeProductReport {
    bool discrete = false;
    // offending pair when not discrete, in matrix notation
    std::string witness;
    // set when the criterion was applied after conjugating both groups
    // away from infinity
    bool conjugated = false;
    std::optional<Mat2> conjugator;
};

// Discreteness certificate for <G, H> = G * H: enumerates both finite
// groups and tests all cross pairs of isometric circles for disjointness.
// Elements fixing infinity make the circles degenerate, so in that case
// both groups are first conjugated by a generic element that moves their
// fixed points off infinity; the conjugator is reported.  A true verdict is
// a proof of discreteness and freeness of the product in either coordinate.
FreeProductReport free_product_discrete(const std::vector<Mat2>& gens_g,
                                        const std::vector<Mat2>& gens_h);

// Commutator generators [eps, gamma eps' gamma] over nontrivial pairs from
// the group E generated by gens_e, for an involution gamma.  These generate
// the maximal free subgroup of E * (gamma E gamma), of rank (|E| - 1)^2.
// Throws domain_error unless gamma has order 2 in PGL(2,K).
std::vector<Mat2> schottky_commutators(const std::vector<Mat2>& gens_e,
                                       const Mat2& gamma);

struct WordProblemReport {
    int max_length = 0;
    long words_checked = 0;
    // reduced words evaluating to a scalar matrix, as index strings
    std::vector<std::string> violations;
    // words whose value could not be separated from the identity at the
    // working precision
    std::vector<std::string> indeterminate;
};

// Brute-force freeness check: evaluates every reduced word of length <= L
// in the generators and their inverses and reports any that is scalar.
WordProblemReport free_words_check(const std::vector<Mat2>& gens, int L);

// The unipotent pair behind the Artin-Schreier-Mumford construction:
// E = lower unipotent group over F_q, gamma an involution carrying E to its
// translate by s = pi^{shift_val}.  The pair (E, gamma E gamma) passes the
// disjointness test exactly when the shift valuation is negative.
struct UnipotentPair {
    std::vector<Mat2> e_gens;  // generators of E (one per F_q basis vector)
    Mat2 gamma;
    std::vector<Mat2> h_gens;  // generators of gamma E gamma
};

UnipotentPair asm_pair(long p, int t, long shift_val);

}  // namespace mumford
