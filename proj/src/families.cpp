#include "mumford/families.hpp"

#include <algorithm>

#include <json.hpp>

#include "mumford/errors.hpp"

namespace mumford {

namespace {

long long ll_pow(long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::string verdict(const Int& order, const Int& g) {
    int c = compare_to_bound(order, g);
    if (c == 0) return "equal";
    return c > 0 ? "greater" : "less";
}

// cross-checks genus against the tree invariant and the branch data
void check_record(const FamilyRecord& rec) {
    validate(rec.normalizer_tree);
    Int g_tree = kps_genus(rec.normalizer_tree, rec.aut_order);
    if (g_tree != rec.genus)
        throw domain_error("family record inconsistent with its tree");
    Rat g_rh = hurwitz_genus(CoverData{rec.aut_order, rec.branch});
    if (g_rh != Rat(rec.genus))
        throw domain_error("family record inconsistent with its branch data");
}

}  // namespace

FamilyRecord asm_family(long p, int t) {
    long long q = ll_pow(p, t);
    if (q < 3) throw domain_error("ASM curve needs q >= 3 (q = 2 has genus 1)");
    long n = (long)(q - 1);

    FamilyRecord rec;
    rec.name = "asm";
    rec.genus = Int(n) * n;
    rec.aut_order = 2 * Int(q) * q * n;
    rec.aut_description = "Z_" + std::to_string(p) + "^" + std::to_string(2 * t) +
                          " x| D_" + std::to_string(n);

    GroupTree tr;
    tr.vertices.push_back({0, GroupTag::borel(p, t, n)});
    tr.vertices.push_back({1, GroupTag::dihedral(p, n)});
    tr.edges.push_back({0, 1, GroupTag::cyclic(p, n)});
    // one wild end over the Borel vertex; the involution ends degenerate to
    // a single wild end in characteristic 2
    tr.ends.push_back({0, GroupTag::borel(p, t, n)});
    if (p == 2) {
        tr.ends.push_back({1, GroupTag::cyclic(p, 2)});
        rec.branch = {{Int(q) * n, Int(q)}, {2, 2}};
    } else {
        tr.ends.push_back({1, GroupTag::cyclic(p, 2)});
        tr.ends.push_back({1, GroupTag::cyclic(p, 2)});
        rec.branch = {{Int(q) * n, Int(q)}, {2, 1}, {2, 1}};
    }
    rec.normalizer_tree = tr;

    rec.bound_verdict = verdict(rec.aut_order, rec.genus);
    if (rec.bound_verdict != "equal")
        throw domain_error("ASM family should attain the genus bound");
    rec.stratum_dim = herrlich_dim(tr, 0);
    check_record(rec);
    return rec;
}

FamilyRecord drinfeld_family(long p, int t, const std::vector<int>& prime_degrees) {
    long long q = ll_pow(p, t);
    if (prime_degrees.empty()) throw domain_error("need at least one prime degree");
    int d = 0;
    for (int deg : prime_degrees) {
        if (deg < 1) throw domain_error("prime degrees must be positive");
        d += deg;
    }

    // |G(n)| = q^{3d} prod (1 - q^{-2 deg}) = q^d prod (q^{2 deg} - 1)
    Int order = int_pow(Int(q), (unsigned long)d);
    for (int deg : prime_degrees) order *= int_pow(Int(q), 2ul * deg) - 1;

    Int qd = int_pow(Int(q), (unsigned long)d);
    Rat gm1 = Rat(order) * Rat(qd - q - 1, qd * (Int(q) * q - 1));
    if (gm1 <= 0) throw domain_error("X(n) has genus < 2 for these parameters");
    if (denominator(gm1) != 1)
        throw domain_error("genus formula did not give an integer");

    FamilyRecord rec;
    rec.name = "drinfeld";
    rec.genus = numerator(gm1) + 1;
    rec.aut_order = order;
    rec.aut_description = "G(n) = full modular group mod n, deg n = " + std::to_string(d);
    rec.branch = {{Int(q) + 1, 1}, {qd * (q - 1), qd}};

    GroupTree tr;
    tr.vertices.push_back({0, GroupTag::pgl2(p, t)});
    tr.vertices.push_back({1, GroupTag::borel(p, t * d, (long)(q - 1))});
    tr.edges.push_back({0, 1, GroupTag::borel(p, t, (long)(q - 1))});
    tr.ends.push_back({0, GroupTag::cyclic(p, (long)(q + 1))});
    tr.ends.push_back({1, GroupTag::borel(p, t * d, (long)(q - 1))});
    rec.normalizer_tree = tr;

    rec.bound_verdict = verdict(order, rec.genus);
    rec.stratum_dim = herrlich_dim(tr, 0);
    if (q > 3) {
        if (order <= 12 * (rec.genus - 1))
            throw domain_error("order should exceed 12(g-1) for q > 3");
    } else {
        rec.caveats.push_back("q <= 3: uniqueness of the normalizer is not asserted");
    }
    if (prime_degrees.size() > 1) {
        std::vector<int> s = prime_degrees;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            rec.caveats.push_back("repeated prime degrees: order formula applied verbatim");
    }
    check_record(rec);
    return rec;
}

FamilyRecord icosahedral_family(long p) {
    FamilyRecord rec;
    rec.name = "icosahedral";
    rec.genus = 6;
    rec.aut_order = 60;
    rec.aut_description = "A_5";

    GroupTree tr;
    tr.vertices.push_back({0, GroupTag::icosa(p)});  // rejects p in {2,5}
    tr.vertices.push_back({1, GroupTag::dihedral(p, 5)});
    tr.edges.push_back({0, 1, GroupTag::cyclic(p, 5)});
    tr.ends.push_back({1, GroupTag::cyclic(p, 2)});
    tr.ends.push_back({1, GroupTag::cyclic(p, 2)});
    if (p == 3) {
        // the order 2 and order 3 ends merge into a wild S_3 end
        tr.ends.push_back({0, GroupTag::borel(p, 1, 2)});
        rec.branch = {{2, 1}, {2, 1}, {6, 3}};
    } else {
        tr.ends.push_back({0, GroupTag::cyclic(p, 2)});
        tr.ends.push_back({0, GroupTag::cyclic(p, 3)});
        rec.branch = {{2, 1}, {2, 1}, {2, 1}, {3, 1}};
    }
    rec.normalizer_tree = tr;

    rec.bound_verdict = verdict(rec.aut_order, rec.genus);
    rec.stratum_dim = herrlich_dim(tr, 0);
    check_record(rec);
    return rec;
}

bool henn_check(long p, const Int& A0, const Int& A1) {
    if (A0 < 1 || A1 < 1) throw domain_error("orders must be positive");
    Int a = A1;
    while (a % p == 0) a /= p;
    if (a != 1) throw domain_error("A1 must be a power of p");
    if (A0 % A1 != 0) throw domain_error("A1 must divide A0");
    return A0 == A1 * (A1 - 1);
}

std::string family_report(const FamilyRecord& rec) {
    nlohmann::json j;
    j["family"] = rec.name;
    j["genus"] = rec.genus.str();
    j["autOrder"] = rec.aut_order.str();
    j["autDescription"] = rec.aut_description;
    j["normalizerTree"] = nlohmann::json::parse(rec.normalizer_tree.to_json());
    j["mu"] = Rat(mu(rec.normalizer_tree)).str();
    j["boundVerdict"] = rec.bound_verdict;
    j["stratumDim"] = rec.stratum_dim;
    j["branch"] = nlohmann::json::array();
    for (const auto& b : rec.branch)
        j["branch"].push_back({{"e", b.e.str()}, {"ep", b.ep.str()}});
    j["caveats"] = rec.caveats;
    return j.dump(2);
}

}  // namespace mumford
