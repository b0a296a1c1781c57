#include <doctest.h>

#include <vector>

#include "mumford/cases.hpp"
#include "mumford/errors.hpp"

using namespace mumford;

namespace {

std::vector<CaseId> admissible_grid() {
    std::vector<CaseId> out;
    for (auto [p, t] : std::vector<std::pair<long, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
        for (bool psl : {false, true}) {
            if (psl && p == 2) continue;  // PSL = PGL in characteristic 2
            CaseId base;
            base.p = p;
            base.t = t;
            base.psl = psl;
            for (int t1 : {2 * t, 3 * t}) {
                CaseId id = base;
                id.family = CaseFamily::A1;
                id.t1 = t1;
                out.push_back(id);
            }
            for (int n = 1; n <= 2; n++)
                for (int m = 1; m <= 2; m++) {
                    CaseId id = base;
                    id.family = CaseFamily::A2;
                    id.t1 = m * t;  // tame tower height
                    id.t2 = n * t;  // wild tower height
                    out.push_back(id);
                    id = base;
                    id.family = CaseFamily::A3;
                    id.t1 = m * t;
                    id.t3 = n * t;
                    out.push_back(id);
                }
            for (int n = 1; n <= 2; n++) {
                CaseId id = base;
                id.family = CaseFamily::A4;
                id.t4 = n * t;
                out.push_back(id);
                id = base;
                id.family = CaseFamily::A5;
                id.t5 = n * t;
                out.push_back(id);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("triple agreement of mu, branch data and the (a,b) row") {
    // three independent routes to the same invariant: mu of the tree of
    // groups, the Riemann-Hurwitz sum over the marked ends, and the
    // symbolic (a,b) rows evaluated at the parameters
    int checked = 0;
    for (const auto& id : admissible_grid()) {
        INFO(id.to_string());
        GroupTree tree;
        try {
            tree = build_case(id);
        } catch (const domain_error&) {
            continue;  // side condition excludes this parameter point
        }
        validate(tree);
        Rat m = mu(tree);
        CHECK(m == mu_from_branches(case_branches(id)));
        auto ab = case_ab(id);
        CHECK(ab.ratio() == m);
        checked++;
    }
    CHECK(checked >= 80);
}

TEST_CASE("descriptor parse round trip") {
    for (const auto& id : admissible_grid()) {
        auto back = parse_case([&] {
            std::vector<std::string> tok;
            std::string s = id.to_string();
            size_t i = 0;
            while (i < s.size()) {
                size_t j = s.find(' ', i);
                if (j == std::string::npos) j = s.size();
                tok.push_back(s.substr(i, j - i));
                i = j + 1;
            }
            return tok;
        }());
        CHECK(back.to_string() == id.to_string());
    }
    auto id = parse_case({"A1", "p=3", "t=1", "t1=2", "PGL"});
    CHECK(id.family == CaseFamily::A1);
    CHECK(id.p == 3);
    CHECK_FALSE(id.psl);
    CHECK(id.t1 == 2);
}

TEST_CASE("sample rows evaluate to the expected exact values") {
    CaseId id;
    id.family = CaseFamily::A1;
    id.p = 3;
    id.t = 1;
    id.t1 = 2;
    auto ab = case_ab(id);
    CHECK(ab.a / ab.b == mu(build_case(id)));

    // the genus 4 and 9 curves with 12(g-1)-beating actions: (F2) at p = 3
    CaseId f2;
    f2.family = CaseFamily::F2;
    f2.p = 3;
    f2.t = 1;
    f2.n = 2;
    f2.t1 = 0;
    f2.t2 = 0;
    CHECK(mu(build_case(f2)) == Rat(1) / 12);
    auto verdict = attains_bound(f2);
    CHECK(verdict.attains);
    CHECK(verdict.genera == std::vector<Int>{Int(4), Int(9)});
}

TEST_CASE("PSL halves the relevant orders") {
    CaseId pgl, psl;
    pgl.family = psl.family = CaseFamily::A1;
    pgl.p = psl.p = 5;
    pgl.t = psl.t = 1;
    pgl.t1 = psl.t1 = 2;
    psl.psl = true;
    // same tree shape, half the group orders at the P?L vertices, so mu and
    // the (a,b) data genuinely differ
    CHECK(mu(build_case(pgl)) != mu(build_case(psl)));
    CHECK(case_ab(pgl).ratio() == mu(build_case(pgl)));
    CHECK(case_ab(psl).ratio() == mu(build_case(psl)));
}

TEST_CASE("constraint-only families and bad parameters are rejected") {
    CaseId d;
    d.family = CaseFamily::D;
    d.p = 5;
    CHECK_THROWS_AS(build_case(d), domain_error);
    CaseId e;
    e.family = CaseFamily::E;
    e.p = 5;
    CHECK_THROWS_AS(build_case(e), domain_error);

    // tower height must be a multiple of t exceeding t in (A1)
    CaseId bad;
    bad.family = CaseFamily::A1;
    bad.p = 3;
    bad.t = 2;
    bad.t1 = 3;
    CHECK_THROWS_AS(build_case(bad), domain_error);

    // primed families only exist in their characteristic
    CaseId prime;
    prime.family = CaseFamily::A1p;
    prime.p = 5;
    prime.t = 1;
    prime.t1 = 2;
    CHECK_THROWS_AS(build_case(prime), domain_error);
}

TEST_CASE("characteristic 3 and 2 variants carry the special vertex") {
    CaseId a1p;
    a1p.family = CaseFamily::A1p;
    a1p.p = 3;
    a1p.t = 1;
    a1p.t1 = 2;
    auto t3 = build_case(a1p);
    validate(t3);
    bool has_icosa = false;
    for (const auto& v : t3.vertices)
        if (v.tag.kind == GroupKind::Icosa) has_icosa = true;
    CHECK(has_icosa);
    CHECK(mu(t3) == mu_from_branches(case_branches(a1p)));

    CaseId a1pp;
    a1pp.family = CaseFamily::A1pp;
    a1pp.p = 2;
    a1pp.t = 1;
    a1pp.t1 = 2;  // B(t1, n) needs n | 2^t1 - 1
    a1pp.t2 = 1;
    a1pp.n = 3;
    auto t2 = build_case(a1pp);
    validate(t2);
    bool has_dihedral = false;
    for (const auto& v : t2.vertices)
        if (v.tag.kind == GroupKind::Dihedral) has_dihedral = true;
    CHECK(has_dihedral);
    CHECK(mu(t2) == mu_from_branches(case_branches(a1pp)));
}
