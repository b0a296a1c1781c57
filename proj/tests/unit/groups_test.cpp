#include <doctest.h>

#include <vector>

#include "mumford/errors.hpp"
#include "mumford/groups.hpp"
#include "mumford/hurwitz.hpp"

using namespace mumford;

TEST_CASE("tag orders match the generated matrix groups") {
    // oracle: embed the tag over a suitable local field and count the
    // elements of the closure in PGL(2,K)
    struct Probe {
        GroupTag tag;
        long p;
        int t;
    };
    std::vector<Probe> probes = {
        {GroupTag::cyclic(2, 3), 2, 2},   {GroupTag::cyclic(5, 4), 5, 1},
        {GroupTag::dihedral(2, 3), 2, 2}, {GroupTag::dihedral(3, 4), 3, 2},
        {GroupTag::elem_abelian(2, 2), 2, 2}, {GroupTag::elem_abelian(3, 1), 3, 1},
        {GroupTag::borel(2, 2, 3), 2, 2}, {GroupTag::borel(3, 1, 2), 3, 1},
        {GroupTag::pgl2(2, 1), 2, 1},     {GroupTag::pgl2(3, 1), 3, 1},
        {GroupTag::psl2(3, 1), 3, 1},     {GroupTag::psl2(5, 1), 5, 1},
    };
    for (const auto& pr : probes) {
        auto spec = make_field(pr.p, pr.t);
        auto closure = generated_group(embed(pr.tag, spec));
        CHECK(Int(closure.size()) == group_order(pr.tag));
    }
}

TEST_CASE("well known orders") {
    CHECK(group_order(GroupTag::tetra(7)) == 12);
    CHECK(group_order(GroupTag::octa(7)) == 24);
    CHECK(group_order(GroupTag::icosa(7)) == 60);
    CHECK(group_order(GroupTag::pgl2(2, 1)) == 6);    // PGL(2,2) = S3
    CHECK(group_order(GroupTag::psl2(2, 1)) == 6);    // equal in char 2
    CHECK(group_order(GroupTag::psl2(3, 1)) == 12);   // A4
    CHECK(group_order(GroupTag::psl2(5, 1)) == 60);   // A5
    CHECK(group_order_p_part(GroupTag::borel(3, 2, 4)) == 9);
}

TEST_CASE("make_tag canonicalisation and rejection") {
    CHECK(make_tag(GroupKind::Cyclic, 5, 1, 0) == GroupTag::trivial(5));
    CHECK(make_tag(GroupKind::Cyclic, 5, 5, 0) == GroupTag::elem_abelian(5, 1));
    CHECK(make_tag(GroupKind::Dihedral, 5, 1, 0) == GroupTag::cyclic(5, 2));
    CHECK(make_tag(GroupKind::Borel, 5, 1, 1) == GroupTag::elem_abelian(5, 1));
    CHECK(make_tag(GroupKind::Borel, 5, 4, 0) == GroupTag::cyclic(5, 4));
    CHECK_THROWS_AS(make_tag(GroupKind::Cyclic, 5, 10, 0), domain_error);
    CHECK_THROWS_AS(make_tag(GroupKind::Dihedral, 5, 10, 0), domain_error);
    CHECK_THROWS_AS(make_tag(GroupKind::Dihedral, 2, 4, 0), domain_error);
    CHECK_THROWS_AS(make_tag(GroupKind::Borel, 5, 3, 1), domain_error);  // 3 does not divide 4
    CHECK_THROWS_AS(make_tag(GroupKind::Tetra, 2, 0, 0), domain_error);
    CHECK_THROWS_AS(make_tag(GroupKind::Octa, 3, 0, 0), domain_error);
    CHECK_THROWS_AS(make_tag(GroupKind::Icosa, 5, 0, 0), domain_error);
}

TEST_CASE("tag serialization round trip") {
    std::vector<GroupTag> tags = {
        GroupTag::trivial(3),      GroupTag::cyclic(3, 7),      GroupTag::dihedral(3, 5),
        GroupTag::elem_abelian(3, 2), GroupTag::borel(3, 2, 4), GroupTag::tetra(7),
        GroupTag::octa(7),         GroupTag::icosa(7),          GroupTag::pgl2(3, 2),
        GroupTag::psl2(3, 2),
    };
    for (const auto& g : tags) CHECK(parse_tag(g.to_string(), g.p) == g);
}

TEST_CASE("branch data describes a genus zero quotient") {
    // oracle: whatever the ramification of the genus-0 action is, feeding it
    // back through the Riemann-Hurwitz formula must return genus 0 exactly
    std::vector<GroupTag> tags = {
        GroupTag::cyclic(5, 3),    GroupTag::dihedral(5, 3),   GroupTag::dihedral(2, 3),
        GroupTag::elem_abelian(5, 1), GroupTag::elem_abelian(2, 3),
        GroupTag::borel(5, 1, 4),  GroupTag::borel(2, 2, 3),   GroupTag::tetra(7),
        GroupTag::octa(7),         GroupTag::icosa(7),         GroupTag::icosa(3),
        GroupTag::pgl2(2, 1),      GroupTag::pgl2(3, 1),       GroupTag::pgl2(2, 2),
        GroupTag::psl2(3, 1),      GroupTag::psl2(5, 1),       GroupTag::psl2(7, 1),
    };
    for (const auto& g : tags) {
        CoverData c;
        c.group_order = group_order(g);
        for (const auto& b : branch_data(g)) c.branch.push_back({b.e, b.ep});
        CHECK(hurwitz_genus(c) == Rat(0));
    }
}

TEST_CASE("containment implies order divisibility") {
    std::vector<GroupTag> tags = {
        GroupTag::trivial(3),   GroupTag::cyclic(3, 2), GroupTag::cyclic(3, 5),
        GroupTag::dihedral(3, 5), GroupTag::elem_abelian(3, 1), GroupTag::borel(3, 1, 2),
        GroupTag::tetra(7),     GroupTag::icosa(7),     GroupTag::pgl2(3, 1),
        GroupTag::psl2(3, 1),
    };
    for (const auto& small : tags)
        for (const auto& big : tags) {
            if (tag_contains(big, small))
                CHECK(group_order(big) % group_order(small) == 0);
            CHECK(tag_contains(big, big));
        }
    // a few structural positives and negatives
    CHECK(tag_contains(GroupTag::icosa(7), GroupTag::dihedral(7, 5)));
    CHECK(tag_contains(GroupTag::pgl2(3, 1), GroupTag::borel(3, 1, 2)));
    CHECK_FALSE(tag_contains(GroupTag::tetra(7), GroupTag::cyclic(7, 4)));
    CHECK_FALSE(tag_contains(GroupTag::icosa(7), GroupTag::cyclic(7, 4)));
}

TEST_CASE("edge tag admissibility") {
    CHECK(admissible_edge_tag(GroupTag::cyclic(5, 3)));
    CHECK(admissible_edge_tag(GroupTag::borel(5, 1, 2)));
    CHECK(admissible_edge_tag(GroupTag::trivial(5)));
    CHECK_FALSE(admissible_edge_tag(GroupTag::icosa(7)));
    CHECK_FALSE(admissible_edge_tag(GroupTag::dihedral(7, 5)));
}
