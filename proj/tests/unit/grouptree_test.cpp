#include <doctest.h>

#include <random>
#include <vector>

#include "mumford/errors.hpp"
#include "mumford/grouptree.hpp"

using namespace mumford;

namespace {

GroupTree icosa_amalgam(long p) {
    GroupTree t;
    t.vertices = {{0, GroupTag::icosa(p)}, {1, GroupTag::dihedral(p, 5)}};
    t.edges = {{0, 1, GroupTag::cyclic(p, 5)}};
    return t;
}

// random chain of dihedral/cyclic vertices whose pendant edges repeat the
// leaf tag, so every pruning step is admissible
GroupTree random_chain(std::mt19937& rng, int len) {
    std::uniform_int_distribution<long> pick(2, 5);
    GroupTree t;
    long p = 7;
    for (int i = 0; i < len; i++) {
        long n = pick(rng);
        t.vertices.push_back({i, GroupTag::dihedral(p, n)});
        if (i > 0) {
            // edge tag contained in both endpoints: Z_2 sits in every D_n
            t.edges.push_back({i - 1, i, GroupTag::cyclic(p, 2)});
        }
    }
    return t;
}

}  // namespace

TEST_CASE("mu and genus of the icosahedral amalgam") {
    auto t = icosa_amalgam(7);
    validate(t);
    CHECK(mu(t) == Rat(1) / 5 - Rat(1) / 60 - Rat(1) / 10);  // = 1/12
    CHECK(kps_genus(t, Int(60)) == 6);
    CHECK(herrlich_dim(t, 0) == 1);
}

TEST_CASE("json round trip preserves the tree") {
    std::mt19937 rng(4);
    for (int i = 0; i < 20; i++) {
        auto t = random_chain(rng, 2 + (int)(rng() % 5));
        t.ends.push_back({0, GroupTag::cyclic(7, 2)});
        auto back = GroupTree::from_json(t.to_json(), 7);
        REQUIRE(back.vertices.size() == t.vertices.size());
        REQUIRE(back.edges.size() == t.edges.size());
        REQUIRE(back.ends.size() == t.ends.size());
        for (size_t k = 0; k < t.vertices.size(); k++)
            CHECK(back.vertices[k].tag == t.vertices[k].tag);
        for (size_t k = 0; k < t.edges.size(); k++) {
            CHECK(back.edges[k].a == t.edges[k].a);
            CHECK(back.edges[k].b == t.edges[k].b);
            CHECK(back.edges[k].tag == t.edges[k].tag);
        }
        CHECK(mu(back) == mu(t));
    }
}

TEST_CASE("validate rejects malformed trees") {
    // edge group not contained in an endpoint
    GroupTree bad1 = icosa_amalgam(7);
    bad1.edges[0].tag = GroupTag::cyclic(7, 4);  // Z_4 not in I
    CHECK_THROWS_AS(validate(bad1), domain_error);

    // disconnected graph
    GroupTree bad2;
    bad2.vertices = {{0, GroupTag::cyclic(7, 2)}, {1, GroupTag::cyclic(7, 2)}};
    CHECK_THROWS_AS(validate(bad2), domain_error);

    // cycle
    GroupTree bad3;
    bad3.vertices = {{0, GroupTag::dihedral(7, 3)},
                     {1, GroupTag::dihedral(7, 3)},
                     {2, GroupTag::dihedral(7, 3)}};
    bad3.edges = {{0, 1, GroupTag::cyclic(7, 2)},
                  {1, 2, GroupTag::cyclic(7, 2)},
                  {2, 0, GroupTag::cyclic(7, 2)}};
    CHECK_THROWS_AS(validate(bad3), domain_error);

    // end stabiliser not contained in its vertex
    GroupTree bad4 = icosa_amalgam(7);
    bad4.ends.push_back({1, GroupTag::cyclic(7, 7)});
    CHECK_THROWS_AS(validate(bad4), domain_error);
}

TEST_CASE("contraction preserves mu when pendant data cancels") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; trial++) {
        int len = 3 + (int)(rng() % 5);
        auto t = random_chain(rng, len);
        // make the tail prunable: pendant edges toward the tail carry the
        // full leaf group, so 1/|G_e| - 1/|G_v| cancels along the pruned part
        int keep_up_to = 1 + (int)(rng() % (len - 1));
        // prunable tail: cyclic leaves whose pendant edge repeats the leaf
        // tag, Z_n inside the D_n at the boundary of the kept part
        long n = t.vertices[keep_up_to - 1].tag.n;
        for (int i = keep_up_to; i < len; i++) {
            t.vertices[i].tag = GroupTag::cyclic(7, n);
            t.edges[i - 1].tag = t.vertices[i].tag;
        }
        std::vector<int> keep;
        for (int i = 0; i < keep_up_to; i++) keep.push_back(i);
        Rat before = mu(t);
        Rat pruned_part = Rat(0);
        for (int i = keep_up_to; i < len; i++)
            pruned_part += Rat(1) / Rat(group_order(t.edges[i - 1].tag)) -
                           Rat(1) / Rat(group_order(t.vertices[i].tag));
        auto c = contract(t, keep);
        CHECK((int)c.vertices.size() == keep_up_to);
        CHECK(mu(c) == before - pruned_part);
        CHECK(pruned_part == Rat(0));
    }
}

TEST_CASE("contraction detects non-monotone pendant data") {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 100; trial++) {
        auto t = random_chain(rng, 4);
        // inject a violation at the pruned leaf: edge group strictly smaller
        // than the leaf group, so removal changes the amalgam
        t.edges[2].tag = GroupTag::cyclic(7, 2);
        t.vertices[3].tag = GroupTag::dihedral(7, 4);
        CHECK_THROWS_AS(contract(t, {0, 1, 2}), domain_error);
    }
}

TEST_CASE("stratum dimension formula") {
    // trivial stabilisers and free rank f: classical Schottky space, 3f - 3
    GroupTree t;
    t.vertices = {{0, GroupTag::trivial(7)}};
    CHECK(herrlich_dim(t, 2) == 3);
    CHECK(herrlich_dim(t, 5) == 12);
    // two noncyclic vertices joined by a cyclic edge, no loops
    CHECK(herrlich_dim(icosa_amalgam(7), 0) == 1);
}
