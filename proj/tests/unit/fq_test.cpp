#include <doctest.h>

#include <vector>

#include "mumford/fq.hpp"

using namespace mumford;

namespace {

// all elements of F_q as coefficient vectors
std::vector<FqElement> all_elements(const FqSpecPtr& spec) {
    std::vector<FqElement> out;
    long long q = spec->q();
    for (long long i = 0; i < q; i++) {
        std::vector<int> poly;
        long long m = i;
        for (int d = 0; d < spec->t; d++) {
            poly.push_back((int)(m % spec->p));
            m /= spec->p;
        }
        out.push_back(FqElement(spec, poly));
    }
    return out;
}

// mod-p polynomial product, plain schoolbook; test-side oracle helper
std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, long p) {
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++)
            r[i + j] = (int)((r[i + j] + (long)a[i] * b[j]) % p);
    return r;
}

// brute-force irreducibility: no factorization into two monic polys of
// positive degree, enumerated exhaustively
bool brute_irreducible(const std::vector<int>& f, long p) {
    int deg = (int)f.size() - 1;
    for (int d1 = 1; d1 <= deg / 2; d1++) {
        int d2 = deg - d1;
        long long n1 = 1;
        for (int i = 0; i < d1; i++) n1 *= p;
        long long n2 = 1;
        for (int i = 0; i < d2; i++) n2 *= p;
        for (long long i = 0; i < n1; i++) {
            std::vector<int> g;
            long long m = i;
            for (int k = 0; k < d1; k++) g.push_back((int)(m % p)), m /= p;
            g.push_back(1);
            for (long long j = 0; j < n2; j++) {
                std::vector<int> h;
                long long mm = j;
                for (int k = 0; k < d2; k++) h.push_back((int)(mm % p)), mm /= p;
                h.push_back(1);
                if (poly_mul(g, h, p) == f) return false;
            }
        }
    }
    return true;
}

long long phi(long long n) {
    long long r = 0;
    for (long long k = 1; k <= n; k++) {
        long long a = k, b = n;
        while (b) {
            long long t = a % b;
            a = b;
            b = t;
        }
        if (a == 1) r++;
    }
    return r;
}

}  // namespace

TEST_CASE("modulus is the lexicographically least monic irreducible") {
    for (auto [p, t] : std::vector<std::pair<long, int>>{
             {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}}) {
        auto spec = make_field(p, t);
        REQUIRE(spec->modulus.size() == (size_t)t + 1);
        REQUIRE(spec->modulus[t] == 1);
        CHECK(brute_irreducible(spec->modulus, p));
        // nothing lexicographically smaller (high coefficients first) works
        long long n = 1;
        for (int i = 0; i < t; i++) n *= p;
        bool hit_self = false;
        for (long long i = 0; i < n && !hit_self; i++) {
            // digits of i, least significant = constant term, so increasing i
            // is lexicographic in the coefficients read from x^(t-1) down
            std::vector<int> cand(t + 1, 0);
            cand[t] = 1;
            long long m = i;
            for (int k = 0; k < t; k++) {
                cand[k] = (int)(m % p);
                m /= p;
            }
            if (std::vector<int>(spec->modulus) == cand) {
                hit_self = true;
                break;
            }
            CHECK_FALSE(brute_irreducible(cand, p));
        }
        CHECK(hit_self);
    }
}

TEST_CASE("field axioms hold on every element pair") {
    for (auto [p, t] : std::vector<std::pair<long, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        auto spec = make_field(p, t);
        auto elems = all_elements(spec);
        REQUIRE((long long)elems.size() == spec->q());
        FqElement zero(spec, 0L), one(spec, 1L);
        for (const auto& a : elems) {
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK(a - a == zero);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == one);
                CHECK(a / a == one);
            }
            for (const auto& b : elems) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (const auto& c : elems)
                    if (&c == &elems[0] || &c == &elems.back())  // spot-check associativity
                        CHECK((a * b) * c == a * (b * c));
            }
        }
    }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
    for (auto [p, t] : std::vector<std::pair<long, int>>{{2, 2}, {3, 2}, {5, 1}, {7, 1}, {2, 3}}) {
        auto spec = make_field(p, t);
        long long q = spec->q();
        long long primitive = 0;
        for (const auto& a : all_elements(spec)) {
            if (a.is_zero()) continue;
            long long o = a.multiplicative_order();
            CHECK((q - 1) % o == 0);
            CHECK(a.pow(o) == FqElement(spec, 1L));
            if (o == q - 1) primitive++;
        }
        CHECK(primitive == phi(q - 1));
    }
}

TEST_CASE("frobenius fixes exactly the prime field") {
    auto spec = make_field(3, 2);
    int fixed = 0;
    for (const auto& a : all_elements(spec))
        if (a.pow(3) == a) fixed++;
    CHECK(fixed == 3);
}
