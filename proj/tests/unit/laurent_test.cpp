#include <doctest.h>

#include <random>

#include "mumford/errors.hpp"
#include "mumford/laurent.hpp"

using namespace mumford;

namespace {

LocalElement random_exact(const FqSpecPtr& spec, std::mt19937& rng) {
    std::uniform_int_distribution<long> expo(-4, 8);
    std::uniform_int_distribution<long long> coef(0, spec->q() - 1);
    std::uniform_int_distribution<int> nterms(0, 4);
    LocalElement x = LocalElement::exact_zero(spec);
    int k = nterms(rng);
    for (int i = 0; i < k; i++) {
        // index into the field enumeration; 0 terms simply drop out
        std::vector<int> poly;
        long long c = coef(rng);
        for (int d = 0; d < spec->t; d++) {
            poly.push_back((int)(c % spec->p));
            c /= spec->p;
        }
        x = x + LocalElement::monomial(spec, FqElement(spec, poly), expo(rng));
    }
    return x;
}

}  // namespace

TEST_CASE("exact ring identities") {
    auto spec = make_field(5, 1);
    auto pi = LocalElement::pi_pow(spec, 1);
    auto one = LocalElement::from_int(spec, 1);
    CHECK((pi + one) * (pi - one) == pi * pi - one);
    CHECK(pi * LocalElement::pi_pow(spec, -1) == one);
    CHECK((pi + pi + pi + pi + pi).is_exact_zero());
    CHECK(pi.shifted(3) == LocalElement::pi_pow(spec, 4));
}

TEST_CASE("valuation laws on random elements") {
    std::mt19937 rng(12);
    for (auto [p, t] : std::vector<std::pair<long, int>>{{2, 1}, {3, 2}, {7, 1}}) {
        auto spec = make_field(p, t);
        for (int i = 0; i < 200; i++) {
            auto x = random_exact(spec, rng);
            auto y = random_exact(spec, rng);
            auto vx = x.valuation(), vy = y.valuation();
            if (vx && vy) {
                CHECK(*(x * y).valuation() == *vx + *vy);
                auto s = x + y;
                if (auto vs = s.valuation()) CHECK(*vs >= std::min(*vx, *vy));
                if (*vx != *vy) CHECK(*(x + y).valuation() == std::min(*vx, *vy));
            }
            if (vx) {
                auto inv = x.inverse();
                CHECK((x * inv - LocalElement::from_int(spec, 1)).known_zero());
            }
        }
    }
}

TEST_CASE("geometric series inverse digits") {
    auto spec = make_field(3, 1);
    auto x = LocalElement::from_int(spec, 1) - LocalElement::pi_pow(spec, 1);
    auto inv = x.inverse(20);
    // 1/(1 - pi) = 1 + pi + pi^2 + ...
    for (long e = 0; e < 20; e++) CHECK(inv.terms().at(e) == FqElement(spec, 1L));
    CHECK_FALSE(inv.is_exact());
}

TEST_CASE("precision semantics") {
    auto spec = make_field(2, 1);
    auto fuzz = LocalElement::zero_to_precision(spec, 10);
    auto x = LocalElement::pi_pow(spec, 3) + fuzz;
    CHECK(*x.valuation() == 3);
    CHECK_FALSE(x.is_exact());
    CHECK(x.prec() == 10);
    // zero to precision 10: valuation and equality are indeterminate
    CHECK_THROWS_AS(fuzz.valuation(), precision_error);
    CHECK_THROWS_AS((void)(fuzz == LocalElement::exact_zero(spec)), precision_error);
    // but congruence below the precision is decidable
    CHECK(fuzz.congruent_mod(LocalElement::exact_zero(spec), 10));
    CHECK(x.reduced_mod(5) == LocalElement::pi_pow(spec, 3));
    // multiplying by pi shifts the precision window
    CHECK((x * LocalElement::pi_pow(spec, 2)).prec() == 12);
}

TEST_CASE("to_string parse round trip") {
    std::mt19937 rng(99);
    for (auto [p, t] : std::vector<std::pair<long, int>>{{2, 1}, {3, 2}, {2, 2}}) {
        auto spec = make_field(p, t);
        for (int i = 0; i < 100; i++) {
            auto x = random_exact(spec, rng);
            CHECK(parse_local_element(spec, x.to_string()) == x);
        }
    }
    auto spec = make_field(3, 2);
    CHECK(parse_local_element(spec, "(g+1)*pi^(-2) + 2*pi + g*pi^3").to_string() ==
          "(g+1)*pi^(-2) + 2*pi + g*pi^3");
}
