#include <set>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "seesaw/quadirr.hpp"
#include "seesaw/rational.hpp"

using namespace seesaw;

TEST_CASE("rational helpers") {
    CHECK(make_rat(6, -4) == make_rat(-3, 2));
    CHECK(parse_rat("-3/2") == make_rat(-3, 2));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(to_string(make_rat(22, 4)) == "11/2");
    CHECK(floor_rat(make_rat(-7, 2)) == -4);
    CHECK(ceil_rat(make_rat(-7, 2)) == -3);
    CHECK(isqrt(Int(99)) == 9);
    CHECK(is_square(Int(144)));
    CHECK(!is_square(Int(145)));
    Int k, f;
    square_split(Int(720), k, f);  // 720 = 144 * 5
    CHECK(k == 5);
    CHECK(f == 12);
    CHECK_THROWS(make_rat(1, 0));
}

TEST_CASE("pell fundamental solutions match the spec examples") {
    auto p5 = pell_fundamental(Int(5));
    CHECK(p5.u == 9);
    CHECK(p5.v == 4);
    auto p12 = pell_fundamental(Int(12));
    CHECK(p12.u == 7);
    CHECK(p12.v == 2);
    CHECK_THROWS(pell_fundamental(Int(4)));
    CHECK_THROWS(pell_fundamental(Int(-3)));
}

TEST_CASE("pell solutions are exact for D <= 2000 and minimal for D <= 120") {
    for (Int D = 2; D <= 2000; ++D) {
        if (is_square(D)) continue;
        auto p = pell_fundamental(D);
        CHECK(p.u * p.u - D * p.v * p.v == 1);
        if (D <= 120) CHECK(oracle::pell_is_fundamental(p));
    }
}

TEST_CASE("continued fraction of sqrt(D)") {
    auto c5 = cfrac_sqrt(Int(5));
    REQUIRE(c5.terms.size() >= 2);
    CHECK(c5.terms[0] == 2);
    CHECK(c5.terms[1] == 4);
    CHECK(c5.period_start == 1);
    CHECK(c5.period_len == 1);

    auto c2 = cfrac_sqrt(Int(2));
    CHECK(c2.terms[0] == 1);
    CHECK(c2.terms[1] == 2);
    CHECK(c2.period_len == 1);

    auto c19 = cfrac_sqrt(Int(19));  // [4; 2,1,3,1,2,8] period 6
    CHECK(c19.period_len == 6);
    CHECK(c19.terms[1] == 2);
    CHECK(c19.terms[6] == 8);

    CHECK_THROWS(cfrac_sqrt(Int(9)));
}

TEST_CASE("QuadIrr sign determination") {
    CHECK(QuadIrr(Int(5), Rat(-7), Rat(1)).sign() == -1);
    CHECK(QuadIrr(Int(5), Rat(0), Rat(0)).sign() == 0);
    CHECK(QuadIrr(Int(5), Rat(-2), Rat(1)).sign() == 1);
    CHECK(QuadIrr(Int(2), Rat(1), make_rat(-7, 10)).sign() == 1);   // 1 - 0.7*sqrt2 > 0
    CHECK(QuadIrr(Int(2), Rat(1), make_rat(-71, 100)).sign() == -1);  // 1 - 0.71*sqrt2 < 0
}

TEST_CASE("QuadIrr field arithmetic on random triples") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> dist(-30, 30);
    const Int D(13);
    auto rnd = [&] {
        return QuadIrr(D, make_rat(dist(rng), 1 + std::abs(dist(rng))),
                       make_rat(dist(rng), 1 + std::abs(dist(rng))));
    };
    for (int i = 0; i < 1000; ++i) {
        QuadIrr a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
        CHECK(a.conj() * a == QuadIrr::rational(D, a.norm()));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == QuadIrr::rational(D, Rat(1)));
        }
    }
}

TEST_CASE("QuadIrr sign agrees with certified dyadic enclosures") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    const Int discs[] = {Int(2), Int(5), Int(12), Int(60), Int(997)};
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        Int D = discs[static_cast<std::size_t>(i) % 5];
        QuadIrr v(D, make_rat(dist(rng), 1 + std::abs(dist(rng))),
                  make_rat(dist(rng), 1 + std::abs(dist(rng))));
        Rat lo, hi;
        sqrt_enclosure(D, 128, lo, hi);
        Rat vlo = v.x() + (sign(v.y()) >= 0 ? v.y() * lo : v.y() * hi);
        Rat vhi = v.x() + (sign(v.y()) >= 0 ? v.y() * hi : v.y() * lo);
        if (sign(vlo) == sign(vhi)) {
            CHECK(v.sign() == sign(vlo));
            ++checked;
        } else {
            CHECK((v.sign() == 0 || abs(num(vhi - vlo)) > 0));
        }
    }
    CHECK(checked > 9000);
}

TEST_CASE("QuadIrr floor and powers") {
    QuadIrr golden(Int(5), make_rat(1, 2), make_rat(1, 2));
    CHECK(golden.floor() == 1);
    CHECK((-golden).floor() == -2);
    CHECK(golden.pow(2) == golden * golden);
    CHECK(golden.pow(-1) == golden.inverse());
    QuadIrr eps(Int(5), Rat(9), Rat(4));
    CHECK(eps.norm() == 1);
    CHECK(eps.pow(3).norm() == 1);
    CHECK(QuadIrr::same_field_value(QuadIrr::sqrt_of(Int(20)), QuadIrr(Int(5), Rat(0), Rat(2))));
}
