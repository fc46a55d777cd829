#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modknot/words.hpp"

using namespace modknot;

TEST_CASE("parsing and printing") {
    CHECK(to_string(parse_word("RLL")) == "RLL");
    CHECK(to_string(parse_word("rLl")) == "RLL");
    CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("RXL"), std::invalid_argument);
}

TEST_CASE("canonical rotation and multiplicity") {
    CHECK(CyclicWord("LRL").str() == "RLL");
    CHECK(CyclicWord("LLR").str() == "RLL");
    CHECK(CyclicWord("RLL").mult() == 1);
    CyclicWord sq("RLRL");
    CHECK(sq.str() == "RLRL");
    CHECK(sq.mult() == 2);
    CHECK(to_string(sq.primitive_root()) == "RL");
    CHECK(CyclicWord("RLRLRL").mult() == 3);
    CHECK(CyclicWord("RLLRLL").str() == "RLLRLL");
    CHECK(CyclicWord("RLLRLL").mult() == 2);
    CHECK(CyclicWord("RRRR").mult() == 4);
}

TEST_CASE("transpose is reverse plus swap") {
    CHECK(to_string(transpose(parse_word("RLL"))) == "RRL");
    CHECK(to_string(transpose(parse_word("RRL"))) == "RLL");
    CHECK(CyclicWord("RLL").transpose_class().str() == "RRL");
    CHECK(CyclicWord("RL").symmetric());
    CHECK(!CyclicWord("RLL").symmetric());
    CHECK(CyclicWord("RRRLLL").symmetric());
    CHECK(CyclicWord("RRLRLL").symmetric());
    CHECK(CyclicWord("RRLLRL").symmetric());
    // involution
    for (const char* s : {"RLL", "RRLLL", "RRLRL"}) {
        CyclicWord c(s);
        CHECK(c.transpose_class().transpose_class() == c);
    }
}

TEST_CASE("rad and hyperbolicity") {
    CHECK(rad(parse_word("RLL")) == -1);
    CHECK(CyclicWord("RRL").rad() == 1);
    CHECK(CyclicWord("RRRR").rad() == 4);
    CHECK(!CyclicWord("RRRR").hyperbolic());
    CHECK(CyclicWord("RL").hyperbolic());
    // transpose flips rad
    CHECK(CyclicWord("RRRLL").transpose_class().rad() == -CyclicWord("RRRLL").rad());
}

TEST_CASE("periodized comparison") {
    CHECK(periodized_compare(parse_word("RLL"), parse_word("RL")) == -1);
    CHECK(periodized_compare(parse_word("RL"), parse_word("RLL")) == 1);
    CHECK(periodized_compare(parse_word("LRL"), parse_word("LLR")) == 1);
    CHECK(periodized_compare(parse_word("RL"), parse_word("RLRL")) == 0);
    CHECK(periodized_compare(parse_word("RLL"), parse_word("RLL")) == 0);
    // differs from finite-prefix comparison: RL < RLL as finite strings,
    // but (RL)^inf = RLRLRL... > RLLRLL... = (RLL)^inf
    CHECK(parse_word("RL") < parse_word("RLL"));
}

TEST_CASE("occ counts") {
    CyclicWord rll("RLL");
    CHECK(occ(parse_word("R"), rll) == 1);
    CHECK(occ(parse_word("L"), rll) == 2);
    CHECK(occ(parse_word("RL"), rll) == 1);
    CHECK(occ(parse_word("LL"), rll) == 1);
    CHECK(occ(parse_word("LR"), rll) == 1);
    CHECK(occ(parse_word("RR"), rll) == 0);
    CHECK(occ(parse_word("RLL"), rll) == 1);
    CHECK(occ(parse_word("RLLR"), rll) == 1);  // wraps around
    // long patterns match iff they read along the same periodic orbit
    CHECK(occ(parse_word("RLRL"), CyclicWord("RL")) == 1);
    CHECK(occ(parse_word("RLRR"), CyclicWord("RL")) == 0);
    // powers scale occ
    CHECK(occ(parse_word("RL"), CyclicWord("RLRL")) == 2);
    CHECK(occ(parse_word("L"), CyclicWord("RLRL")) == 2);
}

TEST_CASE("occ_map partitions the shifts") {
    for (const char* s : {"RLL", "RRLRL", "RLRL"}) {
        CyclicWord c(s);
        for (int d = 1; d <= 2 * c.len(); ++d) {
            auto m = occ_map(c, d);
            int total = 0;
            for (auto& [p, k] : m) {
                total += k;
                CHECK(occ(p, c) == k);
            }
            CHECK(total == c.len());
        }
    }
}

TEST_CASE("coprimality") {
    CHECK(coprime(CyclicWord("RLL"), CyclicWord("RRL")));
    CHECK(!coprime(CyclicWord("RL"), CyclicWord("RLRL")));
    CHECK(!coprime(CyclicWord("RLL"), CyclicWord("LLR")));
    CHECK(!coprime(CyclicWord("R"), CyclicWord("RRR")));
}

TEST_CASE("class enumeration counts") {
    // all binary necklaces per length: 2,3,4,6,8,14,20
    CHECK(enumerate_classes(1, ClassFilter::All).size() == 2);
    CHECK(enumerate_classes(7, ClassFilter::All).size() == 2 + 3 + 4 + 6 + 8 + 14 + 20);
    // hyperbolic primitive per length 2..7: 1,2,3,6,9,18
    CHECK(enumerate_classes(5, ClassFilter::HyperbolicPrimitive).size() == 12);
    CHECK(enumerate_classes(6, ClassFilter::HyperbolicPrimitive).size() == 21);
    CHECK(enumerate_classes(7, ClassFilter::HyperbolicPrimitive).size() == 39);
}

TEST_CASE("positive-side class list") {
    auto l3 = enumerate_classes(3, ClassFilter::LyndonPositive);
    REQUIRE(l3.size() == 2);
    CHECK(l3[0].str() == "R");
    CHECK(l3[1].str() == "RRL");

    auto l5 = enumerate_classes(5, ClassFilter::LyndonPositive);
    REQUIRE(l5.size() == 6);
    CHECK(l5[2].str() == "RRRL");
    CHECK(l5[3].str() == "RRLRL");
    CHECK(l5[4].str() == "RRRLL");
    CHECK(l5[5].str() == "RRRRL");

    CHECK(enumerate_classes(6, ClassFilter::LyndonPositive).size() == 9);
}

TEST_CASE("ordering is by length then lex") {
    auto cls = enumerate_classes(3, ClassFilter::All);
    REQUIRE(cls.size() == 9);
    CHECK(cls[0].str() == "L");
    CHECK(cls[1].str() == "R");
    CHECK(cls[2].str() == "LL");
    CHECK(cls[3].str() == "RL");
    CHECK(cls[4].str() == "RR");
    CHECK(cls[5].str() == "LLL");
    CHECK(cls[6].str() == "RLL");
    CHECK(cls[7].str() == "RRL");
    CHECK(cls[8].str() == "RRR");
}

TEST_CASE("powers") {
    CyclicWord c("RLL");
    CHECK(c.power(3).len() == 9);
    CHECK(c.power(3).mult() == 3);
    CHECK(c.power(3).primitive() == c);
    CHECK(c.power(1) == c);
}
