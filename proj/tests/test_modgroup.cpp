#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modknot/modgroup.hpp"

using namespace modknot;

namespace {

MatZ random_element(std::mt19937_64& rng, int steps) {
    MatZ m = MatZ::identity();
    std::uniform_int_distribution<int> pick(0, 3);
    for (int i = 0; i < steps; ++i) {
        switch (pick(rng)) {
            case 0: m = m * mat_L(); break;
            case 1: m = m * mat_R(); break;
            case 2: m = m * mat_L().inverse(); break;
            default: m = m * mat_R().inverse(); break;
        }
    }
    return m;
}

}  // namespace

TEST_CASE("generator relations") {
    MatZ s = mat_S(), t = mat_T();
    CHECK(s * s == MatZ::identity());          // S^2 = -1 = 1 projectively
    CHECK(t * t * t == MatZ::identity());      // T^3 = -1
    CHECK(t * s == mat_R());                   // up to sign, absorbed by the lift
    CHECK(t * t * s == mat_L());
    CHECK(mat_R() * mat_S() == t);             // T = RS
    // S conjugates an element to the transpose of its inverse
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        MatZ m = random_element(rng, 12);
        CHECK(s * m.inverse() * s.inverse() == m.transposed());
    }
}

TEST_CASE("normalized lift") {
    MatZ m(-2, -1, -1, -1);  // -RL
    CHECK(m == word_to_matrix(parse_word("RL")));
    CHECK(m.trace() == 3);
    MatZ e(0, -1, 1, 0);
    CHECK(MatZ(0, 1, -1, 0) == e);  // trace-zero lift picks c > 0
    CHECK_THROWS_AS(MatZ(1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("matrix parsing") {
    CHECK(parse_matrix("2,1,1,1") == word_to_matrix(parse_word("RL")));
    CHECK(parse_matrix(" -2, -1, -1, -1 ") == parse_matrix("2,1,1,1"));
    CHECK_THROWS_AS(parse_matrix("1,0,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("1,0,0,2"), std::invalid_argument);
}

TEST_CASE("word to matrix anchors") {
    CHECK(word_to_matrix(parse_word("RL")) == MatZ(2, 1, 1, 1));
    CHECK(word_to_matrix(parse_word("RLL")) == MatZ(3, 1, 2, 1));
    CHECK(word_to_matrix(parse_word("RRL")) == MatZ(3, 2, 1, 1));
    CHECK(word_to_matrix(parse_word("RLL")).transposed() == word_to_matrix(parse_word("RRL")));
}

TEST_CASE("classification by trace") {
    CHECK(classify(MatZ::identity()) == ElType::Identity);
    CHECK(classify(mat_S()) == ElType::Elliptic);
    CHECK(classify(mat_T()) == ElType::Elliptic);
    CHECK(classify(mat_R()) == ElType::Parabolic);
    CHECK(classify(word_to_matrix(parse_word("RL"))) == ElType::Hyperbolic);
}

TEST_CASE("st_factor reproduces the element") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        MatZ m = random_element(rng, 14);
        STWord w = st_factor(m);
        CHECK(st_to_matrix(w) == m);
        // freely reduced: no SS, no TT/T2T2/TT2 neighbours
        for (size_t k = 0; k + 1 < w.size(); ++k)
            CHECK((w[k] == STGen::S) != (w[k + 1] == STGen::S));
    }
    CHECK(st_factor(MatZ::identity()).empty());
    CHECK(st_factor(mat_S()) == STWord{STGen::S});
    CHECK(st_factor(mat_T()) == STWord{STGen::T});
    CHECK(st_factor(mat_R()) == STWord({STGen::T, STGen::S}));
    CHECK(st_factor(mat_L()) == STWord({STGen::T2, STGen::S}));
}

TEST_CASE("reduce_to_cycle on positive words") {
    auto rll = reduce_to_cycle(word_to_matrix(parse_word("LLR")));
    REQUIRE(rll.kind == ConjClass::Kind::Translation);
    CHECK(rll.cycle->str() == "RLL");
    auto sq = reduce_to_cycle(word_to_matrix(parse_word("LRLR")));
    REQUIRE(sq.kind == ConjClass::Kind::Translation);
    CHECK(sq.cycle->str() == "RLRL");
    CHECK(sq.cycle->mult() == 2);
    auto par = reduce_to_cycle(word_to_matrix(parse_word("RRR")));
    REQUIRE(par.kind == ConjClass::Kind::Translation);
    CHECK(par.cycle->str() == "RRR");
}

TEST_CASE("reduce_to_cycle torsion and identity") {
    CHECK(reduce_to_cycle(MatZ::identity()).kind == ConjClass::Kind::Identity);
    CHECK(reduce_to_cycle(mat_S()).kind == ConjClass::Kind::TorsionS);
    CHECK(reduce_to_cycle(mat_T()).kind == ConjClass::Kind::TorsionT);
    CHECK(reduce_to_cycle(mat_T() * mat_T()).kind == ConjClass::Kind::TorsionT2);
    // parabolic inverses land on the other letter
    auto li = reduce_to_cycle(mat_R().inverse());
    REQUIRE(li.kind == ConjClass::Kind::Translation);
    CHECK(li.cycle->str() == "L");
}

TEST_CASE("reduce_to_cycle is a conjugacy invariant") {
    std::mt19937_64 rng(23);
    std::vector<MatZ> reps = {
        word_to_matrix(parse_word("RLL")),    word_to_matrix(parse_word("RRLRL")),
        word_to_matrix(parse_word("RLRLRL")), mat_R(),
        mat_S(),                              mat_T(),
        mat_T() * mat_T(),                    MatZ::identity(),
    };
    for (const MatZ& m : reps) {
        ConjClass base = reduce_to_cycle(m);
        for (int i = 0; i < 40; ++i) {
            MatZ g = random_element(rng, 10);
            ConjClass conj = reduce_to_cycle(g * m * g.inverse());
            CHECK(conj.kind == base.kind);
            if (base.kind == ConjClass::Kind::Translation) CHECK(*conj.cycle == *base.cycle);
        }
    }
}

TEST_CASE("inverse inverts the cycle up to transpose") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        MatZ m = random_element(rng, 12);
        ConjClass c = reduce_to_cycle(m);
        ConjClass ci = reduce_to_cycle(m.inverse());
        if (c.kind == ConjClass::Kind::Translation) {
            REQUIRE(ci.kind == ConjClass::Kind::Translation);
            CHECK(*ci.cycle == c.cycle->transpose_class());
        } else if (c.kind == ConjClass::Kind::TorsionT) {
            CHECK(ci.kind == ConjClass::Kind::TorsionT2);
        } else if (c.kind == ConjClass::Kind::TorsionT2) {
            CHECK(ci.kind == ConjClass::Kind::TorsionT);
        } else {
            CHECK(ci.kind == c.kind);
        }
        // transpose conjugates like the inverse
        ConjClass ct = reduce_to_cycle(m.transposed());
        CHECK(ct.kind == ci.kind);
        if (ci.kind == ConjClass::Kind::Translation) CHECK(*ct.cycle == *ci.cycle);
    }
}

TEST_CASE("comb_len") {
    CHECK(comb_len(MatZ::identity()) == 0);
    CHECK(comb_len(mat_S()) == 0);
    CHECK(comb_len(mat_R()) == 1);
    CHECK(comb_len(word_to_matrix(parse_word("RLL"))) == 3);
    // positive words never cancel: length is additive
    CHECK(comb_len(word_to_matrix(parse_word("RLL")) * word_to_matrix(parse_word("RRL"))) == 6);
}

TEST_CASE("cosign from length difference") {
    MatZ a = word_to_matrix(parse_word("RLL"));
    MatZ b = word_to_matrix(parse_word("RRL"));
    CHECK(cosign_len(a, b) == 1);
    MatZ s = mat_S();
    MatZ b2 = s * b * s.inverse();
    CHECK(cosign_len(a, b2) == -1);
    CHECK(cosign_len(a, a) == 1);  // same axis, same direction
    CHECK_THROWS_AS(cosign_len(a, mat_S()), std::invalid_argument);
}

TEST_CASE("geodesic length") {
    CHECK(geodesic_length(mat_R()) == 0.0);
    double l = geodesic_length(word_to_matrix(parse_word("RL")));
    CHECK(l == doctest::Approx(2.0 * std::acosh(1.5)).epsilon(1e-12));
}
