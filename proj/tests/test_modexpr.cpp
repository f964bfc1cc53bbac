#include <doctest.h>

#include <random>

#include "qac/modexpr.hpp"

using namespace qac;

namespace {

StandardModule mod(std::initializer_list<FundParam> fs) {
    StandardModule m;
    m.factors = fs;
    return m;
}

} // namespace

TEST_CASE("shift") {
    AffineTypeData A1 = builtin_type_A(2);
    StandardModule m = mod({{1, neg_q_pow(-2)}});
    CHECK(shifted(m, neg_q_pow(2)) == mod({{1, param_one()}}));
    CHECK(shifted(StandardModule::unit(), neg_q_pow(3)).is_unit());
    StandardModule two = mod({{1, q_pow(Rat(1))}, {1, q_pow(Rat(5))}});
    SpectralParam a = neg_q_pow(7);
    CHECK(shifted(shifted(two, a), inverse(a)) == two);
    (void)A1;
}

TEST_CASE("duals") {
    AffineTypeData A1 = builtin_type_A(2);
    SUBCASE("left dual of V(1)_q in A1~1") {
        StandardModule m = mod({{1, q_pow(Rat(1))}});
        CHECK(left_dual(A1, m) == mod({{1, q_pow(Rat(-1))}}));  // i* = 1, pstar = q^2
        CHECK(right_dual(A1, left_dual(A1, m)) == m);
    }
    SUBCASE("double left dual is the ptilde^-1 shift") {
        AffineTypeData A3 = builtin_type_A(4);
        StandardModule m = mod({{1, q_pow(Rat(2))}, {3, neg_q_pow(-1)}});
        CHECK(left_dual(A3, left_dual(A3, m)) == shifted(m, inverse(A3.ptilde)));
        CHECK(dual_power(A3, m, -2) == shifted(m, inverse(A3.ptilde)));
        CHECK(dual_power(A3, m, 2) == shifted(m, A3.ptilde));
    }
    SUBCASE("dual_power composes and inverts") {
        AffineTypeData A2 = builtin_type_A(3);
        StandardModule m = mod({{1, neg_q_pow(1)}, {2, neg_q_pow(-4)}});
        CHECK(dual_power(A2, m, 0) == m);
        for (long long k : {-3LL, -1LL, 1LL, 4LL})
            CHECK(dual_power(A2, dual_power(A2, m, k), -k) == m);
        // odd powers reverse the order and dualize nodes
        StandardModule d = dual_power(A2, m, 1);
        CHECK(d.factors[0].node == A2.dual_node(2));
        CHECK(d.factors[1].node == A2.dual_node(1));
    }
}

TEST_CASE("bar") {
    StandardModule m = mod({{1, neg_q_pow(2)}});
    CHECK(barred(m) == mod({{1, neg_q_pow(-2)}}));
    StandardModule two = mod({{1, neg_q_pow(1)}, {2, q_pow(Rat(1, 2))}});
    CHECK(barred(barred(two)) == two);
    CHECK(barred(StandardModule::unit()).is_unit());
    CHECK(barred(two).factors[0].node == 2);  // order reversed
}

TEST_CASE("iso_equal") {
    AffineTypeData A2 = builtin_type_A(3);
    StandardModule ab = mod({{1, q_pow(Rat(1))}, {2, q_pow(Rat(9))}});
    StandardModule ba = mod({{2, q_pow(Rat(9))}, {1, q_pow(Rat(1))}});
    CHECK(iso_equal(A2, ab, ba));
    CHECK_FALSE(iso_equal(A2, mod({{1, q_pow(Rat(1))}}), mod({{1, q_pow(Rat(3))}})));
    CHECK_FALSE(iso_equal(A2, ab, mod({{1, q_pow(Rat(1))}})));

    SUBCASE("m_i = 2 identifies a with -a") {
        AffineTypeData T;
        T.name = "m2";
        T.rank = 1;
        T.pstar = q_pow(Rat(1));
        T.ptilde = q_pow(Rat(2));
        T.dual = {1};
        T.m = {2};
        T.denom[{1, 1}] = RootMultiset();
        T.validate();
        StandardModule a = mod({{1, q_pow(Rat(3))}});
        StandardModule minus_a = mod({{1, SpectralParam(Rat(1, 2), Rat(3))}});
        CHECK(iso_equal(T, a, minus_a));
        AffineTypeData T1 = T;
        T1.m = {1};
        CHECK_FALSE(iso_equal(T1, a, minus_a));
    }
}

TEST_CASE("weight") {
    AffineTypeData A2 = builtin_type_A(3);
    StandardModule m = mod({{1, param_one()}, {2, neg_q_pow(1)}});
    Weight w = weight(m);
    CHECK(w == Weight{{1, 1}, {2, 1}});
    CHECK(weight(StandardModule::unit()).empty());
    StandardModule n = mod({{2, q_pow(Rat(2))}});
    CHECK(weight(tensor(m, n)) == weight_sum(weight(m), weight(n)));
    (void)A2;
}

TEST_CASE("module expression parsing") {
    AffineTypeData A2 = builtin_type_A(3);
    SUBCASE("two factors") {
        StandardModule m = parse_module(A2, "V(1)[(-q)^-2] * V(1)[(-q)^0]");
        CHECK(m.factors.size() == 2);
        CHECK(m.factors[0] == FundParam{1, neg_q_pow(-2)});
        CHECK(m.factors[1] == FundParam{1, param_one()});
    }
    SUBCASE("trivial module") {
        CHECK(parse_module(A2, "1").is_unit());
        CHECK(parse_module(A2, " 1 ").is_unit());
        CHECK(parse_module(A2, "1 * V(2)[q^3]").factors.size() == 1);
    }
    SUBCASE("whitespace insensitivity") {
        CHECK(parse_module(A2, "V( 1 ) [ q^2 ]*V(2)[ zeta(1/3) * q^(1/2) ]") ==
              parse_module(A2, "V(1)[q^2] * V(2)[zeta(1/3)*q^(1/2)]"));
    }
    SUBCASE("node range error") {
        CHECK_THROWS_WITH_AS(parse_module(A2, "V(9)[q^1]"), doctest::Contains("out of range"),
                             ParseError);
    }
    SUBCASE("syntax errors carry positions") {
        try {
            parse_module(A2, "V(1)[q^2] + V(2)[q^0]");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.pos == 10);
        }
        CHECK_THROWS_AS(parse_module(A2, ""), ParseError);
        CHECK_THROWS_AS(parse_module(A2, "V(1)[q^2] *"), ParseError);
        CHECK_THROWS_AS(parse_module(A2, "V(1)[oops]"), ParseError);
        CHECK_THROWS_AS(parse_module(A2, "V(1)[q^2"), ParseError);
    }
    SUBCASE("render round trip on random modules") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 200; ++t) {
            StandardModule m;
            long long k = rng() % 4;
            for (long long s = 0; s < k; ++s)
                m.factors.push_back(
                    {(int)(1 + rng() % 2), neg_q_pow((long long)(rng() % 25) - 12)});
            CHECK(parse_module(A2, render_module(m)) == m);
        }
    }
}
