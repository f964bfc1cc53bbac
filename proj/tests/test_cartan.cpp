#include <doctest.h>

#include "bracket.hpp"
#include "qac/cartan.hpp"

using namespace qac;
using qac::testing::brackets;

TEST_CASE("builtin type A denominators") {
    AffineTypeData A2 = builtin_type_A(3);
    CHECK(A2.rank == 2);
    CHECK(A2.pstar == neg_q_pow(3));
    CHECK(A2.ptilde == q_pow(Rat(6)));
    CHECK(A2.dual_node(1) == 2);
    CHECK(A2.dual_node(2) == 1);

    RootMultiset d11;
    d11.add(neg_q_pow(2));
    CHECK(A2.denom_at(1, 1) == d11);
    RootMultiset d21;
    d21.add(neg_q_pow(3));
    CHECK(A2.denom_at(2, 1) == d21);

    AffineTypeData A1 = builtin_type_A(2);
    RootMultiset d;
    d.add(q_pow(Rat(2)));
    CHECK(A1.denom_at(1, 1) == d);
    CHECK(A1.pstar == q_pow(Rat(2)));
    CHECK(A1.ptilde == q_pow(Rat(4)));

    CHECK_THROWS_AS(builtin_type_A(1), TypeDataError);
}

TEST_CASE("type data files") {
    SUBCASE("bundled A2~1 file equals the builtin") {
        AffineTypeData loaded = load_type(std::string(QAC_DATA_DIR) + "/a2_1.json");
        CHECK(loaded == builtin_type_A(3));
    }
    SUBCASE("non-involutive dual is rejected") {
        const char* text = R"({
            "name": "bad", "rank": 2,
            "pstar": {"zeta": "1/2", "qexp": "3"},
            "dual": [1, 1], "m": [1, 1],
            "denominators": {"1,1": [], "1,2": [], "2,1": [], "2,2": []}
        })";
        CHECK_THROWS_WITH_AS(parse_type_data(text),
                             doctest::Contains("not an involution"), TypeDataError);
    }
    SUBCASE("missing pair is rejected") {
        const char* text = R"({
            "name": "bad", "rank": 2,
            "pstar": {"zeta": "1/2", "qexp": "3"},
            "dual": [2, 1], "m": [1, 1],
            "denominators": {"1,1": [], "2,1": [], "2,2": []}
        })";
        CHECK_THROWS_WITH_AS(parse_type_data(text),
                             doctest::Contains("missing denominator for pair (1,2)"),
                             TypeDataError);
    }
    SUBCASE("rational q-exponents load exactly") {
        // square-root parameters are representable; no builtin table uses
        // them, so this only pins the format and the exact arithmetic
        const char* text = R"({
            "name": "halfstep", "rank": 1,
            "pstar": {"zeta": "1/2", "qexp": "1/2"},
            "dual": [1], "m": [2],
            "denominators": {"1,1": [{"zeta": "1/2", "qexp": "3/2", "mult": 2}]}
        })";
        AffineTypeData T = parse_type_data(text);
        CHECK(T.ptilde == q_pow(Rat(1)));
        CHECK(T.denom_at(1, 1).multiplicity(SpectralParam(Rat(1, 2), Rat(3, 2))) == 2);
        GFun a = universal_coefficient(T, 1, 1);
        CHECK(deg(fundamental_c(T, 1, 1), T.ptilde) ==
              2 * deg_tilde(fundamental_c(T, 1, 1), T.ptilde) -
                  deg_inf(fundamental_c(T, 1, 1), T.ptilde));
        (void)a;
    }
    SUBCASE("m out of range is rejected") {
        const char* text = R"({
            "name": "bad", "rank": 1,
            "pstar": {"zeta": "0", "qexp": "1"},
            "dual": [1], "m": [4],
            "denominators": {"1,1": []}
        })";
        CHECK_THROWS_WITH_AS(parse_type_data(text), doctest::Contains("must be in {1,2,3}"),
                             TypeDataError);
    }
    SUBCASE("non-positive multiplicities are rejected") {
        const char* text = R"({
            "name": "bad", "rank": 1,
            "pstar": {"zeta": "0", "qexp": "1"},
            "dual": [1], "m": [1],
            "denominators": {"1,1": [{"zeta": "0", "qexp": "2", "mult": -1}]}
        })";
        CHECK_THROWS_WITH_AS(parse_type_data(text), doctest::Contains("multiplicity"),
                             TypeDataError);
    }
    SUBCASE("resolve_type handles builtin names and paths") {
        CHECK(resolve_type("A2~1") == builtin_type_A(3));
        CHECK(resolve_type("A7~1") == builtin_type_A(8));
        CHECK(resolve_type(std::string(QAC_DATA_DIR) + "/a2_1.json") == builtin_type_A(3));
        CHECK_THROWS_AS(resolve_type("no_such_file.json"), TypeDataError);
    }
}

TEST_CASE("universal coefficient") {
    SUBCASE("A1~1 node pair (1,1)") {
        AffineTypeData A1 = builtin_type_A(2);
        GFun a = universal_coefficient(A1, 1, 1);
        GFun expect;
        expect.mul_factor(q_pow(Rat(4)), 1);
        expect.mul_factor(param_one(), 1);
        expect.mul_factor(q_pow(Rat(2)), -2);
        CHECK(a == expect);
    }
    SUBCASE("A2~1 node pair (1,1)") {
        AffineTypeData A2 = builtin_type_A(3);
        CHECK(universal_coefficient(A2, 1, 1) == brackets({0, 6}, {2, 4}));
    }
    SUBCASE("agrees with the closed bracket formula for n <= 8") {
        for (int n = 2; n <= 8; ++n) {
            AffineTypeData T = builtin_type_A(n);
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j) {
                    GFun closed = brackets(
                        {std::abs(i - j), 2 * n - std::abs(i - j)}, {i + j, 2 * n - i - j});
                    CHECK(universal_coefficient(T, i, j) == closed);
                }
        }
    }
}

TEST_CASE("fundamental renormalizing coefficient") {
    AffineTypeData A2 = builtin_type_A(3);
    CHECK(fundamental_c(A2, 1, 1) == brackets({2, -2}, {0, 6}));

    AffineTypeData A1 = builtin_type_A(2);
    GFun expect;
    expect.mul_factor(q_pow(Rat(-2)), 1);
    expect.mul_factor(q_pow(Rat(2)), 1);
    expect.mul_factor(param_one(), -1);
    expect.mul_factor(q_pow(Rat(4)), -1);
    CHECK(fundamental_c(A1, 1, 1) == expect);
    CHECK(deg(fundamental_c(A1, 1, 1), A1.ptilde) == 0);

    SUBCASE("diagonal pairs have deg 0 and deg_inf opposite to the universal one") {
        for (int n = 2; n <= 8; ++n) {
            AffineTypeData T = builtin_type_A(n);
            for (int i = 1; i < n; ++i) CHECK(deg(fundamental_c(T, i, i), T.ptilde) == 0);
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j)
                    CHECK(deg_inf(fundamental_c(T, i, j), T.ptilde) ==
                          -deg_inf(universal_coefficient(T, i, j), T.ptilde));
        }
    }
    SUBCASE("two-root denominator in A3~1") {
        // d_{2,2} = (z - (-q)^2)(z - (-q)^4), pstar = q^4, ptilde = q^8;
        // dividing out the universal coefficient [0][8]/([4][4]) leaves
        // [-2][-4][4]/([6][0][8])
        AffineTypeData A3 = builtin_type_A(4);
        RootMultiset d22;
        d22.add(neg_q_pow(2));
        d22.add(neg_q_pow(4));
        CHECK(A3.denom_at(2, 2) == d22);
        CHECK(universal_coefficient(A3, 2, 2) == brackets({0, 8}, {4, 4}));
        CHECK(fundamental_c(A3, 2, 2) == brackets({-2, -4, 4}, {6, 0, 8}));
        CHECK(deg(fundamental_c(A3, 2, 2), A3.ptilde) == 0);
    }
    SUBCASE("dual symmetry of tables and coefficients") {
        for (int n = 2; n <= 8; ++n) {
            AffineTypeData T = builtin_type_A(n);
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j) {
                    CHECK(T.denom_at(i, j) == T.denom_at(T.dual_node(i), T.dual_node(j)));
                    CHECK(fundamental_c(T, i, j) ==
                          fundamental_c(T, T.dual_node(i), T.dual_node(j)));
                }
        }
    }
}
