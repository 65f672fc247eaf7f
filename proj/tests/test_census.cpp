#include <doctest.h>

#include "algaudit/census.hpp"
#include "algaudit/errors.hpp"
#include "support.hpp"

using namespace algaudit;

TEST_CASE("two-dimensional fixture over small primes") {
    const AlgebraTable a = testsupport::fixture("As_2^1");
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const CensusResult r = census(a, p);
        CHECK(r.aut_count == (p - 1) * p);
        CHECK(r.der_count == mpz_class(p * p));
        CHECK(r.der_dim == 2);
    }
}

TEST_CASE("zero algebra counts GL_n") {
    CHECK(census(AlgebraTable(2), 2).aut_count == 6);
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(2, 3) == 48);
    CHECK(gl_order(3, 2) == 168);
    CHECK(census(AlgebraTable(2), 3).aut_count == 48);
    CHECK(census(AlgebraTable(3), 2).aut_count == 168);
    CHECK(census(AlgebraTable(2), 3).der_count == mpz_class(81));
}

TEST_CASE("census agrees with exhaustive enumeration") {
    std::mt19937_64 rng(11);
    std::vector<AlgebraTable> tables{testsupport::fixture("As_2^1"), testsupport::fixture("As_3^1"),
                                     testsupport::fixture("As_3^8")};
    for (int i = 0; i < 8; ++i) {
        AlgebraTable a = testsupport::random_associative(rng);
        if (a.dim() <= 3) tables.push_back(a);
    }
    for (const auto& a : tables) {
        const std::uint32_t p = a.dim() == 2 ? 5 : 2;
        bool reducible = true;
        try {
            reduce_table(a, p);
        } catch (const BadPrime&) {
            reducible = false;
        }
        if (!reducible) continue;
        const auto brute = testsupport::brute_force_counts(a, p);
        const CensusResult r = census(a, p);
        CHECK(r.aut_count == brute.aut);
        CHECK(r.der_count == mpz_class(brute.der));
    }
}

TEST_CASE("thread count does not change the result") {
    for (const char* name : {"As_2^1", "As_3^1", "As_3^8"}) {
        const AlgebraTable a = testsupport::fixture(name);
        const CensusResult one = census(a, 5, {1});
        const CensusResult four = census(a, 5, {4});
        const CensusResult seven = census(a, 5, {7});
        CHECK(one.aut_count == four.aut_count);
        CHECK(one.aut_count == seven.aut_count);
        CHECK(one.der_count == four.der_count);
        CHECK(one.pruned == four.pruned);
    }
}

TEST_CASE("bad primes and infeasible sizes") {
    const AlgebraTable a = testsupport::fixture("As_2^1");
    CHECK_THROWS_AS(census(a, 4), InvalidInput);
    CHECK_THROWS_AS(census(a, 17), InvalidInput);
    CHECK_THROWS_AS(census(testsupport::fixture("As_4^2"), 13, {1, 40.0}), Infeasible);
    const AlgebraTable half = parse_table("algebra h dim 2\ne1*e1 = 1/3*e2\n");
    CHECK_THROWS_AS(census(half, 3), BadPrime);
    const AlgebraTable param = parse_table("algebra t dim 2\ne1*e1 = alpha*e2\n");
    CHECK_THROWS_AS(census(param, 3), InvalidInput);
}

TEST_CASE("constants vanishing mod p are reported") {
    const AlgebraTable a = testsupport::fixture("As_2^1");
    const CensusResult r = census(a, 2);
    CHECK_FALSE(r.warnings.empty());
    CHECK(r.aut_count == 2);
    const AlgebraTable b = parse_table("algebra b dim 2\ne1*e1 = 2*e2\n");
    const auto w = vanishing_constant_warnings(b, 2);
    REQUIRE_FALSE(w.empty());
    CHECK(w.front().find("vanishes mod 2") != std::string::npos);
    CHECK(vanishing_constant_warnings(b, 3).empty());
}

TEST_CASE("rank mod p") {
    CHECK(rank_mod_p({1, 2, 2, 4}, 2, 2, 5) == 1);
    CHECK(rank_mod_p({1, 2, 3, 4}, 2, 2, 5) == 2);
    CHECK(rank_mod_p({1, 1, 1, 1}, 2, 2, 2) == 1);
    CHECK(derivation_dim_mod_p(testsupport::fixture("As_2^1"), 2) == 2);
    CHECK(derivation_dim_mod_p(AlgebraTable(2), 3) == 4);
}

TEST_CASE("predicted counts from families") {
    const auto& cat = builtin_catalog();
    const auto pc = predicted_count(find_entry(cat, "As_2^1")->expected_aut->front(), 5);
    REQUIRE(pc.count);
    CHECK(*pc.count == 20);
    CHECK(*predicted_count(find_entry(cat, "As_3^8")->expected_aut->front(), 5).count == 80);
    const auto eqs = parse_families("family r dim 2\nrow: a11, 0\nrow: 0, a22\nnonzero: a11\nrequire: a22 = a11^2\n");
    CHECK_FALSE(predicted_count(eqs.front(), 5).count);
    const auto sum = parse_families("family s dim 2\nrow: a11 + a12, 0\nrow: 0, 1\nnonzero: a11 + a12\n");
    CHECK_FALSE(predicted_count(sum.front(), 5).count);
}
