#include <doctest.h>

#include "algaudit/automorphisms.hpp"
#include "algaudit/derivations.hpp"
#include "algaudit/errors.hpp"
#include "support.hpp"

using namespace algaudit;

namespace {
ParametricMatrixFamily family(const std::string& text) { return parse_families(text).front(); }

const char* kAs21 = "family As_2^1 dim 2\nrow: a11, 0\nrow: a21, a11^2\nnonzero: a11\n";
}  // namespace

TEST_CASE("printed families verify") {
    const FamilyVerdict v = verify_family(testsupport::fixture("As_2^1"), family(kAs21));
    CHECK(v.status == FamilyStatus::Verified);
    const auto* e = find_entry(builtin_catalog(), "As_3^8");
    CHECK(verify_family(*e->table, e->expected_aut->front()).status == FamilyStatus::Verified);
}

TEST_CASE("corrupted family fails with a rational witness") {
    const AlgebraTable a = testsupport::fixture("As_2^1");
    const auto f = family("family bad dim 2\nrow: a11, 0\nrow: a21, a11^3\nnonzero: a11\n");
    const FamilyVerdict v = verify_family(a, f);
    REQUIRE(v.status == FamilyStatus::Failed);
    CHECK_FALSE(v.residual_entry.is_zero());
    REQUIRE_FALSE(v.witness.empty());
    const ScalarMatrix m = instantiate(f, v.witness);
    CHECK_FALSE(is_automorphism(a, m));
    CHECK_FALSE(determinant(m).is_zero());
}

TEST_CASE("homomorphism residual") {
    const AlgebraTable a = testsupport::fixture("As_2^1");
    ScalarMatrix f = ScalarMatrix::identity(2);
    CHECK(hom_residual(a, f).is_zero());
    CHECK(is_automorphism(a, f));
    f(1, 1) = Scalar(2);
    CHECK_FALSE(hom_residual(a, f).is_zero());
    CHECK_FALSE(is_automorphism(a, ScalarMatrix(2, 2)));
}

TEST_CASE("tangent space equals Der on fixtures") {
    for (const char* name : {"As_2^1", "As_3^1", "As_3^8", "As_4^2", "As_4^4"}) {
        const AlgebraTable a = testsupport::fixture(name);
        CHECK(tangent_dim(a) == derivation_basis(a).dim());
    }
    CHECK(tangent_dim(AlgebraTable(2)) == 4);
}

TEST_CASE("family determinant and well-formedness") {
    const auto f = family(kAs21);
    CHECK(family_determinant(f.entries) == parse_scalar("a11^3", f.space));
    CHECK_NOTHROW(check_family_well_formed(f));
    auto g = f;
    g.entries(1, 0) = parse_scalar("1/a21", f.space);
    CHECK_THROWS_AS(check_family_well_formed(g), InvalidInput);
    // The parser applies the same rule.
    CHECK_THROWS_AS(parse_families("family g dim 2\nrow: a11, 0\nrow: 1/a21, a11^2\nnonzero: a11\n"), ParseError);
    CHECK(f.free_parameters() == std::vector<std::string>{"a11", "a21"});
}

TEST_CASE("closure spot check") {
    const AlgebraTable a = testsupport::fixture("As_2^1");
    CHECK(closure_spot_check(a, family(kAs21), 10, 42));
    const auto* e = find_entry(builtin_catalog(), "As_3^8");
    CHECK(closure_spot_check(*e->table, e->expected_aut->front(), 10, 7));
}

TEST_CASE("instantiate rejects vanishing denominators") {
    const auto f = family("family h dim 2\nrow: a11, 0\nrow: 1/a11, a11^2\nnonzero: a11\n");
    CHECK_THROWS_AS(instantiate(f, {{"a11", Rational(0)}}), DegenerateParameter);
}

TEST_CASE("radical family is unverifiable") {
    const auto* e = find_entry(builtin_catalog(), "As_4^16");
    REQUIRE(e->expected_aut);
    CHECK(e->expected_aut->front().unverifiable == std::optional<std::string>("radical entries"));
}
