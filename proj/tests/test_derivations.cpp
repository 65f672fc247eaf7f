#include <doctest.h>

#include "algaudit/derivations.hpp"
#include "support.hpp"

using namespace algaudit;

namespace {
ScalarMatrix mat(std::size_t n, std::vector<int> rows_first) {
    ScalarMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(rows_first[r * n + c]);
    return m;
}
}  // namespace

TEST_CASE("Der of the two-dimensional fixture") {
    const AlgebraTable a = testsupport::fixture("As_2^1");
    const DerivationBasis d = derivation_basis(a);
    CHECK(d.dim() == 2);
    // D(e1) = d11 e1 + d21 e2 and D(e2) = 2 d11 e2.
    const auto expected = ScalarSubspace::span(4, {flatten(mat(2, {1, 0, 0, 2})), flatten(mat(2, {0, 0, 1, 0}))});
    CHECK(d.space == expected);
    CHECK_FALSE(is_derivation(a, mat(2, {1, 0, 0, 1})).ok);
    CHECK(is_derivation(a, mat(2, {3, 0, 5, 6})).ok);
}

TEST_CASE("Der dimensions of fixtures") {
    CHECK(derivation_basis(testsupport::fixture("As_3^1")).dim() == 4);
    CHECK(derivation_basis(testsupport::fixture("As_3^8")).dim() == 3);
    CHECK(derivation_basis(AlgebraTable(3)).dim() == 9);
}

TEST_CASE("Leibniz system layout") {
    const AlgebraTable a = testsupport::fixture("As_2^1");
    const LeibnizSystem s = build_leibniz_system(a);
    CHECK(s.rows.rows() == 8);
    CHECK(s.rows.cols() == 4);
    // Row (1,1,2): D(e1e1) component e2 is d22; minus (D(e1) e1 + e1 D(e1)) = 2 d11.
    const auto row = s.rows.row(((0 * 2 + 0) * 2) + 1);
    CHECK(row[unknown_index(2, 1, 1)] == Scalar(1));
    CHECK(row[unknown_index(2, 0, 0)] == Scalar(-2));
    CHECK(unflatten(2, flatten(mat(2, {1, 2, 3, 4}))) == mat(2, {1, 2, 3, 4}));
}

TEST_CASE("residual names the failing product") {
    const AlgebraTable a = testsupport::fixture("As_2^1");
    const DerivationCheck c = is_derivation(a, mat(2, {1, 0, 0, 0}));
    CHECK_FALSE(c.ok);
    // D(e1 e1) - D(e1) e1 - e1 D(e1) = 0 - 2 e2.
    CHECK(c.residual[0] == Element{Scalar(0), Scalar(-2)});
    CHECK(c.residual[3] == Element{Scalar(0), Scalar(0)});
}

TEST_CASE("central derivations") {
    const AlgebraTable a = testsupport::fixture("As_2^1");
    const auto c = central_derivations(a);
    CHECK(c.dim() == 1);
    CHECK(c.contains(flatten(mat(2, {0, 0, 1, 0}))));
    CHECK(central_derivations(testsupport::fixture("As_3^8")).dim() == 0);
    CHECK(central_derivations(a, true).dim() == 1);
}

TEST_CASE("commutators of derivations are derivations") {
    for (const char* name : {"As_3^1", "As_3^8", "As_4^2", "As_4^4"}) {
        const AlgebraTable a = testsupport::fixture(name);
        const auto d = derivation_basis(a);
        for (const auto& x : d.mats)
            for (const auto& y : d.mats) CHECK(is_derivation(a, commutator(x, y)).ok);
    }
}
