#include <doctest.h>

#include "algaudit/errors.hpp"
#include "algaudit/linalg.hpp"
#include "algaudit/rational.hpp"

using namespace algaudit;
using Q = Rational;
using QM = Matrix<Q>;

TEST_CASE("rank, determinant and inverse") {
    QM m(3, 3, {Q(1), Q(2), Q(3), Q(4), Q(5), Q(6), Q(7), Q(8), Q(10)});
    CHECK(rank(m) == 3);
    CHECK(determinant(m) == Q(-3));
    CHECK(m * inverse(m) == QM::identity(3));
    QM s(2, 2, {Q(1), Q(2), Q(2), Q(4)});
    CHECK(rank(s) == 1);
    CHECK(determinant(s).is_zero());
    CHECK_THROWS_AS(inverse(s), InvalidInput);
}

TEST_CASE("null space vectors satisfy the system") {
    QM m(2, 4, {Q(1), Q(1), Q(0), Q(0), Q(0), Q(0), Q(1), Q(-1)});
    const auto ns = nullspace_vectors(m);
    CHECK(ns.size() == 2);
    for (const auto& v : ns)
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Q acc;
            for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * v[c];
            CHECK(acc.is_zero());
        }
}

TEST_CASE("subspaces compare by span") {
    const auto a = Subspace<Q>::span(3, {{Q(1), Q(1), Q(0)}, {Q(0), Q(1), Q(1)}});
    const auto b = Subspace<Q>::span(3, {{Q(1), Q(0), Q(-1)}, {Q(2), Q(3), Q(1)}});
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a.contains(std::vector<Q>{Q(1), Q(2), Q(1)}));
    CHECK_FALSE(a.contains(std::vector<Q>{Q(1), Q(0), Q(0)}));
    CHECK(a.annihilator().dim() == 1);
    const auto line = Subspace<Q>::span(3, {{Q(1), Q(0), Q(0)}});
    CHECK(a.intersect(line).dim() == 0);
    CHECK(a.sum(line) == Subspace<Q>::whole(3));
    CHECK(Subspace<Q>::kernel(QM::identity(3)).is_zero());
}
