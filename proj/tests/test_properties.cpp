#include <doctest.h>

#include "algaudit/automorphisms.hpp"
#include "algaudit/census.hpp"
#include "algaudit/derivations.hpp"
#include "support.hpp"

using namespace algaudit;

namespace {

std::vector<AlgebraTable> random_tables() {
    std::mt19937_64 rng(20240601);
    std::vector<AlgebraTable> out;
    for (int i = 0; i < 100; ++i) out.push_back(testsupport::random_associative(rng));
    return out;
}

const std::vector<AlgebraTable>& tables() {
    static const auto t = random_tables();
    return t;
}

ScalarSubspace row_space(const ScalarMatrix& m) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return ScalarSubspace::span(m.cols(), rows);
}

}  // namespace

TEST_CASE("generator yields associative tables") {
    for (const auto& a : tables()) CHECK(testsupport::associative_oracle(a));
}

TEST_CASE("derivation basis has zero Leibniz residual") {
    for (const auto& a : tables()) {
        const auto d = derivation_basis(a);
        const std::size_t n = a.dim();
        for (const auto& m : d.mats) {
            // Independent expansion of D(e_i e_j) - D(e_i) e_j - e_i D(e_j).
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t t = 0; t < n; ++t) {
                        Scalar acc;
                        for (std::size_t k = 0; k < n; ++k) {
                            acc += a.gamma(i, j, k) * m(t, k);
                            acc -= m(k, i) * a.gamma(k, j, t);
                            acc -= m(k, j) * a.gamma(i, k, t);
                        }
                        CHECK(acc.is_zero());
                    }
        }
    }
}

TEST_CASE("tangent system and Leibniz system have the same rows") {
    for (const auto& a : tables()) {
        CHECK(tangent_dim(a) == derivation_basis(a).dim());
        CHECK(row_space(tangent_system(a)) == row_space(build_leibniz_system(a).rows));
    }
}

TEST_CASE("Der is closed under commutators") {
    for (const auto& a : tables()) {
        const auto d = derivation_basis(a);
        for (std::size_t x = 0; x < d.mats.size(); ++x)
            for (std::size_t y = x + 1; y < d.mats.size(); ++y) CHECK(d.space.contains(flatten(commutator(d.mats[x], d.mats[y]))));
    }
}

TEST_CASE("Der transforms under change of basis") {
    std::mt19937_64 rng(5);
    for (std::size_t k = 0; k < 20; ++k) {
        const AlgebraTable& a = tables()[k];
        const std::size_t n = a.dim();
        ScalarMatrix p = ScalarMatrix::identity(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) p(r, c) = Scalar(int(rng() % 5) - 2);
        const AlgebraTable b = change_basis(a, p);
        const auto da = derivation_basis(a), db = derivation_basis(b);
        CHECK(da.dim() == db.dim());
        const ScalarMatrix pinv = inverse(p);
        for (const auto& m : da.mats) CHECK(is_derivation(b, pinv * m * p).ok);
    }
}

TEST_CASE("derivation count mod p matches enumeration") {
    std::size_t checked = 0;
    for (const auto& a : tables()) {
        if (a.dim() > 3) continue;
        const std::uint32_t p = a.dim() <= 2 ? 3 : 2;
        try {
            reduce_table(a, p);
        } catch (const Error&) {
            continue;
        }
        const auto brute = testsupport::brute_force_counts(a, p);
        mpz_class expect;
        mpz_ui_pow_ui(expect.get_mpz_t(), p, derivation_dim_mod_p(a, p));
        CHECK(expect == mpz_class(brute.der));
        CHECK(census(a, p).aut_count == brute.aut);
        if (++checked == 25) break;
    }
    CHECK(checked >= 10);
}

TEST_CASE("identity and its scalings behave") {
    for (const auto& a : tables()) {
        const std::size_t n = a.dim();
        CHECK(is_automorphism(a, ScalarMatrix::identity(n)));
        CHECK(is_derivation(a, ScalarMatrix(n, n)).ok);
    }
}
