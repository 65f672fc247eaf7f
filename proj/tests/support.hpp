#pragma once

// Shared fixtures and independent oracles for the test programs. The
// oracles work on raw integer arrays and do not call into the library's
// linear algebra or census code.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "algaudit/algebra.hpp"
#include "algaudit/catalog.hpp"

namespace testsupport {

using algaudit::AlgebraTable;
using algaudit::Rational;

inline Rational gamma_q(const AlgebraTable& a, std::size_t i, std::size_t j, std::size_t k) {
    return a.gamma(i, j, k).constant_value();
}

inline AlgebraTable table_from(std::size_t n, const std::string& name,
                               const std::vector<std::tuple<int, int, int, int>>& products) {
    AlgebraTable a(n, name);
    for (auto [i, j, k, c] : products) a.set_gamma(i - 1, j - 1, k - 1, algaudit::Scalar(Rational(c)));
    return a;
}

inline AlgebraTable fixture(const std::string& name) {
    const auto* e = algaudit::find_entry(algaudit::builtin_catalog(), name);
    return *e->table;
}

/// (e_i e_j) e_k == e_i (e_j e_k) for all triples, over Q, by direct expansion.
inline bool associative_oracle(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t t = 0; t < n; ++t) {
                    Rational lhs, rhs;
                    for (std::size_t m = 0; m < n; ++m) {
                        lhs += gamma_q(a, i, j, m) * gamma_q(a, m, k, t);
                        rhs += gamma_q(a, j, k, m) * gamma_q(a, i, m, t);
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

inline AlgebraTable direct_sum(const AlgebraTable& a, const AlgebraTable& b) {
    const std::size_t n = a.dim(), m = b.dim();
    AlgebraTable s(n + m, a.name() + "+" + b.name());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) s.set_gamma(i, j, k, a.gamma(i, j, k));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) s.set_gamma(n + i, n + j, n + k, b.gamma(i, j, k));
    return s;
}

/// Small associative algebras of dimension 1..4 used as seeds.
inline std::vector<AlgebraTable> seed_algebras() {
    std::vector<AlgebraTable> out;
    for (std::size_t n = 1; n <= 4; ++n) {
        out.emplace_back(n, "zero");
        AlgebraTable nil(n, "nil");  // e_i e_j = e_{i+j}
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i + j + 1 < n) nil.set_gamma(i, j, i + j + 1, algaudit::Scalar(1));
        out.push_back(nil);
        AlgebraTable diag(n, "fields");
        for (std::size_t i = 0; i < n; ++i) diag.set_gamma(i, i, i, algaudit::Scalar(1));
        out.push_back(diag);
        AlgebraTable lz(n, "leftzero"), rz(n, "rightzero");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                lz.set_gamma(i, j, i, algaudit::Scalar(1));
                rz.set_gamma(i, j, j, algaudit::Scalar(1));
            }
        out.push_back(lz);
        out.push_back(rz);
    }
    out.push_back(table_from(3, "T2", {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 3, 2, 1}, {3, 3, 3, 1}}));
    out.push_back(table_from(4, "M2", {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 3, 1, 1}, {2, 4, 2, 1},
                                       {3, 1, 3, 1}, {3, 2, 4, 1}, {4, 3, 3, 1}, {4, 4, 4, 1}}));
    out.push_back(table_from(2, "dual", {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}}));
    out.push_back(table_from(3, "unit-nil", {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}, {1, 3, 3, 1},
                                             {3, 1, 3, 1}, {2, 2, 3, 1}}));
    for (const auto& e : algaudit::builtin_catalog())
        if (e.table) out.push_back(*e.table);
    return out;
}

/// Random associative table with n <= 4: a seed or a direct sum of two
/// seeds, in a random integer basis.
inline AlgebraTable random_associative(std::mt19937_64& rng) {
    static const std::vector<AlgebraTable> seeds = seed_algebras();
    std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
    AlgebraTable a = seeds[pick(rng)];
    if (a.dim() < 4 && rng() % 2) {
        for (int tries = 0; tries < 20; ++tries) {
            const AlgebraTable& b = seeds[pick(rng)];
            if (a.dim() + b.dim() <= 4) {
                a = direct_sum(a, b);
                break;
            }
        }
    }
    const std::size_t n = a.dim();
    std::uniform_int_distribution<int> coef(-2, 2);
    for (;;) {
        algaudit::ScalarMatrix p(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) p(r, c) = algaudit::Scalar(coef(rng));
        if (algaudit::determinant(p).is_zero()) continue;
        AlgebraTable b = algaudit::change_basis(a, p);
        b.set_name("random");
        return b;
    }
}

/// Residue of a rational mod p; p must not divide the denominator.
inline std::uint32_t mod_p(const Rational& x, std::uint32_t p) {
    mpz_class num = x.num() % p, den = x.den() % p;
    if (num < 0) num += p;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
    return static_cast<std::uint32_t>(mpz_class(num * inv % p).get_ui());
}

inline std::vector<std::uint32_t> gamma_mod(const AlgebraTable& a, std::uint32_t p) {
    const std::size_t n = a.dim();
    std::vector<std::uint32_t> g(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) g[(i * n + j) * n + k] = mod_p(gamma_q(a, i, j, k), p);
    return g;
}

/// Visits every n x n matrix over F_p; m[c*n + r] is row r of column c.
inline void for_each_matrix(std::size_t n, std::uint32_t p, const std::function<void(const std::vector<std::uint32_t>&)>& f) {
    std::vector<std::uint32_t> m(n * n, 0);
    for (;;) {
        f(m);
        std::size_t k = 0;
        while (k < m.size() && ++m[k] == p) m[k++] = 0;
        if (k == m.size()) return;
    }
}

inline bool invertible_mod_p(std::vector<std::uint32_t> m, std::size_t n, std::uint32_t p) {
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[c * n + piv] == 0) ++piv;
        if (piv == n) return false;
        for (std::size_t k = 0; k < n; ++k) std::swap(m[k * n + c], m[k * n + piv]);
        std::uint64_t inv = 1;
        for (std::uint32_t t = 1; t < p; ++t)
            if (std::uint64_t(m[c * n + c]) * t % p == 1) inv = t;
        for (std::size_t r = c + 1; r < n; ++r) {
            const std::uint64_t f = m[c * n + r] * inv % p;
            for (std::size_t k = 0; k < n; ++k)
                m[k * n + r] = static_cast<std::uint32_t>((m[k * n + r] + (p - f) * m[k * n + c]) % p);
        }
    }
    return true;
}

/// Image of e_i under the matrix, as a vector.
inline std::uint32_t col(const std::vector<std::uint32_t>& m, std::size_t n, std::size_t i, std::size_t r) {
    return m[i * n + r];
}

/// Counts derivations and automorphisms over F_p by testing every matrix.
struct BruteCounts {
    std::uint64_t der = 0, aut = 0;
};

inline BruteCounts brute_force_counts(const AlgebraTable& a, std::uint32_t p) {
    const std::size_t n = a.dim();
    const auto g = gamma_mod(a, p);
    auto prod = [&](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
        std::vector<std::uint64_t> z(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (x[i] && y[j])
                    for (std::size_t k = 0; k < n; ++k) z[k] = (z[k] + x[i] * y[j] % p * g[(i * n + j) * n + k]) % p;
        return z;
    };
    BruteCounts out;
    for_each_matrix(n, p, [&](const std::vector<std::uint32_t>& m) {
        auto image = [&](const std::vector<std::uint64_t>& x) {
            std::vector<std::uint64_t> y(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t r = 0; r < n; ++r) y[r] = (y[r] + x[i] * col(m, n, i, r)) % p;
            return y;
        };
        bool der = true, hom = true;
        for (std::size_t i = 0; i < n && (der || hom); ++i)
            for (std::size_t j = 0; j < n && (der || hom); ++j) {
                std::vector<std::uint64_t> ei(n, 0), ej(n, 0);
                ei[i] = ej[j] = 1;
                const auto eij = prod(ei, ej);
                const auto lhs = image(eij);
                const auto di = image(ei), dj = image(ej);
                const auto r1 = prod(di, ej), r2 = prod(ei, dj), h = prod(di, dj);
                for (std::size_t k = 0; k < n; ++k) {
                    if (lhs[k] != (r1[k] + r2[k]) % p) der = false;
                    if (lhs[k] != h[k]) hom = false;
                }
            }
        if (der) ++out.der;
        if (hom && invertible_mod_p(m, n, p)) ++out.aut;
    });
    return out;
}

/// Random table with integer constants in [-3, 3] (not necessarily
/// associative), for parser round-trips.
inline AlgebraTable random_table(std::mt19937_64& rng, std::size_t index) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    std::uniform_int_distribution<int> coef(-3, 3);
    const std::size_t n = dim(rng);
    AlgebraTable a(n, "R" + std::to_string(index));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (rng() % 3) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (rng() % 2) {
                    int num = coef(rng);
                    const int den = (rng() % 4 == 0) ? 2 + int(rng() % 3) : 1;
                    a.set_gamma(i, j, k, algaudit::Scalar(Rational(num, den)));
                }
        }
    return a;
}

}  // namespace testsupport
