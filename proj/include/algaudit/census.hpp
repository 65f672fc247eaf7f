#pragma once

/**
 * @file census.hpp
 * @brief Brute-force automorphism and derivation counts over F_p.
 *
 * Automorphisms are enumerated column by column. After column c is assigned,
 * every residual entry R(i, j, .) whose inputs (columns i, j and every k with
 * gamma^k_ij != 0) are all assigned is checked and the branch is cut when it
 * is nonzero. Invertibility is tested last. Work is split by contiguous
 * ranges of the first column across threads, each with a private counter,
 * so the result does not depend on the thread count.
 */

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "algaudit/algebra.hpp"
#include "algaudit/automorphisms.hpp"

namespace algaudit {

inline constexpr double kDefaultMaxNaiveLog2 = 48.0;

struct CensusOptions {
    unsigned threads = 1;
    /// Upper bound on log2(p^(n^2)).
    double max_naive_log2 = kDefaultMaxNaiveLog2;
};

struct CensusResult {
    std::uint32_t p = 0;
    std::size_t n = 0;
    std::uint64_t aut_count = 0;
    std::size_t der_dim = 0;  ///< nullity of the Leibniz system mod p
    mpz_class der_count;      ///< p^der_dim
    std::chrono::duration<double> elapsed{};
    std::uint64_t pruned = 0;
    std::vector<std::string> warnings;
};

/// Primes the census accepts.
const std::vector<std::uint32_t>& census_primes();

/// Structure constants reduced mod p, indexed (i*n + j)*n + k. Throws
/// InvalidInput for tables with parameters and BadPrime for bad denominators.
std::vector<std::uint32_t> reduce_table(const AlgebraTable& a, std::uint32_t p);

/// Rank of an integer matrix mod p (entries already reduced).
std::size_t rank_mod_p(std::vector<std::uint32_t> m, std::size_t rows, std::size_t cols, std::uint32_t p);

/// Warnings for nonzero table or Leibniz-system constants that vanish mod p.
std::vector<std::string> vanishing_constant_warnings(const AlgebraTable& a, std::uint32_t p);

/// Throws InvalidInput (prime not allowed or parameters in the table),
/// BadPrime, or Infeasible.
CensusResult census(const AlgebraTable& a, std::uint32_t p, const CensusOptions& options = {});

/// Nullity of the Leibniz system over F_p.
std::size_t derivation_dim_mod_p(const AlgebraTable& a, std::uint32_t p);

/// |GL_n(F_p)| = prod_{i<n} (p^n - p^i).
mpz_class gl_order(std::size_t n, std::uint32_t p);

struct PredictedCount {
    std::optional<std::uint64_t> count;  ///< empty means UNSUPPORTED
    std::string reason;
};

/// Number of F_p points of a solved-form family whose determinant is a
/// monomial: (p-1) per constrained parameter, p per free one.
PredictedCount predicted_count(const ParametricMatrixFamily& fam, std::uint32_t p);

}  // namespace algaudit
