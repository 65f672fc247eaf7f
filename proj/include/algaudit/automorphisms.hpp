#pragma once

/**
 * @file automorphisms.hpp
 * @brief Homomorphism residuals, parametric automorphism families and the
 * tangent space of Aut(A) at the identity.
 *
 * Matrices follow the column convention f(e_i) = sum_j a_{ji} e_j, the same
 * one used for derivations.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algaudit/algebra.hpp"

namespace algaudit {

/// R(i, j, t) = coefficient of e_t in f(e_i) f(e_j) - f(e_i e_j).
class HomResidual {
public:
    HomResidual() = default;
    explicit HomResidual(std::size_t n) : n_(n), r_(n * n * n, Scalar(0)) {}

    std::size_t dim() const { return n_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t t) { return r_[(i * n_ + j) * n_ + t]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t t) const { return r_[(i * n_ + j) * n_ + t]; }
    const std::vector<Scalar>& entries() const { return r_; }
    bool is_zero() const;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> r_;
};

HomResidual hom_residual(const AlgebraTable& a, const ScalarMatrix& f);

/// Zero residual and nonzero determinant.
bool is_automorphism(const AlgebraTable& a, const ScalarMatrix& f);

/**
 * Matrix of rational functions in free parameters describing a claimed set
 * of automorphisms. `entries` is empty for families that cannot be written
 * over Q(parameters); `unverifiable` then holds the reason.
 */
struct ParametricMatrixFamily {
    std::string name;  ///< algebra label, e.g. "As_2^1"
    std::size_t branch = 1;
    std::size_t n = 0;
    Space space;
    ScalarMatrix entries;
    std::vector<MultiPoly> nonvanishing;
    std::vector<MultiPoly> equations;
    std::optional<std::string> unverifiable;
    std::vector<std::string> raw_rows;  ///< rows as written, for display
    std::vector<std::string> notes;

    bool has_entries() const { return entries.rows() == n && n > 0; }
    /// Parameters other than alpha, in space order.
    std::vector<std::string> free_parameters() const;
};

/// Throws InvalidInput when some entry denominator does not divide a power of
/// the product of the nonvanishing polynomials (alpha-only factors are
/// always allowed).
void check_family_well_formed(const ParametricMatrixFamily& fam);

using Assignment = std::vector<std::pair<std::string, Rational>>;

enum class FamilyStatus { Verified, Failed, Unverifiable };

struct FamilyVerdict {
    FamilyStatus status = FamilyStatus::Unverifiable;
    std::string reason;
    // Populated for Failed.
    std::size_t i = 0, j = 0, t = 0;
    Scalar residual_entry;
    Assignment witness;
};

std::string to_string(FamilyStatus s);

FamilyVerdict verify_family(const AlgebraTable& a, const ParametricMatrixFamily& fam);

/// Family matrix at a full parameter assignment. Throws DegenerateParameter
/// on a vanishing denominator.
ScalarMatrix instantiate(const ParametricMatrixFamily& fam, const Assignment& values);

/// Jacobian of the residual at the identity, computed by the exact central
/// difference (R(I + E_u) - R(I - E_u)) / 2, which is exact because R is
/// quadratic. Rows are indexed (i, j, t) like the Leibniz system.
ScalarMatrix tangent_system(const AlgebraTable& a);

std::size_t tangent_dim(const AlgebraTable& a);

/// Samples `trials` members (deterministic for a seed) and checks that each
/// member, its inverse, and products of consecutive members are
/// automorphisms. Throws InvalidInput when constraints cannot be satisfied.
bool closure_spot_check(const AlgebraTable& a, const ParametricMatrixFamily& fam, std::size_t trials,
                        std::uint64_t seed);

/// Determinant by permutation expansion (n <= 6) or elimination.
Scalar family_determinant(const ScalarMatrix& m);

}  // namespace algaudit
