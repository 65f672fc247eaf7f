#pragma once

/**
 * @file derivations.hpp
 * @brief Derivation algebras via the Leibniz linear system.
 *
 * A linear map D is stored as an n x n matrix whose column i holds the
 * coordinates of D(e_i), i.e. D(e_i) = sum_k d_{ki} e_k. When D is flattened
 * to a vector in n^2-space the unknowns are ordered column-major:
 * d_11, d_21, ..., d_n1, d_12, ... . Every subspace of matrices in this
 * module (derivations, central derivations, printed patterns) uses that
 * flattening so they can be compared directly.
 */

#include <cstddef>
#include <vector>

#include "algaudit/algebra.hpp"

namespace algaudit {

/// Index of unknown d_{row,col} (0-based) in the flattened vector.
inline std::size_t unknown_index(std::size_t n, std::size_t row, std::size_t col) { return col * n + row; }

std::vector<Scalar> flatten(const ScalarMatrix& m);
ScalarMatrix unflatten(std::size_t n, const std::vector<Scalar>& v);

/**
 * n^3 x n^2 system. Row (i, j, t), at index (i*n + j)*n + t, encodes
 *   sum_k gamma^k_ij d_tk - sum_k (d_ki gamma^t_kj + d_kj gamma^t_ik) = 0.
 */
struct LeibnizSystem {
    std::size_t n = 0;
    ScalarMatrix rows;
};

LeibnizSystem build_leibniz_system(const AlgebraTable& a);

/// Null space of m as an RREF subspace.
ScalarSubspace exact_nullspace(const ScalarMatrix& m);

struct DerivationBasis {
    std::size_t n = 0;
    std::vector<ScalarMatrix> mats;
    ScalarSubspace space;  ///< span of mats in flattened coordinates

    std::size_t dim() const { return mats.size(); }
};

DerivationBasis derivation_basis(const AlgebraTable& a);

struct DerivationCheck {
    bool ok = false;
    /// residual[i*n + j] = D(e_i e_j) - D(e_i) e_j - e_i D(e_j)
    std::vector<Element> residual;
};

DerivationCheck is_derivation(const AlgebraTable& a, const ScalarMatrix& d);

/// {phi in End(A) : phi(A) in Z(A), phi(A^2) = 0}. With `within_derivations`
/// the result is intersected with Der(A).
ScalarSubspace central_derivations(const AlgebraTable& a, bool within_derivations = false);

ScalarMatrix commutator(const ScalarMatrix& x, const ScalarMatrix& y);

/// Matrices of an RREF subspace in flattened coordinates.
std::vector<ScalarMatrix> subspace_matrices(std::size_t n, const ScalarSubspace& s);

}  // namespace algaudit
