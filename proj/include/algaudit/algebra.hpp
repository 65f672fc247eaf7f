#pragma once

/**
 * @file algebra.hpp
 * @brief Algebras presented by structure constants.
 *
 * Basis indices are 0-based in the API (e_1 is index 0); the text formats and
 * reports use the 1-based names. gamma(i, j, k) is the coefficient of e_k in
 * e_i * e_j. Products that were never set are zero.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "algaudit/linalg.hpp"
#include "algaudit/ratfun.hpp"

namespace algaudit {

using Scalar = RatFun;
using Element = std::vector<Scalar>;
using ScalarMatrix = Matrix<Scalar>;
using ScalarSubspace = Subspace<Scalar>;

inline constexpr std::size_t kMaxDim = 16;

class AlgebraTable {
public:
    AlgebraTable() = default;
    /// Zero algebra of dimension n. Throws InvalidInput unless 1 <= n <= 16.
    explicit AlgebraTable(std::size_t n, std::string name = {});

    std::size_t dim() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const Scalar& gamma(std::size_t i, std::size_t j, std::size_t k) const {
        return gamma_[(i * n_ + j) * n_ + k];
    }
    void set_gamma(std::size_t i, std::size_t j, std::size_t k, Scalar v);
    /// Sets e_i * e_j to the given element.
    void set_product(std::size_t i, std::size_t j, const Element& value);
    Element product(std::size_t i, std::size_t j) const;
    bool product_is_zero(std::size_t i, std::size_t j) const;

    /// True when no structure constant involves a parameter.
    bool is_constant() const;
    /// Names of parameters used by any structure constant.
    std::vector<std::string> parameters() const;

    friend bool operator==(const AlgebraTable& a, const AlgebraTable& b);

private:
    std::size_t n_ = 0;
    std::string name_;
    std::vector<Scalar> gamma_;
};

Element zero_element(std::size_t n);
Element basis_element(std::size_t n, std::size_t i);

Element multiply(const AlgebraTable& a, const Element& x, const Element& y);

struct AssociativityViolation {
    std::size_t i, j, k;
    Element residual;  ///< (e_i e_j) e_k - e_i (e_j e_k)
};

std::vector<AssociativityViolation> check_associativity(const AlgebraTable& a);

/// {x : x e_j = e_j x = 0 for all j}, the two-sided annihilator.
ScalarSubspace center(const AlgebraTable& a);
/// {x : x h = h x = 0 for all h in hs}.
ScalarSubspace centralizer(const AlgebraTable& a, const std::vector<Element>& hs);

/// span{e_i e_j}.
ScalarSubspace square(const AlgebraTable& a);

/// Table of the same algebra in the basis e'_i = sum_k p(k, i) e_k.
/// Throws InvalidInput when p is singular.
AlgebraTable change_basis(const AlgebraTable& a, const ScalarMatrix& p);

/// Substitutes a rational value for alpha. Throws DegenerateParameter when a
/// structure constant's denominator vanishes.
AlgebraTable specialize_alpha(const AlgebraTable& a, const Rational& value);

/// Element as a column matrix helper.
ScalarMatrix as_column(const Element& x);

}  // namespace algaudit
