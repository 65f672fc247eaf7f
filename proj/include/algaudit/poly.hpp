#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials with rational coefficients.
 *
 * A polynomial lives in a VarSpace, an ordered list of parameter names.
 * Terms are kept in a map keyed by exponent vectors under lexicographic
 * order (first declared variable most significant), with zero coefficients
 * never stored, so equal polynomials over the same space have identical
 * representations.
 *
 * Constants created without a space combine with polynomials of any space.
 * Two polynomials over different non-empty spaces cannot be combined
 * (SpaceMismatch); use lift() or merge_spaces() to move them into a common
 * space first.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algaudit/rational.hpp"

namespace algaudit {

class VarSpace {
public:
    VarSpace() = default;
    /// Throws InvalidInput on duplicate or empty names.
    explicit VarSpace(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const VarSpace&, const VarSpace&) = default;

private:
    std::vector<std::string> names_;
};

using Space = std::shared_ptr<const VarSpace>;

Space make_space(std::vector<std::string> names);
/// Names of a followed by the names of b not already in a.
Space merge_spaces(const Space& a, const Space& b);
bool same_space(const Space& a, const Space& b);
std::size_t space_size(const Space& s);

using Exponents = std::vector<std::uint32_t>;

struct LexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};

class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, LexGreater>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);
    MultiPoly(int c) : MultiPoly(Rational(c)) {}

    /// Constant polynomial that lives in the given space.
    static MultiPoly constant(const Space& space, const Rational& c);
    static MultiPoly variable(const Space& space, std::size_t index);
    /// Throws InvalidInput when the name is not in the space.
    static MultiPoly variable(const Space& space, std::string_view name);
    static MultiPoly monomial(const Space& space, Exponents exps, const Rational& c);

    const Space& space() const { return space_; }
    std::size_t nvars() const { return space_size(space_); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the all-zero exponent.
    Rational constant_term() const;
    /// Throws InvalidInput when not constant.
    Rational constant_value() const;

    /// Leading term under lex; throws InvalidInput on the zero polynomial.
    const Exponents& leading_exponents() const;
    const Rational& leading_coefficient() const;

    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    std::vector<std::size_t> variables_used() const;
    bool uses(std::size_t var) const { return degree_in(var) > 0; }

    /// Re-expresses this polynomial over a space that contains all used names.
    MultiPoly lift(const Space& target) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }

    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned k) const;

    /// Replaces variable `var` by a rational value; the space is kept.
    MultiPoly substitute(std::size_t var, const Rational& value) const;
    /// Full evaluation; `values` is indexed like the space.
    Rational evaluate(const std::vector<Rational>& values) const;

    /// Coefficients with respect to one variable, keyed by its exponent.
    std::map<std::uint32_t, MultiPoly> coefficients_in(std::size_t var) const;

    /// Terms joined by " + " / " - ", e.g. "a11^2 - 1/2*alpha + 3".
    std::string str() const;

    /// Mathematical equality; never throws (differing spaces are merged).
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    std::size_t hash() const;

private:
    friend std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly&, const MultiPoly&);

    void add_term(const Exponents& e, const Rational& c);
    static Space unify(const MultiPoly& a, const MultiPoly& b);

    Space space_;
    TermMap terms_;
};

/// Multivariate division by a single divisor under lex order: f = q*g + r,
/// with no term of r divisible by the leading term of g. The remainder is
/// zero exactly when g divides f.
std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& f, const MultiPoly& g);
std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g);

/// Remainder of f after repeated division by each polynomial of `divisors`.
/// Not a normal form in general, but a zero remainder proves membership.
MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& divisors);

/// Largest monomial dividing every term of both polynomials.
Exponents monomial_gcd(const MultiPoly& a, const MultiPoly& b);

/// Monic gcd of two polynomials that use at most the single variable `var`.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, std::size_t var);

}  // namespace algaudit
