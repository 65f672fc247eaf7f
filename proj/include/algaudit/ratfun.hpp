#pragma once

/**
 * @file ratfun.hpp
 * @brief Quotients of MultiPolys, the exact scalar type used throughout.
 *
 * Normalization removes the monomial gcd, rational content, and any common
 * factor that can be found with single-variable gcds (either side univariate
 * in x: gcd with every x-coefficient of the other side). The denominator is
 * made monic under lex. This is a canonical form whenever one side is
 * univariate, which covers every table and family shipped with the catalog;
 * for general multivariate quotients equality is still decided exactly by
 * cross-multiplication.
 */

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "algaudit/poly.hpp"

namespace algaudit {

/// Name of the distinguished formal parameter treated as transcendental.
inline constexpr const char* kAlpha = "alpha";

class RatFun {
public:
    RatFun() = default;
    RatFun(int c) : num_(c) {}
    RatFun(const Rational& c) : num_(c) {}
    RatFun(const MultiPoly& p) : num_(p), den_(MultiPoly::constant(p.space(), Rational(1))) {}
    /// Throws DivisionByZero if den is zero.
    RatFun(const MultiPoly& num, const MultiPoly& den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const Space& space() const { return num_.space(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_constant() && den_.is_constant() && num_.constant_term() == den_.constant_term(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Throws InvalidInput when not constant.
    Rational constant_value() const;

    RatFun lift(const Space& target) const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

    RatFun inverse() const;
    RatFun pow(unsigned k) const;

    /// Substitutes a rational value for one variable. Throws
    /// DegenerateParameter when the denominator vanishes.
    RatFun substitute(std::size_t var, const Rational& value) const;
    RatFun substitute(std::string_view name, const Rational& value) const;
    /// Full evaluation; throws DegenerateParameter on a vanishing denominator.
    Rational evaluate(const std::vector<Rational>& values) const;

    /// Cross-multiplied equality; exact for every input.
    friend bool operator==(const RatFun& a, const RatFun& b);

    /// "num" or "(num)/(den)"; parenthesized only where needed.
    std::string str() const;

private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_ = MultiPoly(1);
};

/// Builds num/den in normalized form.
RatFun ratfun_normalize(const MultiPoly& num, const MultiPoly& den);

std::ostream& operator<<(std::ostream& os, const RatFun& r);

/// True when `x` is exactly zero (field concept used by the linear algebra).
inline bool is_zero(const RatFun& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

}  // namespace algaudit
