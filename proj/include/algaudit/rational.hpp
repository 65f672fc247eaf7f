#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers backed by GMP.
 *
 * Values are always canonical: the denominator is positive, numerator and
 * denominator are coprime and zero is stored as 0/1. Two Rationals are equal
 * exactly when their representations are identical.
 */

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "algaudit/errors.hpp"

namespace algaudit {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(mpz_from(v)) {}
    Rational(long long num, long long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& v) : q_(v) {}

    /// Parses "p" or "p/q" with an optional leading sign.
    static Rational parse(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return from_raw(-q_); }
    Rational abs() const { return from_raw(::abs(q_)); }
    /// Throws DivisionByZero on zero.
    Rational inverse() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational pow(unsigned k) const;

    std::string str() const;
    std::size_t hash() const;

private:
    static mpz_class mpz_from(long long v);
    static Rational from_raw(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Integer gcd helpers used by normalization code.
mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace algaudit
