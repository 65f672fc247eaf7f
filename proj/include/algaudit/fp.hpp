#pragma once

#include <cstdint>
#include <string>

#include "algaudit/rational.hpp"

namespace algaudit {

bool is_prime(std::uint64_t n);

/// Element of the prime field F_p.
class FpScalar {
public:
    /// Throws InvalidInput unless p is prime.
    FpScalar(std::uint64_t value, std::uint32_t p);

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    FpScalar operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    /// Throws DivisionByZero on zero.
    FpScalar inverse() const;

    friend FpScalar operator+(FpScalar a, FpScalar b);
    friend FpScalar operator-(FpScalar a, FpScalar b);
    friend FpScalar operator*(FpScalar a, FpScalar b);
    friend FpScalar operator/(FpScalar a, FpScalar b);
    friend bool operator==(FpScalar a, FpScalar b) = default;

    std::string str() const { return std::to_string(v_); }

private:
    FpScalar() = default;
    static FpScalar raw(std::uint32_t v, std::uint32_t p) {
        FpScalar s;
        s.v_ = v;
        s.p_ = p;
        return s;
    }
    static std::uint32_t same_modulus(FpScalar a, FpScalar b);

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 2;
};

/// Image of x in F_p. Throws BadPrime when p divides the denominator.
FpScalar reduce_mod_p(const Rational& x, std::uint32_t p);

/// Raw residue helpers for hot loops (census).
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace algaudit
