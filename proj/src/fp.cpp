#include "algaudit/fp.hpp"

namespace algaudit {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FpScalar::FpScalar(std::uint64_t value, std::uint32_t p) {
    if (!is_prime(p)) throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
    v_ = static_cast<std::uint32_t>(value % p);
    p_ = p;
}

std::uint32_t FpScalar::same_modulus(FpScalar a, FpScalar b) {
    if (a.p_ != b.p_) throw InvalidInput("F_p operands with different moduli");
    return a.p_;
}

FpScalar operator+(FpScalar a, FpScalar b) {
    auto p = FpScalar::same_modulus(a, b);
    return FpScalar::raw(static_cast<std::uint32_t>((std::uint64_t{a.v_} + b.v_) % p), p);
}

FpScalar operator-(FpScalar a, FpScalar b) { return a + (-b); }

FpScalar operator*(FpScalar a, FpScalar b) {
    auto p = FpScalar::same_modulus(a, b);
    return FpScalar::raw(static_cast<std::uint32_t>((std::uint64_t{a.v_} * b.v_) % p), p);
}

FpScalar operator/(FpScalar a, FpScalar b) { return a * b.inverse(); }

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw DivisionByZero();
    // Fermat; p is small.
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

FpScalar FpScalar::inverse() const { return raw(inverse_mod(v_, p_), p_); }

FpScalar reduce_mod_p(const Rational& x, std::uint32_t p) {
    if (!is_prime(p)) throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class d = x.den() % pz;
    if (d == 0)
        throw BadPrime("denominator of " + x.str() + " is divisible by " + std::to_string(p));
    mpz_class n = x.num() % pz;
    if (n < 0) n += pz;
    auto nv = static_cast<std::uint32_t>(n.get_ui());
    auto dv = static_cast<std::uint32_t>(d.get_ui());
    return FpScalar(std::uint64_t{nv} * inverse_mod(dv, p), p);
}

}  // namespace algaudit
