#include "algaudit/rational.hpp"

#include <cctype>
#include <functional>
#include <ostream>

namespace algaudit {

mpz_class Rational::mpz_from(long long v) {
    mpz_class z;
    // mpz_class has no long long constructor on every platform
    if (v >= 0) {
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    } else {
        unsigned long long m = 0ULL - static_cast<unsigned long long>(v);
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
        z = -z;
    }
    return z;
}

Rational::Rational(long long num, long long den) : Rational(mpz_from(num), mpz_from(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return InvalidInput("malformed rational '" + std::string(text) + "'"); };
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw bad();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (std::size_t k = i; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw bad();
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return mpz_class(digits, 10);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return from_raw(1 / q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned k) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), k);
    return from_raw(mpq_class(n, d));
}

std::string Rational::str() const { return q_.get_str(); }

std::size_t Rational::hash() const {
    std::hash<std::string> h;
    return h(q_.get_str(16));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace algaudit
