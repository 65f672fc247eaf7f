#include "algaudit/ratfun.hpp"

#include <algorithm>
#include <ostream>

namespace algaudit {

namespace {

bool is_unit_monomial(const Exponents& e) {
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

// Splits p by the exponents of every variable other than x; each group is a
// polynomial in x alone.
std::vector<MultiPoly> x_coefficients(const MultiPoly& p, std::size_t x) {
    std::map<Exponents, MultiPoly> groups;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        rest[x] = 0;
        Exponents only_x(e.size(), 0);
        only_x[x] = e[x];
        auto [it, ins] = groups.try_emplace(rest, MultiPoly::constant(p.space(), Rational(0)));
        it->second += MultiPoly::monomial(p.space(), only_x, c);
    }
    std::vector<MultiPoly> out;
    for (auto& [k, v] : groups) out.push_back(std::move(v));
    return out;
}

// gcd of a univariate polynomial u (in x) with an arbitrary polynomial p.
MultiPoly gcd_with_univariate(const MultiPoly& u, const MultiPoly& p, std::size_t x) {
    MultiPoly g = u;
    for (const auto& c : x_coefficients(p, x)) {
        g = univariate_gcd(g, c, x);
        if (g.is_constant()) break;
    }
    return g;
}

}  // namespace

RatFun::RatFun(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) { normalize(); }

RatFun ratfun_normalize(const MultiPoly& num, const MultiPoly& den) { return RatFun(num, den); }

void RatFun::normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    Space s = merge_spaces(num_.space(), den_.space());
    if (!same_space(num_.space(), s)) num_ = num_.lift(s);
    if (!same_space(den_.space(), s)) den_ = den_.lift(s);

    if (num_.is_zero()) {
        den_ = MultiPoly::constant(s, Rational(1));
        return;
    }
    if (den_.is_constant()) {
        Rational c = den_.constant_term();
        if (!c.is_one()) num_ = num_.scaled(c.inverse());
        den_ = MultiPoly::constant(s, Rational(1));
        return;
    }

    Exponents mg = monomial_gcd(num_, den_);
    if (!is_unit_monomial(mg)) {
        MultiPoly m = MultiPoly::monomial(s, mg, Rational(1));
        num_ = *divide_exact(num_, m);
        den_ = *divide_exact(den_, m);
    }

    if (auto q = divide_exact(num_, den_)) {
        num_ = *q;
        den_ = MultiPoly::constant(s, Rational(1));
        return;
    }

    auto vd = den_.variables_used();
    auto vn = num_.variables_used();
    MultiPoly g = MultiPoly::constant(s, Rational(1));
    if (vd.size() == 1) {
        g = gcd_with_univariate(den_, num_, vd[0]);
    } else if (vn.size() == 1) {
        g = gcd_with_univariate(num_, den_, vn[0]);
    }
    if (!g.is_constant()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
    }

    Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational RatFun::constant_value() const {
    if (!is_constant()) throw InvalidInput("scalar " + str() + " is not constant");
    return num_.constant_term() / den_.constant_term();
}

RatFun RatFun::lift(const Space& target) const {
    RatFun r;
    r.num_ = num_.lift(target);
    r.den_ = den_.lift(target);
    return r;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_constant() && o.is_constant() && num_.nvars() == 0 && o.num_.nvars() == 0) {
        *this = RatFun(constant_value() + o.constant_value());
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        den_ = den_.lift(num_.space());
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_constant() && o.is_constant() && num_.nvars() == 0 && o.num_.nvars() == 0) {
        *this = RatFun(constant_value() * o.constant_value());
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (is_constant() && o.is_constant() && num_.nvars() == 0 && o.num_.nvars() == 0) {
        *this = RatFun(constant_value() / o.constant_value());
        return *this;
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RatFun RatFun::inverse() const { return RatFun(1) / *this; }

RatFun RatFun::pow(unsigned k) const {
    RatFun r;
    r.num_ = num_.pow(k);
    r.den_ = den_.pow(k);
    return r;  // powers of coprime factors stay coprime
}

RatFun RatFun::substitute(std::size_t var, const Rational& value) const {
    MultiPoly d = den_.substitute(var, value);
    if (d.is_zero())
        throw DegenerateParameter("parameter " + space()->name(var) + " = " + value.str() +
                                  " makes denominator " + den_.str() + " vanish");
    return RatFun(num_.substitute(var, value), d);
}

RatFun RatFun::substitute(std::string_view name, const Rational& value) const {
    auto idx = space() ? space()->index_of(name) : std::nullopt;
    if (!idx) return *this;
    return substitute(*idx, value);
}

Rational RatFun::evaluate(const std::vector<Rational>& values) const {
    Rational d = den_.evaluate(values);
    if (d.is_zero()) throw DegenerateParameter("denominator " + den_.str() + " vanishes at the given point");
    return num_.evaluate(values) / d;
}

bool operator==(const RatFun& a, const RatFun& b) {
    Space s = merge_spaces(a.space(), b.space());
    try {
        return a.num_.lift(s) * b.den_.lift(s) == b.num_.lift(s) * a.den_.lift(s);
    } catch (const Error&) {
        return false;
    }
}

std::string RatFun::str() const {
    if (den_.is_constant()) return num_.str();
    std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
    bool bare = false;
    if (den_.term_count() == 1 && den_.leading_coefficient().is_one()) {
        const auto& e = den_.leading_exponents();
        bare = std::count_if(e.begin(), e.end(), [](auto x) { return x != 0; }) == 1;
    }
    return n + "/" + (bare ? den_.str() : "(" + den_.str() + ")");
}

std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << r.str(); }

}  // namespace algaudit
