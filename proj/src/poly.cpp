#include "algaudit/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace algaudit {

VarSpace::VarSpace(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw InvalidInput("empty parameter name");
        if (!seen.insert(n).second) throw InvalidInput("duplicate parameter name '" + n + "'");
    }
}

std::optional<std::size_t> VarSpace::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Space make_space(std::vector<std::string> names) {
    return std::make_shared<const VarSpace>(std::move(names));
}

Space merge_spaces(const Space& a, const Space& b) {
    if (space_size(b) == 0) return a;
    if (space_size(a) == 0) return b;
    if (same_space(a, b)) return a;
    std::vector<std::string> names = a->names();
    for (const auto& n : b->names())
        if (!a->index_of(n)) names.push_back(n);
    return make_space(std::move(names));
}

bool same_space(const Space& a, const Space& b) {
    if (a == b) return true;
    if (space_size(a) == 0 && space_size(b) == 0) return true;
    if (!a || !b) return false;
    return *a == *b;
}

std::size_t space_size(const Space& s) { return s ? s->size() : 0; }

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::constant(const Space& space, const Rational& c) {
    MultiPoly p;
    p.space_ = space;
    if (!c.is_zero()) p.terms_.emplace(Exponents(space_size(space), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const Space& space, std::size_t index) {
    if (index >= space_size(space)) throw InvalidInput("variable index out of range");
    Exponents e(space_size(space), 0);
    e[index] = 1;
    return monomial(space, std::move(e), Rational(1));
}

MultiPoly MultiPoly::variable(const Space& space, std::string_view name) {
    auto idx = space ? space->index_of(name) : std::nullopt;
    if (!idx) throw InvalidInput("unknown parameter '" + std::string(name) + "'");
    return variable(space, *idx);
}

MultiPoly MultiPoly::monomial(const Space& space, Exponents exps, const Rational& c) {
    if (exps.size() != space_size(space)) throw InvalidInput("exponent vector length mismatch");
    MultiPoly p;
    p.space_ = space;
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Exponents(nvars(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw InvalidInput("polynomial " + str() + " is not constant");
    return constant_term();
}

const Exponents& MultiPoly::leading_exponents() const {
    if (terms_.empty()) throw InvalidInput("leading term of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw InvalidInput("leading term of the zero polynomial");
    return terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        if (var < e.size()) d = std::max<unsigned>(d, e[var]);
    return d;
}

std::vector<std::size_t> MultiPoly::variables_used() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars(); ++v)
        if (uses(v)) out.push_back(v);
    return out;
}

MultiPoly MultiPoly::lift(const Space& target) const {
    if (same_space(space_, target)) {
        MultiPoly p = *this;
        p.space_ = target;
        return p;
    }
    std::vector<std::size_t> map(nvars());
    for (std::size_t v = 0; v < nvars(); ++v) {
        auto idx = target ? target->index_of(space_->name(v)) : std::nullopt;
        if (!idx) {
            if (uses(v))
                throw SpaceMismatch("parameter '" + space_->name(v) + "' missing from target space");
            continue;
        }
        map[v] = *idx;
    }
    MultiPoly out;
    out.space_ = target;
    for (const auto& [e, c] : terms_) {
        Exponents ne(space_size(target), 0);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) ne[map[v]] = e[v];
        out.add_term(ne, c);
    }
    return out;
}

Space MultiPoly::unify(const MultiPoly& a, const MultiPoly& b) {
    if (same_space(a.space_, b.space_)) return space_size(a.space_) ? a.space_ : b.space_;
    if (space_size(a.space_) == 0) return b.space_;
    if (space_size(b.space_) == 0) return a.space_;
    // Constant polynomials can always move.
    if (a.is_constant()) return b.space_;
    if (b.is_constant()) return a.space_;
    throw SpaceMismatch("polynomials over different parameter lists");
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    Space s = unify(*this, o);
    if (space_ != s) *this = lift(s);
    if (o.space_ == s) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
    } else {
        MultiPoly b = o.lift(s);
        for (const auto& [e, c] : b.terms_) add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    Space s = unify(*this, o);
    MultiPoly a = lift(s);
    MultiPoly b = o.lift(s);
    MultiPoly out;
    out.space_ = s;
    const std::size_t n = space_size(s);
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < n; ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    *this = std::move(out);
    return *this;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return constant(space_, Rational(0));
    MultiPoly p = *this;
    for (auto& [e, k] : p.terms_) k *= c;
    return p;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(space_, Rational(1));
    MultiPoly base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
    if (var >= nvars()) throw InvalidInput("variable index out of range");
    MultiPoly out;
    out.space_ = space_;
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne[var] = 0;
        out.add_term(ne, c * value.pow(e[var]));
    }
    return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& values) const {
    if (values.size() < nvars()) throw InvalidInput("too few values for evaluation");
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) t *= values[v].pow(e[v]);
        sum += t;
    }
    return sum;
}

std::map<std::uint32_t, MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
    std::map<std::uint32_t, MultiPoly> out;
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        auto k = ne[var];
        ne[var] = 0;
        auto [it, inserted] = out.try_emplace(k, constant(space_, Rational(0)));
        it->second.add_term(ne, c);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool constant_term = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (constant_term) {
            os << mag.str();
            continue;
        }
        bool need_star = false;
        if (!mag.is_one()) {
            os << mag.str();
            need_star = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (!e[v]) continue;
            if (need_star) os << "*";
            os << space_->name(v);
            if (e[v] > 1) os << "^" << e[v];
            need_star = true;
        }
    }
    return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (same_space(a.space_, b.space_)) return a.terms_ == b.terms_;
    try {
        Space s = merge_spaces(a.space_, b.space_);
        return a.lift(s).terms_ == b.lift(s).terms_;
    } catch (const Error&) {
        return false;
    }
}

std::size_t MultiPoly::hash() const {
    std::size_t h = terms_.size();
    for (const auto& [e, c] : terms_) {
        for (auto x : e) h = h * 131 + x;
        h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// ---------------------------------------------------------------------------

namespace {

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] > b[v]) return false;
    return true;
}

}  // namespace

std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw DivisionByZero();
    Space s = MultiPoly::unify(f, g);
    MultiPoly rest = f.lift(s);
    MultiPoly gg = g.lift(s);
    MultiPoly q = MultiPoly::constant(s, Rational(0));
    MultiPoly r = MultiPoly::constant(s, Rational(0));
    const Exponents& lg = gg.leading_exponents();
    const Rational& lc = gg.leading_coefficient();
    const std::size_t n = space_size(s);
    while (!rest.is_zero()) {
        Exponents lr = rest.leading_exponents();
        Rational cr = rest.leading_coefficient();
        if (divides(lg, lr)) {
            Exponents e(n);
            for (std::size_t v = 0; v < n; ++v) e[v] = lr[v] - lg[v];
            MultiPoly t = MultiPoly::monomial(s, e, cr / lc);
            q += t;
            rest -= t * gg;
        } else {
            r.add_term(lr, cr);
            rest.terms_.erase(rest.terms_.begin());
        }
    }
    return {q, r};
}

std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& divisors) {
    MultiPoly r = f;
    // Iterate to a fixed point; each pass can only shrink leading terms.
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& d : divisors) {
            if (d.is_zero() || r.is_zero()) continue;
            auto [q, rem] = divmod(r, d);
            if (!q.is_zero()) {
                r = rem;
                changed = true;
            }
        }
    }
    return r;
}

Exponents monomial_gcd(const MultiPoly& a, const MultiPoly& b) {
    std::size_t n = std::max(a.nvars(), b.nvars());
    Exponents g;
    bool init = false;
    auto fold = [&](const MultiPoly& p) {
        for (const auto& [e, c] : p.terms()) {
            if (!init) {
                g = e;
                g.resize(n, 0);
                init = true;
                continue;
            }
            for (std::size_t v = 0; v < n; ++v) g[v] = std::min<std::uint32_t>(g[v], v < e.size() ? e[v] : 0);
        }
    };
    fold(a);
    fold(b);
    if (!init) g.assign(n, 0);
    return g;
}

namespace {

using Dense = std::vector<Rational>;  // low to high

Dense to_dense(const MultiPoly& p, std::size_t var) {
    Dense d(p.degree_in(var) + 1);
    for (const auto& [e, c] : p.terms()) d[e.empty() ? 0 : e[var]] += c;
    while (!d.empty() && d.back().is_zero()) d.pop_back();
    return d;
}

Dense dense_rem(Dense a, const Dense& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

}  // namespace

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    Space s = merge_spaces(a.space(), b.space());
    for (const auto* p : {&a, &b})
        for (auto v : p->variables_used())
            if (p->space()->name(v) != s->name(var))
                throw InvalidInput("univariate_gcd on a multivariate polynomial");
    Dense x = to_dense(a.lift(s), var);
    Dense y = to_dense(b.lift(s), var);
    while (!y.empty()) {
        Dense r = dense_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return MultiPoly::constant(s, Rational(0));
    Rational lead = x.back();
    MultiPoly out = MultiPoly::constant(s, Rational(0));
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].is_zero()) continue;
        Exponents e(space_size(s), 0);
        e[var] = static_cast<std::uint32_t>(k);
        out += MultiPoly::monomial(s, e, x[k] / lead);
    }
    return out;
}

}  // namespace algaudit
