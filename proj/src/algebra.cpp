#include "algaudit/algebra.hpp"

#include <algorithm>
#include <set>

namespace algaudit {

AlgebraTable::AlgebraTable(std::size_t n, std::string name) : n_(n), name_(std::move(name)) {
    if (n == 0 || n > kMaxDim)
        throw InvalidInput("algebra dimension must be between 1 and " + std::to_string(kMaxDim));
    gamma_.assign(n * n * n, Scalar(0));
}

void AlgebraTable::set_gamma(std::size_t i, std::size_t j, std::size_t k, Scalar v) {
    if (i >= n_ || j >= n_ || k >= n_) throw DimensionMismatch("structure constant index out of range");
    gamma_[(i * n_ + j) * n_ + k] = std::move(v);
}

void AlgebraTable::set_product(std::size_t i, std::size_t j, const Element& value) {
    if (value.size() != n_) throw DimensionMismatch("product value has wrong length");
    for (std::size_t k = 0; k < n_; ++k) set_gamma(i, j, k, value[k]);
}

Element AlgebraTable::product(std::size_t i, std::size_t j) const {
    Element out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = gamma(i, j, k);
    return out;
}

bool AlgebraTable::product_is_zero(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < n_; ++k)
        if (!gamma(i, j, k).is_zero()) return false;
    return true;
}

bool AlgebraTable::is_constant() const {
    return std::all_of(gamma_.begin(), gamma_.end(), [](const Scalar& s) { return s.is_constant(); });
}

std::vector<std::string> AlgebraTable::parameters() const {
    std::set<std::string> names;
    for (const auto& s : gamma_) {
        for (const auto* p : {&s.num(), &s.den()})
            for (auto v : p->variables_used()) names.insert(p->space()->name(v));
    }
    return {names.begin(), names.end()};
}

bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
    return a.n_ == b.n_ && a.name_ == b.name_ && a.gamma_ == b.gamma_;
}

Element zero_element(std::size_t n) { return Element(n, Scalar(0)); }

Element basis_element(std::size_t n, std::size_t i) {
    Element e = zero_element(n);
    e.at(i) = Scalar(1);
    return e;
}

Element multiply(const AlgebraTable& a, const Element& x, const Element& y) {
    const std::size_t n = a.dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("element dimension does not match algebra");
    Element out = zero_element(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& g = a.gamma(i, j, k);
                if (!g.is_zero()) out[k] += xy * g;
            }
        }
    }
    return out;
}

std::vector<AssociativityViolation> check_associativity(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    std::vector<AssociativityViolation> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Element ei = basis_element(n, i), ej = basis_element(n, j), ek = basis_element(n, k);
                Element lhs = multiply(a, multiply(a, ei, ej), ek);
                Element rhs = multiply(a, ei, multiply(a, ej, ek));
                Element diff(n);
                bool nonzero = false;
                for (std::size_t t = 0; t < n; ++t) {
                    diff[t] = lhs[t] - rhs[t];
                    nonzero = nonzero || !diff[t].is_zero();
                }
                if (nonzero) out.push_back({i, j, k, std::move(diff)});
            }
    return out;
}

ScalarSubspace centralizer(const AlgebraTable& a, const std::vector<Element>& hs) {
    const std::size_t n = a.dim();
    if (hs.empty()) return ScalarSubspace::whole(n);
    ScalarMatrix rows(0, n);
    for (const auto& h : hs) {
        if (h.size() != n) throw DimensionMismatch("centralizer element has wrong dimension");
        // Row k of x*h: sum_i x_i sum_j h_j gamma(i,j,k); row k of h*x likewise.
        for (std::size_t k = 0; k < n; ++k) {
            Element left = zero_element(n), right = zero_element(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (h[j].is_zero()) continue;
                    left[i] += h[j] * a.gamma(i, j, k);
                    right[i] += h[j] * a.gamma(j, i, k);
                }
            rows.append_row(left);
            rows.append_row(right);
        }
    }
    return ScalarSubspace::kernel(rows);
}

ScalarSubspace center(const AlgebraTable& a) {
    std::vector<Element> basis;
    for (std::size_t j = 0; j < a.dim(); ++j) basis.push_back(basis_element(a.dim(), j));
    return centralizer(a, basis);
}

ScalarSubspace square(const AlgebraTable& a) {
    std::vector<Element> products;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) products.push_back(a.product(i, j));
    return ScalarSubspace::span(a.dim(), products);
}

AlgebraTable change_basis(const AlgebraTable& a, const ScalarMatrix& p) {
    const std::size_t n = a.dim();
    if (p.rows() != n || p.cols() != n) throw DimensionMismatch("basis change matrix has wrong shape");
    ScalarMatrix pinv = inverse(p);
    AlgebraTable out(n, a.name());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element v = multiply(a, p.col(i), p.col(j));
            ScalarMatrix coords = pinv * as_column(v);
            for (std::size_t k = 0; k < n; ++k) out.set_gamma(i, j, k, coords(k, 0));
        }
    return out;
}

AlgebraTable specialize_alpha(const AlgebraTable& a, const Rational& value) {
    const std::size_t n = a.dim();
    AlgebraTable out(n, a.name());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.set_gamma(i, j, k, a.gamma(i, j, k).substitute(kAlpha, value));
    return out;
}

ScalarMatrix as_column(const Element& x) { return ScalarMatrix(x.size(), 1, x); }

}  // namespace algaudit
