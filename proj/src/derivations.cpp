#include "algaudit/derivations.hpp"

namespace algaudit {

std::vector<Scalar> flatten(const ScalarMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<Scalar> v(n * m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < n; ++r) v[c * n + r] = m(r, c);
    return v;
}

ScalarMatrix unflatten(std::size_t n, const std::vector<Scalar>& v) {
    if (v.size() != n * n) throw DimensionMismatch("flattened matrix has wrong length");
    ScalarMatrix m(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m(r, c) = v[unknown_index(n, r, c)];
    return m;
}

LeibnizSystem build_leibniz_system(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    LeibnizSystem sys{n, ScalarMatrix(n * n * n, n * n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                const std::size_t row = (i * n + j) * n + t;
                for (std::size_t k = 0; k < n; ++k) {
                    // D(e_i e_j): gamma^k_ij d_tk
                    const Scalar& g = a.gamma(i, j, k);
                    if (!g.is_zero()) sys.rows(row, unknown_index(n, t, k)) += g;
                    // D(e_i) e_j: d_ki gamma^t_kj
                    const Scalar& l = a.gamma(k, j, t);
                    if (!l.is_zero()) sys.rows(row, unknown_index(n, k, i)) -= l;
                    // e_i D(e_j): d_kj gamma^t_ik
                    const Scalar& r = a.gamma(i, k, t);
                    if (!r.is_zero()) sys.rows(row, unknown_index(n, k, j)) -= r;
                }
            }
    return sys;
}

ScalarSubspace exact_nullspace(const ScalarMatrix& m) { return ScalarSubspace::kernel(m); }

std::vector<ScalarMatrix> subspace_matrices(std::size_t n, const ScalarSubspace& s) {
    std::vector<ScalarMatrix> out;
    for (const auto& v : s.basis()) out.push_back(unflatten(n, v));
    return out;
}

DerivationBasis derivation_basis(const AlgebraTable& a) {
    DerivationBasis b;
    b.n = a.dim();
    b.space = exact_nullspace(build_leibniz_system(a).rows);
    b.mats = subspace_matrices(b.n, b.space);
    return b;
}

DerivationCheck is_derivation(const AlgebraTable& a, const ScalarMatrix& d) {
    const std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation matrix has wrong shape");
    auto apply = [&](const Element& x) {
        Element out = zero_element(n);
        for (std::size_t c = 0; c < n; ++c) {
            if (x[c].is_zero()) continue;
            for (std::size_t r = 0; r < n; ++r) out[r] += d(r, c) * x[c];
        }
        return out;
    };
    DerivationCheck check;
    check.ok = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element ei = basis_element(n, i), ej = basis_element(n, j);
            Element lhs = apply(multiply(a, ei, ej));
            Element r1 = multiply(a, apply(ei), ej);
            Element r2 = multiply(a, ei, apply(ej));
            Element res(n);
            for (std::size_t t = 0; t < n; ++t) {
                res[t] = lhs[t] - r1[t] - r2[t];
                if (!res[t].is_zero()) check.ok = false;
            }
            check.residual.push_back(std::move(res));
        }
    return check;
}

ScalarSubspace central_derivations(const AlgebraTable& a, bool within_derivations) {
    const std::size_t n = a.dim();
    ScalarMatrix rows(0, n * n);
    // phi(e_i) in Z(A): every annihilator functional of Z kills column i.
    ScalarSubspace z_perp = center(a).annihilator();
    for (const auto& f : z_perp.basis())
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Scalar> row(n * n, Scalar(0));
            for (std::size_t k = 0; k < n; ++k) row[unknown_index(n, k, i)] = f[k];
            rows.append_row(row);
        }
    // phi(e_i e_j) = sum_k gamma^k_ij phi(e_k) = 0, coordinate t.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a.product_is_zero(i, j)) continue;
            for (std::size_t t = 0; t < n; ++t) {
                std::vector<Scalar> row(n * n, Scalar(0));
                for (std::size_t k = 0; k < n; ++k) row[unknown_index(n, t, k)] = a.gamma(i, j, k);
                rows.append_row(row);
            }
        }
    ScalarSubspace c = rows.rows() ? exact_nullspace(rows) : ScalarSubspace::whole(n * n);
    if (within_derivations) c = c.intersect(derivation_basis(a).space);
    return c;
}

ScalarMatrix commutator(const ScalarMatrix& x, const ScalarMatrix& y) { return x * y - y * x; }

}  // namespace algaudit
