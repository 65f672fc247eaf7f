#include "algaudit/census.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "algaudit/derivations.hpp"
#include "algaudit/errors.hpp"
#include "algaudit/fp.hpp"

namespace algaudit {

namespace {

std::string basis_name(std::size_t i) { return "e" + std::to_string(i + 1); }

void check_census_prime(std::uint32_t p) {
    const auto& ok = census_primes();
    if (std::find(ok.begin(), ok.end(), p) == ok.end())
        throw InvalidInput("prime " + std::to_string(p) + " not supported; use one of 2, 3, 5, 7, 11, 13");
}

struct Engine {
    std::size_t n;
    std::uint32_t p;
    std::vector<std::uint32_t> g;  // (i*n + j)*n + k
    // checks[c] = pairs (i, j) whose residual becomes fully determined once
    // columns 0..c are assigned.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks;

    std::uint32_t gamma(std::size_t i, std::size_t j, std::size_t k) const { return g[(i * n + j) * n + k]; }

    Engine(std::size_t n_, std::uint32_t p_, std::vector<std::uint32_t> g_) : n(n_), p(p_), g(std::move(g_)), checks(n_) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t m = std::max(i, j);
                for (std::size_t k = 0; k < n; ++k)
                    if (gamma(i, j, k)) m = std::max(m, k);
                checks[m].emplace_back(i, j);
            }
    }

    // f is column-major: f[c*n + r] = a_{rc}.
    bool residual_zero(const std::vector<std::uint32_t>& f, std::size_t i, std::size_t j,
                       std::vector<std::uint64_t>& acc) const {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t a = 0; a < n; ++a) {
            const std::uint64_t fa = f[i * n + a];
            if (!fa) continue;
            for (std::size_t b = 0; b < n; ++b) {
                const std::uint64_t fb = f[j * n + b];
                if (!fb) continue;
                const std::uint64_t w = fa * fb % p;
                for (std::size_t t = 0; t < n; ++t) {
                    const std::uint32_t c = gamma(a, b, t);
                    if (c) acc[t] = (acc[t] + w * c) % p;
                }
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t c = gamma(i, j, k);
            if (!c) continue;
            for (std::size_t t = 0; t < n; ++t) acc[t] = (acc[t] + (p - c) * f[k * n + t]) % p;
        }
        for (auto v : acc)
            if (v) return false;
        return true;
    }

    bool invertible(const std::vector<std::uint32_t>& f) const { return rank_mod_p(f, n, n, p) == n; }

    void set_column(std::vector<std::uint32_t>& f, std::size_t c, std::uint64_t code) const {
        for (std::size_t r = 0; r < n; ++r) {
            f[c * n + r] = static_cast<std::uint32_t>(code % p);
            code /= p;
        }
    }

    struct Counter {
        std::uint64_t found = 0;
        std::uint64_t pruned = 0;
    };

    void dfs(std::vector<std::uint32_t>& f, std::size_t c, std::uint64_t column_values, Counter& out,
             std::vector<std::uint64_t>& acc) const {
        for (std::uint64_t code = 0; code < column_values; ++code) {
            set_column(f, c, code);
            descend(f, c, column_values, out, acc);
        }
    }

    void descend(std::vector<std::uint32_t>& f, std::size_t c, std::uint64_t column_values, Counter& out,
                 std::vector<std::uint64_t>& acc) const {
        for (const auto& [i, j] : checks[c])
            if (!residual_zero(f, i, j, acc)) {
                ++out.pruned;
                return;
            }
        if (c + 1 == n) {
            if (invertible(f)) ++out.found;
            return;
        }
        dfs(f, c + 1, column_values, out, acc);
    }

    Counter run_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t column_values) const {
        Counter out;
        std::vector<std::uint32_t> f(n * n, 0);
        std::vector<std::uint64_t> acc(n);
        for (std::uint64_t code = lo; code < hi; ++code) {
            set_column(f, 0, code);
            descend(f, 0, column_values, out, acc);
        }
        return out;
    }
};

}  // namespace

const std::vector<std::uint32_t>& census_primes() {
    static const std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
    return primes;
}

std::vector<std::uint32_t> reduce_table(const AlgebraTable& a, std::uint32_t p) {
    if (!a.is_constant()) throw InvalidInput("census needs a table without parameters; specialize alpha first");
    const std::size_t n = a.dim();
    std::vector<std::uint32_t> g(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& s = a.gamma(i, j, k);
                if (!s.is_zero()) g[(i * n + j) * n + k] = reduce_mod_p(s.constant_value(), p).value();
            }
    return g;
}

std::size_t rank_mod_p(std::vector<std::uint32_t> m, std::size_t rows, std::size_t cols, std::uint32_t p) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m[piv * cols + k], m[rank * cols + k]);
        const std::uint64_t inv = inverse_mod(m[rank * cols + c], p);
        for (std::size_t k = c; k < cols; ++k) m[rank * cols + k] = static_cast<std::uint32_t>(m[rank * cols + k] * inv % p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const std::uint64_t factor = m[r * cols + c];
            if (!factor) continue;
            for (std::size_t k = c; k < cols; ++k)
                m[r * cols + k] = static_cast<std::uint32_t>((m[r * cols + k] + (p - factor) * m[rank * cols + k]) % p);
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<std::uint32_t> leibniz_mod_p(const AlgebraTable& a, std::uint32_t p, std::size_t& rows, std::size_t& cols) {
    const ScalarMatrix sys = build_leibniz_system(a).rows;
    rows = sys.rows();
    cols = sys.cols();
    std::vector<std::uint32_t> m(rows * cols, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (!sys(r, c).is_zero()) m[r * cols + c] = reduce_mod_p(sys(r, c).constant_value(), p).value();
    return m;
}

}  // namespace

std::size_t derivation_dim_mod_p(const AlgebraTable& a, std::uint32_t p) {
    if (!a.is_constant()) throw InvalidInput("census needs a table without parameters; specialize alpha first");
    std::size_t rows = 0, cols = 0;
    auto m = leibniz_mod_p(a, p, rows, cols);
    return cols - rank_mod_p(std::move(m), rows, cols, p);
}

std::vector<std::string> vanishing_constant_warnings(const AlgebraTable& a, std::uint32_t p) {
    std::vector<std::string> out;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& s = a.gamma(i, j, k);
                if (s.is_zero() || !s.is_constant()) continue;
                if (reduce_mod_p(s.constant_value(), p).is_zero()) {
                    std::ostringstream os;
                    os << "constant " << s.str() << " in " << basis_name(i) << "*" << basis_name(j)
                       << " vanishes mod " << p;
                    out.push_back(os.str());
                }
            }
    // Leibniz coefficients are sums of structure constants, e.g. 2 when
    // gamma^k_ik and gamma^k_ki coincide.
    const ScalarMatrix sys = build_leibniz_system(a).rows;
    std::set<std::string> seen;
    for (std::size_t r = 0; r < sys.rows(); ++r)
        for (std::size_t c = 0; c < sys.cols(); ++c) {
            const Scalar& s = sys(r, c);
            if (s.is_zero() || !s.is_constant()) continue;
            if (!reduce_mod_p(s.constant_value(), p).is_zero()) continue;
            const std::string text = s.str();
            if (!seen.insert(text).second) continue;
            out.push_back("Leibniz coefficient " + text + " vanishes mod " + std::to_string(p));
        }
    return out;
}

CensusResult census(const AlgebraTable& a, std::uint32_t p, const CensusOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    check_census_prime(p);
    const std::size_t n = a.dim();
    std::vector<std::uint32_t> g = reduce_table(a, p);

    const double naive_log2 = static_cast<double>(n * n) * std::log2(static_cast<double>(p));
    if (naive_log2 > options.max_naive_log2 + 1e-9) {
        std::ostringstream os;
        os << "search space " << p << "^" << n * n << " exceeds 2^" << options.max_naive_log2
           << "; use a smaller prime or raise --max-naive";
        throw Infeasible(os.str());
    }

    CensusResult res;
    res.p = p;
    res.n = n;
    res.warnings = vanishing_constant_warnings(a, p);

    Engine engine(n, p, std::move(g));
    std::uint64_t column_values = 1;
    for (std::size_t r = 0; r < n; ++r) column_values *= p;

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(column_values)));
    std::vector<Engine::Counter> counters(threads);
    auto bound = [&](unsigned t) { return column_values * t / threads; };
    if (threads == 1) {
        counters[0] = engine.run_range(0, column_values, column_values);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] { counters[t] = engine.run_range(bound(t), bound(t + 1), column_values); });
        for (auto& th : pool) th.join();
    }
    for (const auto& c : counters) {
        res.aut_count += c.found;
        res.pruned += c.pruned;
    }

    res.der_dim = derivation_dim_mod_p(a, p);
    mpz_ui_pow_ui(res.der_count.get_mpz_t(), p, res.der_dim);
    res.elapsed = std::chrono::steady_clock::now() - start;
    return res;
}

mpz_class gl_order(std::size_t n, std::uint32_t p) {
    mpz_class pn, out = 1;
    mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class pi;
        mpz_ui_pow_ui(pi.get_mpz_t(), p, i);
        out *= pn - pi;
    }
    return out;
}

PredictedCount predicted_count(const ParametricMatrixFamily& fam, std::uint32_t p) {
    PredictedCount out;
    if (!fam.has_entries()) {
        out.reason = "family has no explicit entries";
        return out;
    }
    if (!fam.equations.empty()) {
        out.reason = "family carries polynomial relations";
        return out;
    }
    const auto params = fam.free_parameters();
    if (params.size() != space_size(fam.space)) {
        out.reason = "family involves alpha";
        return out;
    }
    const std::size_t n = fam.n;
    // Every parameter must be readable off some entry, so distinct points
    // give distinct matrices.
    std::set<std::string> bare;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Scalar& e = fam.entries(r, c);
            if (!e.is_polynomial()) continue;
            for (const auto& name : params)
                if (e == Scalar(MultiPoly::variable(fam.space, name))) bare.insert(name);
        }
    for (const auto& name : params)
        if (!bare.count(name)) {
            out.reason = "parameter " + name + " is not an entry of the matrix";
            return out;
        }

    std::set<std::string> constrained;
    auto monomial_vars = [&](const MultiPoly& m, bool& ok) {
        ok = m.terms().size() == 1;
        if (!ok) return;
        const Rational& c = m.leading_coefficient();
        if (mpz_divisible_ui_p(c.den().get_mpz_t(), p) || mpz_divisible_ui_p(c.num().get_mpz_t(), p)) {
            ok = false;
            return;
        }
        for (std::size_t v : m.variables_used()) constrained.insert(fam.space->name(v));
    };

    for (const auto& nz : fam.nonvanishing) {
        bool ok = false;
        monomial_vars(nz, ok);
        if (!ok) {
            out.reason = "coupled constraint " + nz.str() + " != 0";
            return out;
        }
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Scalar& e = fam.entries(r, c);
            bool ok = false;
            monomial_vars(e.den(), ok);
            if (!ok) {
                out.reason = "entry denominator " + e.den().str() + " is not a monomial";
                return out;
            }
            for (const auto& [exp, coef] : e.num().terms())
                if (mpz_divisible_ui_p(coef.den().get_mpz_t(), p)) {
                    out.reason = "entry " + e.str() + " does not reduce mod " + std::to_string(p);
                    return out;
                }
        }
    const Scalar det = family_determinant(fam.entries);
    if (det.is_zero()) {
        out.reason = "determinant vanishes identically";
        return out;
    }
    bool ok_num = false, ok_den = false;
    monomial_vars(det.num(), ok_num);
    if (ok_num) monomial_vars(det.den(), ok_den);
    if (!ok_num || !ok_den) {
        out.reason = "determinant " + det.str() + " is not a monomial mod " + std::to_string(p);
        return out;
    }

    std::uint64_t count = 1;
    for (const auto& name : params) count *= constrained.count(name) ? (p - 1) : p;
    out.count = count;
    out.reason = "monomial determinant";
    return out;
}

}  // namespace algaudit
