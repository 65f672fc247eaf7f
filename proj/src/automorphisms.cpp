#include "algaudit/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace algaudit {

bool HomResidual::is_zero() const {
    return std::all_of(r_.begin(), r_.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

Space table_space(const AlgebraTable& a) {
    Space s;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& g = a.gamma(i, j, k);
                if (!g.is_constant()) s = merge_spaces(s, g.space());
            }
    return s;
}

Space matrix_space(const ScalarMatrix& m) {
    Space s;
    for (const auto& x : m.data())
        if (!x.is_constant()) s = merge_spaces(s, x.space());
    return s;
}

AlgebraTable lift_table(const AlgebraTable& a, const Space& s) {
    if (space_size(s) == 0) return a;
    const std::size_t n = a.dim();
    AlgebraTable out(n, a.name());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& g = a.gamma(i, j, k);
                out.set_gamma(i, j, k, g.is_constant() ? g : g.lift(s));
            }
    return out;
}

ScalarMatrix lift_matrix(const ScalarMatrix& m, const Space& s) {
    if (space_size(s) == 0) return m;
    ScalarMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).is_constant() ? m(r, c) : m(r, c).lift(s);
    return out;
}

// Largest factor of p that involves only alpha (monic), or 1.
MultiPoly alpha_content(const MultiPoly& p) {
    auto alpha = p.space() ? p.space()->index_of(kAlpha) : std::nullopt;
    if (!alpha || p.is_zero()) return MultiPoly::constant(p.space(), Rational(1));
    std::map<Exponents, MultiPoly> groups;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e, only = Exponents(e.size(), 0);
        rest[*alpha] = 0;
        only[*alpha] = e[*alpha];
        auto [it, ins] = groups.try_emplace(rest, MultiPoly::constant(p.space(), Rational(0)));
        it->second += MultiPoly::monomial(p.space(), only, c);
    }
    MultiPoly g = groups.begin()->second;
    for (const auto& [k, v] : groups) g = univariate_gcd(g, v, *alpha);
    return g;
}

// Deterministic generator of rational parameter assignments.
class AssignmentSampler {
public:
    AssignmentSampler(std::size_t nvars, std::uint64_t seed) : nvars_(nvars), rng_(seed) {}

    std::vector<Rational> next() {
        // Uniform assignments 1..7 then -1..-7 first; they give the smallest
        // witnesses for one-parameter residuals.
        if (uniform_ < 14) {
            long long v = uniform_ < 7 ? uniform_ + 1 : -(uniform_ - 6);
            ++uniform_;
            return std::vector<Rational>(nvars_, Rational(v));
        }
        std::uniform_int_distribution<int> num(-7, 7), den(1, 7);
        std::vector<Rational> out;
        for (std::size_t v = 0; v < nvars_; ++v) out.emplace_back(num(rng_), den(rng_));
        return out;
    }

private:
    std::size_t nvars_;
    std::mt19937_64 rng_;
    int uniform_ = 0;
};

struct LiftedFamily {
    Space space;
    ScalarMatrix entries;
    std::vector<MultiPoly> nonvanishing;
    std::vector<MultiPoly> equations;
};

LiftedFamily lift_family(const ParametricMatrixFamily& fam, const Space& s) {
    LiftedFamily out;
    out.space = s;
    out.entries = lift_matrix(fam.entries, s);
    for (const auto& p : fam.nonvanishing) out.nonvanishing.push_back(p.lift(s));
    for (const auto& p : fam.equations) out.equations.push_back(p.lift(s));
    return out;
}

bool admissible(const LiftedFamily& fam, const std::vector<Rational>& values) {
    for (const auto& p : fam.nonvanishing)
        if (p.evaluate(values).is_zero()) return false;
    for (const auto& p : fam.equations)
        if (!p.evaluate(values).is_zero()) return false;
    for (const auto& x : fam.entries.data())
        if (x.den().evaluate(values).is_zero()) return false;
    return true;
}

Assignment to_assignment(const Space& s, const std::vector<Rational>& values) {
    Assignment out;
    for (std::size_t v = 0; v < space_size(s); ++v) out.emplace_back(s->name(v), values[v]);
    return out;
}

ScalarMatrix evaluate_matrix(const ScalarMatrix& m, const std::vector<Rational>& values) {
    ScalarMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Scalar(m(r, c).evaluate(values));
    return out;
}

AlgebraTable evaluate_table(const AlgebraTable& a, const Space& s, const std::vector<Rational>& values) {
    if (a.is_constant()) return a;
    AlgebraTable lifted = lift_table(a, s);
    const std::size_t n = a.dim();
    AlgebraTable out(n, a.name());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.set_gamma(i, j, k, Scalar(lifted.gamma(i, j, k).evaluate(values)));
    return out;
}

constexpr std::size_t kWitnessBudget = 4000;
constexpr std::uint64_t kWitnessSeed = 0x5eedULL;

}  // namespace

HomResidual hom_residual(const AlgebraTable& a, const ScalarMatrix& f) {
    const std::size_t n = a.dim();
    if (f.rows() != n || f.cols() != n) throw DimensionMismatch("matrix does not match algebra dimension");
    Space s = merge_spaces(table_space(a), matrix_space(f));
    AlgebraTable la = lift_table(a, s);
    ScalarMatrix lf = lift_matrix(f, s);
    HomResidual r(n);
    std::vector<Element> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(lf.col(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element lhs = multiply(la, cols[i], cols[j]);
            for (std::size_t t = 0; t < n; ++t) {
                Scalar v = lhs[t];
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar& g = la.gamma(i, j, k);
                    if (!g.is_zero()) v -= g * lf(t, k);
                }
                r(i, j, t) = std::move(v);
            }
        }
    return r;
}

Scalar family_determinant(const ScalarMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    if (n > 6) return determinant(m);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar det(0);
    do {
        Scalar term(1);
        for (std::size_t c = 0; c < n && !term.is_zero(); ++c) {
            const Scalar& x = m(perm[c], c);
            if (x.is_zero()) term = Scalar(0);
            else term *= x;
        }
        if (term.is_zero()) continue;
        std::size_t inversions = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y)
                if (perm[x] > perm[y]) ++inversions;
        if (inversions % 2) det -= term;
        else det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

bool is_automorphism(const AlgebraTable& a, const ScalarMatrix& f) {
    if (!hom_residual(a, f).is_zero()) return false;
    return !family_determinant(f).is_zero();
}

std::vector<std::string> ParametricMatrixFamily::free_parameters() const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < space_size(space); ++v)
        if (space->name(v) != kAlpha) out.push_back(space->name(v));
    return out;
}

std::string to_string(FamilyStatus s) {
    switch (s) {
        case FamilyStatus::Verified: return "VERIFIED";
        case FamilyStatus::Failed: return "FAILED";
        case FamilyStatus::Unverifiable: return "UNVERIFIABLE";
    }
    return "?";
}

void check_family_well_formed(const ParametricMatrixFamily& fam) {
    if (!fam.has_entries()) return;
    if (fam.entries.rows() != fam.n || fam.entries.cols() != fam.n)
        throw InvalidInput("family " + fam.name + " has a malformed matrix");
    MultiPoly product = MultiPoly::constant(fam.space, Rational(1));
    for (const auto& p : fam.nonvanishing) product *= p.lift(fam.space);
    for (std::size_t r = 0; r < fam.n; ++r)
        for (std::size_t c = 0; c < fam.n; ++c) {
            const Scalar& x = fam.entries(r, c);
            if (x.is_polynomial()) continue;
            MultiPoly d = x.den().lift(fam.space);
            MultiPoly core = *divide_exact(d, alpha_content(d));
            if (core.is_constant()) continue;
            if (!divide_exact(product.pow(core.total_degree()), core))
                throw InvalidInput("family " + fam.name + ": denominator " + d.str() + " at (" + std::to_string(r + 1) +
                                   "," + std::to_string(c + 1) + ") is not covered by the nonvanishing list");
        }
}

ScalarMatrix instantiate(const ParametricMatrixFamily& fam, const Assignment& values) {
    std::vector<Rational> v(space_size(fam.space));
    std::vector<bool> seen(v.size(), false);
    for (const auto& [name, value] : values) {
        auto idx = fam.space ? fam.space->index_of(name) : std::nullopt;
        if (!idx) throw InvalidInput("unknown family parameter '" + name + "'");
        v[*idx] = value;
        seen[*idx] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw InvalidInput("assignment does not cover every family parameter");
    return evaluate_matrix(fam.entries, v);
}

FamilyVerdict verify_family(const AlgebraTable& a, const ParametricMatrixFamily& fam) {
    FamilyVerdict verdict;
    if (fam.unverifiable) {
        verdict.status = FamilyStatus::Unverifiable;
        verdict.reason = *fam.unverifiable;
        return verdict;
    }
    if (!fam.has_entries()) throw InvalidInput("family " + fam.name + " has no entries");
    if (fam.n != a.dim()) throw DimensionMismatch("family dimension does not match algebra");
    check_family_well_formed(fam);

    Space s = merge_spaces(fam.space, table_space(a));
    LiftedFamily lf = lift_family(fam, s);
    AlgebraTable la = lift_table(a, s);
    HomResidual r = hom_residual(la, lf.entries);
    const std::size_t n = a.dim();

    auto residual_vanishes = [&](const Scalar& x) {
        if (x.is_zero()) return true;
        return reduce(x.num().lift(s), lf.equations).is_zero();
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                const Scalar& x = r(i, j, t);
                if (residual_vanishes(x)) continue;
                verdict.i = i;
                verdict.j = j;
                verdict.t = t;
                verdict.residual_entry = x;
                AssignmentSampler sampler(space_size(s), kWitnessSeed);
                for (std::size_t attempt = 0; attempt < kWitnessBudget; ++attempt) {
                    auto values = sampler.next();
                    if (!admissible(lf, values)) continue;
                    try {
                        if (x.evaluate(values).is_zero()) continue;
                    } catch (const DegenerateParameter&) {
                        continue;
                    }
                    verdict.status = FamilyStatus::Failed;
                    verdict.witness = to_assignment(s, values);
                    verdict.reason = "residual entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                     std::to_string(t + 1) + ") = " + x.str();
                    return verdict;
                }
                verdict.status = FamilyStatus::Unverifiable;
                verdict.reason = "residual " + x.str() + " does not reduce to zero and no witness was found";
                return verdict;
            }

    Scalar det = family_determinant(lf.entries);
    if (det.is_zero() || reduce(det.num(), lf.equations).is_zero()) {
        verdict.status = FamilyStatus::Failed;
        verdict.reason = "determinant is identically zero";
        AssignmentSampler sampler(space_size(s), kWitnessSeed);
        for (std::size_t attempt = 0; attempt < kWitnessBudget; ++attempt) {
            auto values = sampler.next();
            if (admissible(lf, values)) {
                verdict.witness = to_assignment(s, values);
                break;
            }
        }
        return verdict;
    }
    verdict.status = FamilyStatus::Verified;
    verdict.reason = "all " + std::to_string(n * n * n) + " residual entries vanish; det = " + det.str();
    return verdict;
}

ScalarMatrix tangent_system(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    ScalarMatrix j(n * n * n, n * n);
    const ScalarMatrix id = ScalarMatrix::identity(n);
    const Scalar half = Scalar(Rational(1, 2));
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row) {
            ScalarMatrix plus = id, minus = id;
            plus(row, col) += Scalar(1);
            minus(row, col) -= Scalar(1);
            HomResidual rp = hom_residual(a, plus);
            HomResidual rm = hom_residual(a, minus);
            const std::size_t u = col * n + row;
            for (std::size_t k = 0; k < n * n * n; ++k) j(k, u) = (rp.entries()[k] - rm.entries()[k]) * half;
        }
    return j;
}

std::size_t tangent_dim(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    return n * n - rank(tangent_system(a));
}

bool closure_spot_check(const AlgebraTable& a, const ParametricMatrixFamily& fam, std::size_t trials,
                        std::uint64_t seed) {
    if (!fam.has_entries()) throw InvalidInput("family " + fam.name + " has no entries");
    if (fam.n != a.dim()) throw DimensionMismatch("family dimension does not match algebra");
    Space s = merge_spaces(fam.space, table_space(a));
    LiftedFamily lf = lift_family(fam, s);
    AssignmentSampler sampler(space_size(s), seed);
    constexpr std::size_t kRetries = 2000;

    auto sample = [&]() {
        for (std::size_t attempt = 0; attempt < kRetries; ++attempt) {
            auto values = sampler.next();
            if (!admissible(lf, values)) continue;
            ScalarMatrix m = evaluate_matrix(lf.entries, values);
            if (determinant(m).is_zero()) continue;
            return std::make_pair(values, m);
        }
        throw InvalidInput("could not sample an admissible member of family " + fam.name);
    };

    std::optional<std::pair<AlgebraTable, ScalarMatrix>> previous;
    for (std::size_t t = 0; t < trials; ++t) {
        auto [values, m] = sample();
        AlgebraTable at = evaluate_table(a, s, values);
        if (!is_automorphism(at, m)) return false;
        if (!is_automorphism(at, inverse(m))) return false;
        // Products only make sense inside one algebra (same alpha).
        if (previous && previous->first == at) {
            if (!is_automorphism(at, m * previous->second)) return false;
            if (!is_automorphism(at, previous->second * m)) return false;
        }
        previous = std::make_pair(at, m);
    }
    return true;
}

}  // namespace algaudit
