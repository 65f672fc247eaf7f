#include "algaudit/report.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "algaudit/derivations.hpp"
#include "algaudit/errors.hpp"

namespace algaudit {

namespace {

struct Range {
    std::size_t lo, hi;
    bool contains(std::size_t x) const { return lo <= x && x <= hi; }
    std::string str() const { return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]"; }
};

// Claimed dimension ranges, by algebra dimension.
const std::map<std::size_t, Range> kDerRange{{2, {0, 2}}, {3, {2, 4}}, {4, {0, 12}}};
const std::map<std::size_t, Range> kAutRange{{2, {1, 2}}, {3, {2, 4}}, {4, {1, 12}}};

// Dimensions of Aut stated alongside the worked examples.
const std::map<std::string, std::size_t> kStatedAutDim{{"As_2^1", 1}, {"As_3^8", 3}, {"As_4^4", 7}};

struct KnownIssue {
    std::string entry;
    CheckKind kind;
    std::string cause;
};

const std::vector<KnownIssue>& known_issues() {
    static const std::vector<KnownIssue> issues{
        {"As_4^2", CheckKind::DerDim, "printed pattern disagrees with the stated two-product table"},
        {"As_4^2", CheckKind::DerSpan, "printed pattern disagrees with the stated two-product table"},
        {"As_4^4", CheckKind::DerSpan, "printed entry (4,4) disagrees with the stated table"},
        {"As_3^1", CheckKind::FfCensus, "printed family omits the component exchanging e1 and e3"},
        {"As_2", CheckKind::Range, "printed family without parameters lies below the stated lower bound"},
        {"As_4", CheckKind::Range, "printed family without parameters lies below the stated lower bound"},
    };
    return issues;
}

const KnownIssue* known_issue(const std::string& entry, CheckKind kind) {
    for (const auto& k : known_issues())
        if (k.entry == entry && k.kind == kind) return &k;
    return nullptr;
}

AuditRecord make_record(const std::string& entry, CheckKind kind, Verdict v, std::string reason, std::string details) {
    AuditRecord r{entry, kind, v, std::move(reason), false, std::move(details)};
    if (v == Verdict::Mismatch) {
        if (kind == CheckKind::Erratum) {
            r.documented = true;
        } else if (const KnownIssue* k = known_issue(entry, kind)) {
            r.documented = true;
            if (r.reason.empty()) r.reason = k->cause;
        }
    }
    return r;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
    return out;
}

std::string element_text(const Element& x) {
    std::vector<std::string> terms;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].is_zero()) continue;
        const std::string e = "e" + std::to_string(k + 1);
        if (x[k].is_one()) terms.push_back(e);
        else if (x[k].is_constant()) terms.push_back(x[k].constant_value().str() + "*" + e);
        else terms.push_back("(" + x[k].str() + ")*" + e);
    }
    return terms.empty() ? "0" : join(terms, " + ");
}

std::string assignment_text(const Assignment& a) {
    std::vector<std::string> parts;
    for (const auto& [name, value] : a) parts.push_back(name + " = " + value.str());
    return join(parts, ", ");
}

std::string family_label(const ParametricMatrixFamily& f, std::size_t branches) {
    return branches > 1 ? "branch " + std::to_string(f.branch) : "family";
}

// Coefficient of a pattern symbol, moved off the pattern's own space.
Scalar coefficient_scalar(const Scalar& x) {
    if (x.is_constant()) return Scalar(x.constant_value());
    return x.lift(make_space({std::string(kAlpha)}));
}

// Printed symbols whose basis matrix is not a derivation, and computed
// derivations outside the printed span.
std::string span_discrepancy(const AlgebraTable& a, const SymbolicPattern& p, const DerivationBasis& der) {
    const std::size_t n = a.dim();
    const ScalarSubspace printed = pattern_to_subspace(p);
    std::vector<std::string> parts;
    const auto syms = p.symbols();
    for (const auto& s : syms) {
        const std::size_t v = *p.space->index_of(s);
        ScalarMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                auto coeffs = p.entries(r, c).num().coefficients_in(v);
                if (auto it = coeffs.find(1); it != coeffs.end())
                    m(r, c) = coefficient_scalar(Scalar(it->second, p.entries(r, c).den()));
            }
        DerivationCheck chk = is_derivation(a, m);
        if (chk.ok) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Element& res = chk.residual[i * n + j];
                if (std::all_of(res.begin(), res.end(), [](const Scalar& x) { return x.is_zero(); })) continue;
                parts.push_back("printed " + s + " is not a derivation: D(e" + std::to_string(i + 1) + "*e" +
                                std::to_string(j + 1) + ") - D(e" + std::to_string(i + 1) + ")e" +
                                std::to_string(j + 1) + " - e" + std::to_string(i + 1) + "D(e" + std::to_string(j + 1) +
                                ") = " + element_text(res));
                i = j = n;  // first failure only
            }
    }
    for (const auto& m : der.mats)
        if (!printed.contains(flatten(m))) parts.push_back("derivation outside the printed span: " + matrix_text(m));
    return join(parts, "; ");
}

std::size_t family_parameter_count(const std::vector<ParametricMatrixFamily>& fams, bool& any) {
    std::size_t best = 0;
    any = false;
    for (const auto& f : fams) {
        if (!f.has_entries()) continue;
        // Parameters that actually occur in the matrix.
        std::set<std::size_t> used;
        for (const auto& x : f.entries.data()) {
            for (auto v : x.num().variables_used()) used.insert(v);
            for (auto v : x.den().variables_used()) used.insert(v);
        }
        std::size_t count = 0;
        for (auto v : used)
            if (f.space->name(v) != kAlpha) ++count;
        best = std::max(best, count);
        any = true;
    }
    return best;
}

std::vector<std::string> alpha_denominators(const ScalarMatrix& m) {
    std::set<std::string> out;
    for (const auto& x : m.data()) {
        if (x.is_polynomial() || !x.space()) continue;
        auto idx = x.space()->index_of(kAlpha);
        if (idx && x.den().uses(*idx)) out.insert(x.den().str());
    }
    return {out.begin(), out.end()};
}

struct EntryFacts {
    std::size_t der_dim = 0;
    std::size_t tangent = 0;
    std::optional<std::size_t> printed_der_dim;
};

std::vector<AuditRecord> audit_entry(const CatalogEntry& e, const AuditOptions& options, EntryFacts& facts) {
    std::vector<AuditRecord> out;
    const std::string& name = e.name;
    std::optional<ScalarSubspace> printed;
    std::string pattern_note;
    if (e.expected_der) {
        try {
            printed = pattern_to_subspace(*e.expected_der);
            facts.printed_der_dim = printed->dim();
        } catch (const InvalidInput& ex) {
            pattern_note = ex.what();
        }
        const auto anomalies = pattern_anomalies(*e.expected_der);
        if (!anomalies.empty()) pattern_note = "symbol use looks typographic: " + join(anomalies, "; ");
    }

    if (!e.table) {
        out.push_back(make_record(name, CheckKind::DerDim, Verdict::Skipped, "no table",
                                  printed ? "printed dim " + std::to_string(printed->dim()) : "no printed pattern"));
        out.push_back(make_record(name, CheckKind::DerSpan, Verdict::Skipped, "no table", pattern_note));
        if (!e.expected_aut) {
            out.push_back(make_record(name, CheckKind::AutFamily, Verdict::Skipped, "no family printed", ""));
        } else {
            for (const auto& f : *e.expected_aut) {
                const std::string label = family_label(f, e.expected_aut->size());
                if (f.unverifiable)
                    out.push_back(make_record(name, CheckKind::AutFamily, Verdict::Unverifiable, *f.unverifiable, label));
                else
                    out.push_back(make_record(name, CheckKind::AutFamily, Verdict::Skipped, "no table",
                                              label + "; parameters " + (f.free_parameters().empty() ? std::string("none") : join(f.free_parameters(), ", "))));
            }
        }
    } else {
        const AlgebraTable& a = *e.table;
        const std::size_t n = a.dim();
        const DerivationBasis der = derivation_basis(a);
        facts.der_dim = der.dim();
        const std::size_t c_verbatim = central_derivations(a, false).dim();
        const std::size_t c_der = central_derivations(a, true).dim();
        const std::string central = "C(A) " + std::to_string(c_verbatim) + ", C(A) in Der(A) " + std::to_string(c_der);

        if (printed) {
            const bool same = printed->dim() == der.dim();
            out.push_back(make_record(name, CheckKind::DerDim, same ? Verdict::Match : Verdict::Mismatch, "",
                                      "computed " + std::to_string(der.dim()) + ", printed " +
                                          std::to_string(printed->dim()) + "; " + central));
            if (*printed == der.space) {
                out.push_back(make_record(name, CheckKind::DerSpan, Verdict::Match, "", pattern_note));
            } else {
                std::string d = span_discrepancy(a, *e.expected_der, der);
                if (!pattern_note.empty()) d += "; " + pattern_note;
                out.push_back(make_record(name, CheckKind::DerSpan, Verdict::Mismatch, "", d));
            }
        } else {
            const std::string why = e.expected_der ? pattern_note : "no printed pattern";
            out.push_back(make_record(name, CheckKind::DerDim, Verdict::Skipped, why,
                                      "computed " + std::to_string(der.dim()) + "; " + central));
            out.push_back(make_record(name, CheckKind::DerSpan, Verdict::Skipped, why, ""));
        }

        std::vector<const ParametricMatrixFamily*> verified;
        if (!e.expected_aut) {
            out.push_back(make_record(name, CheckKind::AutFamily, Verdict::Skipped, "no family printed", ""));
        } else {
            for (const auto& f : *e.expected_aut) {
                const std::string label = family_label(f, e.expected_aut->size());
                FamilyVerdict v;
                try {
                    v = verify_family(a, f);
                } catch (const Error& ex) {
                    out.push_back(make_record(name, CheckKind::AutFamily, Verdict::Unverifiable, ex.what(), label));
                    continue;
                }
                switch (v.status) {
                    case FamilyStatus::Verified:
                        verified.push_back(&f);
                        out.push_back(make_record(name, CheckKind::AutFamily, Verdict::Match, "", label + ": " + v.reason));
                        break;
                    case FamilyStatus::Failed:
                        out.push_back(make_record(
                            name, CheckKind::AutFamily, Verdict::Mismatch, "",
                            label + ": " + v.reason + "; witness " + assignment_text(v.witness)));
                        break;
                    case FamilyStatus::Unverifiable:
                        out.push_back(make_record(name, CheckKind::AutFamily, Verdict::Unverifiable, v.reason, label));
                        break;
                }
            }
        }

        const ScalarMatrix tan = tangent_system(a);
        const ScalarMatrix leib = build_leibniz_system(a).rows;
        std::vector<std::vector<Scalar>> trows, lrows;
        for (std::size_t r = 0; r < tan.rows(); ++r) trows.push_back(tan.row(r));
        for (std::size_t r = 0; r < leib.rows(); ++r) lrows.push_back(leib.row(r));
        const bool same_rows = ScalarSubspace::span(n * n, trows) == ScalarSubspace::span(n * n, lrows);
        facts.tangent = n * n - rank(tan);
        out.push_back(make_record(name, CheckKind::TangentEqDer,
                                  same_rows && facts.tangent == der.dim() ? Verdict::Match : Verdict::Mismatch, "",
                                  "tangent_dim " + std::to_string(facts.tangent) + ", dim Der " +
                                      std::to_string(der.dim()) + (same_rows ? "; equal row spaces" : "; row spaces differ")));

        if (!options.run_census) {
            out.push_back(make_record(name, CheckKind::FfCensus, Verdict::Skipped, "census disabled", ""));
        } else if (!a.is_constant()) {
            out.push_back(make_record(name, CheckKind::FfCensus, Verdict::Skipped, "table involves alpha", ""));
        } else {
            const std::uint32_t p = audit_prime(n);
            try {
                CensusResult c = census(a, p, {1, kDefaultMaxNaiveLog2});
                mpz_class expect;
                mpz_ui_pow_ui(expect.get_mpz_t(), p, der.dim());
                std::ostringstream d;
                d << "p " << p << ": aut " << c.aut_count << ", der " << c.der_count.get_str() << " (expected "
                  << expect.get_str() << ")";
                bool ok = c.der_count == expect;
                if (verified.size() == 1 && e.expected_aut->size() == 1) {
                    PredictedCount pc = predicted_count(*verified.front(), p);
                    if (pc.count) {
                        d << ", family predicts " << *pc.count;
                        if (c.aut_count != *pc.count) ok = false;
                        if (c.aut_count > *pc.count) d << " (family is a proper subset)";
                    } else {
                        d << ", prediction unsupported: " << pc.reason;
                    }
                }
                for (const auto& w : c.warnings) d << "; warning: " << w;
                out.push_back(make_record(name, CheckKind::FfCensus, ok ? Verdict::Match : Verdict::Mismatch, "", d.str()));
            } catch (const Error& ex) {
                out.push_back(make_record(name, CheckKind::FfCensus, Verdict::Skipped, ex.what(), ""));
            }
        }

        std::ostringstream d;
        bool ok = true;
        if (auto it = kDerRange.find(n); it != kDerRange.end()) {
            ok = ok && it->second.contains(der.dim());
            d << "dim Der " << der.dim() << " in " << it->second.str();
        }
        if (auto it = kAutRange.find(n); it != kAutRange.end()) {
            ok = ok && it->second.contains(facts.tangent);
            d << "; tangent_dim " << facts.tangent << " in " << it->second.str();
        }
        out.push_back(make_record(name, CheckKind::Range, ok ? Verdict::Match : Verdict::Mismatch, "", d.str()));

        if (auto it = kStatedAutDim.find(name); it != kStatedAutDim.end() && it->second != facts.tangent) {
            out.push_back(make_record(name, CheckKind::Erratum, Verdict::Mismatch, "stated dimension of Aut",
                                      "stated " + std::to_string(it->second) + ", tangent_dim " +
                                          std::to_string(facts.tangent)));
        }
        if (name == "As_2^1") {
            // Der(A) is a linear space; the zero map always satisfies the rule.
            const bool zero_ok = is_derivation(a, ScalarMatrix(n, n)).ok;
            out.push_back(make_record(name, CheckKind::Erratum, Verdict::Mismatch, "det(D) != 0 side condition",
                                      std::string("the zero map is ") + (zero_ok ? "" : "not ") +
                                          "a derivation, so Der(A) is not restricted to invertible maps"));
        }
        if (e.expected_der && printed && !(*printed == der.space)) {
            out.push_back(make_record(name, CheckKind::Erratum, Verdict::Mismatch, "pattern inconsistent with table",
                                      "see DER_SPAN for the conflicting entries"));
        }
    }

    std::vector<std::string> alpha_dens;
    if (e.expected_der)
        for (const auto& s : alpha_denominators(e.expected_der->entries)) alpha_dens.push_back("pattern: " + s);
    if (e.expected_aut)
        for (const auto& f : *e.expected_aut)
            if (f.has_entries())
                for (const auto& s : alpha_denominators(f.entries))
                    alpha_dens.push_back(family_label(f, e.expected_aut->size()) + ": " + s);
    if (!alpha_dens.empty())
        out.push_back(make_record(name, CheckKind::Erratum, Verdict::Mismatch, "unstated condition on alpha",
                                  "entries divide by " + join(alpha_dens, ", ")));
    if (!e.expected_aut)
        out.push_back(make_record(name, CheckKind::Erratum, Verdict::Mismatch, "no family printed",
                                  "automorphism group missing from the list"));
    return out;
}

// Families whose "or" side condition is too weak: the determinant vanishes
// when any single listed parameter is zero.
AuditRecord or_condition_record(const std::vector<CatalogEntry>& catalog) {
    std::vector<std::string> needs_all, other;
    for (const auto& e : catalog) {
        if (!e.expected_aut) continue;
        for (const auto& f : *e.expected_aut) {
            if (!f.has_entries()) continue;
            for (const auto& note : f.notes) {
                const std::string tag = "or-condition ";
                if (note.rfind(tag, 0) != 0) continue;
                std::vector<std::string> vars;
                std::istringstream is(note.substr(tag.size()));
                for (std::string w; is >> w;)
                    if (w != "or") vars.push_back(w);
                const Scalar det = family_determinant(f.entries);
                bool all = true;
                for (const auto& v : vars) {
                    if (!f.space || !f.space->index_of(v)) {
                        all = false;
                        continue;
                    }
                    try {
                        if (!det.substitute(v, Rational(0)).is_zero()) all = false;
                    } catch (const DegenerateParameter&) {
                    }
                }
                const std::string label =
                    e.name + (e.expected_aut->size() > 1 ? " branch " + std::to_string(f.branch) : "");
                (all ? needs_all : other).push_back(label);
            }
        }
    }
    std::string d = "determinant vanishes when any one listed parameter is zero: " + join(needs_all, ", ");
    if (!other.empty()) d += "; condition names a parameter the determinant does not force: " + join(other, ", ");
    return make_record("catalog", CheckKind::Erratum, Verdict::Mismatch, "side condition written with 'or'", d);
}

std::vector<AuditRecord> range_summaries(const std::vector<CatalogEntry>& catalog,
                                         const std::vector<EntryFacts>& facts) {
    std::vector<AuditRecord> out;
    for (std::size_t n : {2, 3, 4}) {
        const std::string label = "As_" + std::to_string(n);
        std::size_t dlo = SIZE_MAX, dhi = 0, alo = SIZE_MAX, ahi = 0;
        std::string dlo_at, alo_at;
        bool computed_ok_d = true, computed_ok_a = true;
        for (std::size_t i = 0; i < catalog.size(); ++i) {
            const auto& e = catalog[i];
            const std::size_t dim = e.table ? e.table->dim()
                                   : e.expected_der ? e.expected_der->n
                                   : (e.expected_aut && !e.expected_aut->empty()) ? e.expected_aut->front().n : 0;
            if (dim != n) continue;
            if (facts[i].printed_der_dim) {
                const std::size_t d = *facts[i].printed_der_dim;
                if (d < dlo) dlo = d, dlo_at = e.name;
                dhi = std::max(dhi, d);
            }
            if (e.expected_aut) {
                bool any = false;
                const std::size_t k = family_parameter_count(*e.expected_aut, any);
                if (any) {
                    if (k < alo) alo = k, alo_at = e.name;
                    ahi = std::max(ahi, k);
                }
            }
            if (e.table) {
                computed_ok_d = computed_ok_d && kDerRange.at(n).contains(facts[i].der_dim);
                computed_ok_a = computed_ok_a && kAutRange.at(n).contains(facts[i].tangent);
            }
        }
        const Range dr = kDerRange.at(n), ar = kAutRange.at(n);
        const bool dmatch = dlo == dr.lo && dhi == dr.hi && computed_ok_d;
        out.push_back(make_record(label, CheckKind::Range, dmatch ? Verdict::Match : Verdict::Mismatch, "",
                                  "derivations: stated " + dr.str() + ", printed patterns span [" +
                                      std::to_string(dlo) + ", " + std::to_string(dhi) + "] (minimum at " + dlo_at +
                                      "), computed dims " + (computed_ok_d ? "inside" : "outside")));
        const bool amatch = alo == ar.lo && ahi == ar.hi && computed_ok_a;
        out.push_back(make_record(label, CheckKind::Range, amatch ? Verdict::Match : Verdict::Mismatch, "",
                                  "automorphisms: stated " + ar.str() + ", printed family parameters span [" +
                                      std::to_string(alo) + ", " + std::to_string(ahi) + "] (minimum at " + alo_at +
                                      "), computed tangent dims " + (computed_ok_a ? "inside" : "outside")));
    }
    return out;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string verdict_cell(const AuditRecord& r) {
    std::string v = to_string(r.verdict);
    if (!r.reason.empty() && (r.verdict == Verdict::Skipped || r.verdict == Verdict::Unverifiable))
        v += "(" + r.reason + ")";
    if (r.documented) v += " [documented]";
    return v;
}

}  // namespace

std::string to_string(CheckKind k) {
    switch (k) {
        case CheckKind::DerDim: return "DER_DIM";
        case CheckKind::DerSpan: return "DER_SPAN";
        case CheckKind::AutFamily: return "AUT_FAMILY";
        case CheckKind::TangentEqDer: return "TANGENT_EQ_DER";
        case CheckKind::FfCensus: return "FF_CENSUS";
        case CheckKind::Range: return "RANGE";
        case CheckKind::Erratum: return "ERRATUM";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Match: return "MATCH";
        case Verdict::Mismatch: return "MISMATCH";
        case Verdict::Skipped: return "SKIPPED";
        case Verdict::Unverifiable: return "UNVERIFIABLE";
    }
    return "?";
}

std::string record_json(const AuditRecord& r) {
    nlohmann::ordered_json j;
    j["entry"] = r.entry;
    j["check"] = to_string(r.kind);
    j["verdict"] = to_string(r.verdict);
    j["reason"] = r.reason;
    j["documented"] = r.documented;
    j["details"] = r.details;
    return j.dump();
}

std::uint32_t audit_prime(std::size_t n) { return n <= 3 ? 5 : 3; }

std::string matrix_text(const ScalarMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r ? ", [" : "[";
        for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + m(r, c).str();
        out += "]";
    }
    return out + "]";
}

AuditReport run_audit(const std::vector<CatalogEntry>& catalog, const AuditOptions& options) {
    std::vector<std::vector<AuditRecord>> per_entry(catalog.size());
    std::vector<EntryFacts> facts(catalog.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < catalog.size();) {
            try {
                per_entry[i] = audit_entry(catalog[i], options, facts[i]);
            } catch (const std::exception& ex) {
                per_entry[i] = {make_record(catalog[i].name, CheckKind::DerDim, Verdict::Skipped,
                                            std::string("internal error: ") + ex.what(), "")};
            }
        }
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    AuditReport rep;
    for (auto& recs : per_entry)
        for (auto& r : recs) rep.records.push_back(std::move(r));
    for (auto& r : range_summaries(catalog, facts)) rep.records.push_back(std::move(r));
    rep.records.push_back(or_condition_record(catalog));

    std::map<std::string, std::size_t> counts;
    std::ostringstream text;
    for (const auto& r : rep.records) {
        ++counts[to_string(r.verdict)];
        if (r.verdict == Verdict::Mismatch && !r.documented) rep.exit_code = 1;
        text << pad(r.entry, 9) << pad(to_string(r.kind), 15) << pad(verdict_cell(r), 14);
        if (!r.reason.empty() && r.verdict == Verdict::Mismatch) text << r.reason << (r.details.empty() ? "" : "; ");
        text << r.details << "\n";
        rep.jsonl += record_json(r) + "\n";
    }
    text << "\n" << rep.records.size() << " records:";
    for (const auto& [k, v] : counts) text << " " << k << " " << v;
    text << "\n";
    rep.text = text.str();
    return rep;
}

// ---------------------------------------------------------------------------
// Commands

namespace {

CommandResult parse_failure(const ParseError& e) { return {2, "", "parse error at " + std::string(e.what()) + "\n"}; }

const ParametricMatrixFamily* single_family(const CatalogEntry* e) {
    if (!e || !e->expected_aut || e->expected_aut->size() != 1) return nullptr;
    return &e->expected_aut->front();
}

}  // namespace

CommandResult cmd_check(const std::string& alg_text) {
    AlgebraTable a;
    try {
        a = parse_table(alg_text);
    } catch (const ParseError& e) {
        return parse_failure(e);
    }
    const auto violations = check_associativity(a);
    std::ostringstream os;
    os << "algebra " << a.name() << " dim " << a.dim() << "\n";
    if (violations.empty()) {
        os << "associative\n";
        return {0, os.str(), ""};
    }
    for (const auto& v : violations)
        os << "(e" << v.i + 1 << "*e" << v.j + 1 << ")*e" << v.k + 1 << " - e" << v.i + 1 << "*(e" << v.j + 1 << "*e"
           << v.k + 1 << ") = " << element_text(v.residual) << "\n";
    os << violations.size() << " associativity violation" << (violations.size() == 1 ? "" : "s") << "\n";
    return {1, os.str(), ""};
}

CommandResult cmd_der(const std::string& alg_text, const DerOptions& options, const std::vector<CatalogEntry>& catalog) {
    AlgebraTable a;
    std::optional<SymbolicPattern> pattern;
    bool from_catalog = false;
    try {
        a = parse_table(alg_text);
        if (options.compare_pattern && options.pattern_text) {
            auto pats = parse_patterns(*options.pattern_text);
            for (const auto& p : pats)
                if (p.name == a.name()) pattern = p;
            if (!pattern && pats.size() == 1) pattern = pats.front();
        }
    } catch (const ParseError& e) {
        return parse_failure(e);
    }
    if (options.compare_pattern && !options.pattern_text) {
        const CatalogEntry* e = find_entry(catalog, a.name());
        if (e && e->expected_der) {
            pattern = e->expected_der;
            from_catalog = true;
        }
    }
    if (options.compare_pattern && !pattern) return {2, "", "no pattern named " + a.name() + "\n"};
    if (pattern && pattern->n != a.dim()) return {2, "", "pattern dimension does not match the table\n"};

    const DerivationBasis der = derivation_basis(a);
    std::ostringstream os;
    os << "algebra " << a.name() << " dim " << a.dim() << "\n";
    os << "dim Der = " << der.dim() << "\n";
    for (std::size_t i = 0; i < der.mats.size(); ++i) os << "  D" << i + 1 << " = " << matrix_text(der.mats[i]) << "\n";
    os << "dim C(A) = " << central_derivations(a, false).dim() << "  (phi(A) in Z(A), phi(A^2) = 0)\n";
    os << "dim C(A) in Der(A) = " << central_derivations(a, true).dim() << "\n";
    int code = 0;
    if (pattern) {
        ScalarSubspace ps;
        try {
            ps = pattern_to_subspace(*pattern);
        } catch (const InvalidInput& e) {
            return {1, os.str(), std::string(e.what()) + "\n"};
        }
        if (ps == der.space) {
            os << "pattern " << pattern->name << ": MATCH\n";
        } else {
            const bool documented = from_catalog && known_issue(a.name(), CheckKind::DerSpan);
            os << "pattern " << pattern->name << ": MISMATCH" << (documented ? " [documented]" : "") << "\n";
            os << "  printed dim " << ps.dim() << ", computed dim " << der.dim() << "\n";
            std::istringstream parts(span_discrepancy(a, *pattern, der));
            for (std::string part; std::getline(parts, part, ';');) {
                part.erase(0, part.find_first_not_of(' '));
                os << "  " << part << "\n";
            }
            if (!documented) code = 1;
        }
        for (const auto& an : pattern_anomalies(*pattern)) os << "  note: " << an << "\n";
    }
    return {code, os.str(), ""};
}

CommandResult cmd_autverify(const std::string& alg_text, const std::string& fam_text) {
    AlgebraTable a;
    std::vector<ParametricMatrixFamily> fams;
    try {
        a = parse_table(alg_text);
        fams = parse_families(fam_text);
    } catch (const ParseError& e) {
        return parse_failure(e);
    }
    std::ostringstream os;
    int code = 0;
    os << "algebra " << a.name() << " dim " << a.dim() << "\n";
    for (const auto& f : fams) {
        os << "family " << f.name << (fams.size() > 1 ? " branch " + std::to_string(f.branch) : "") << ": ";
        if (f.n != a.dim()) {
            os << "UNVERIFIABLE (dimension " << f.n << " does not match)\n";
            continue;
        }
        FamilyVerdict v;
        try {
            v = verify_family(a, f);
        } catch (const Error& ex) {
            os << "UNVERIFIABLE (" << ex.what() << ")\n";
            continue;
        }
        os << to_string(v.status) << " (" << v.reason << ")\n";
        if (v.status == FamilyStatus::Failed) {
            code = 1;
            os << "  residual R(" << v.i + 1 << "," << v.j + 1 << "," << v.t + 1 << ") = " << v.residual_entry.str() << "\n";
            if (!v.witness.empty()) {
                os << "  witness " << assignment_text(v.witness) << "\n";
                os << "  matrix " << matrix_text(instantiate(f, v.witness)) << "\n";
            }
        }
    }
    os << "tangent_dim = " << tangent_dim(a) << ", dim Der = " << derivation_basis(a).dim() << "\n";
    return {code, os.str(), ""};
}

CommandResult cmd_census(const std::string& alg_text, const CensusCommandOptions& options,
                         const std::vector<CatalogEntry>& catalog) {
    AlgebraTable a;
    try {
        a = parse_table(alg_text);
    } catch (const ParseError& e) {
        return parse_failure(e);
    }
    const AlgebraTable original = a;
    std::ostringstream os;
    try {
        if (!a.is_constant()) {
            if (!options.alpha) return {3, "", "table involves alpha; pass --alpha <value>\n"};
            a = specialize_alpha(a, *options.alpha);
        }
        CensusResult c = census(a, options.prime, {options.threads, options.max_naive_log2});
        for (const auto& w : c.warnings) os << "warning: " << w << "\n";
        os << "census " << a.name() << " over F_" << c.p << "\n";
        os << "aut_count = " << c.aut_count << "\n";
        os << "der_count = " << c.der_count.get_str() << " (dim " << c.der_dim << ")\n";
        os << "pruned = " << c.pruned << "\n";
        os << "elapsed = " << std::fixed << std::setprecision(3) << c.elapsed.count() << " s\n";
        int code = 0;
        if (const ParametricMatrixFamily* f = single_family(find_entry(catalog, a.name()))) {
            FamilyVerdict v;
            try {
                v = verify_family(original, *f);
            } catch (const Error&) {
                v.status = FamilyStatus::Unverifiable;
            }
            if (v.status == FamilyStatus::Verified) {
                PredictedCount pc = predicted_count(*f, options.prime);
                if (pc.count) {
                    os << "predicted = " << *pc.count << ": ";
                    if (*pc.count == c.aut_count) {
                        os << "AGREE\n";
                    } else if (*pc.count < c.aut_count) {
                        os << "EXCEEDS (printed family covers " << *pc.count << " of " << c.aut_count << ")\n";
                    } else {
                        os << "SHORT\n";
                        code = 1;
                    }
                } else {
                    os << "predicted = UNSUPPORTED (" << pc.reason << ")\n";
                }
            }
        }
        return {code, os.str(), ""};
    } catch (const BadPrime& e) {
        return {3, os.str(), std::string(e.what()) + "\n"};
    } catch (const Infeasible& e) {
        return {3, os.str(), std::string(e.what()) + "\n"};
    } catch (const InvalidInput& e) {
        return {3, os.str(), std::string(e.what()) + "\n"};
    } catch (const DegenerateParameter& e) {
        return {3, os.str(), std::string(e.what()) + "\n"};
    }
}

CommandResult cmd_audit(const std::vector<CatalogEntry>& catalog, const AuditOptions& options, std::string* records) {
    AuditReport rep = run_audit(catalog, options);
    if (records) *records = rep.jsonl;
    return {rep.exit_code, rep.text, ""};
}

}  // namespace algaudit
