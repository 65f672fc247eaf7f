// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "algaudit/automorphisms.hpp"
#include "algaudit/census.hpp"
#include "algaudit/derivations.hpp"
#include "algaudit/errors.hpp"
#include "algaudit/report.hpp"
#include "support.hpp"

using namespace algaudit;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << detail << "\n";
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<AlgebraTable> random_tables(std::size_t count) {
    std::mt19937_64 rng(77);
    std::vector<AlgebraTable> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(testsupport::random_associative(rng));
    return out;
}

std::vector<AlgebraTable> fixtures() {
    std::vector<AlgebraTable> out;
    for (const auto& e : builtin_catalog())
        if (e.table) out.push_back(*e.table);
    return out;
}

ScalarSubspace row_space(const ScalarMatrix& m) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return ScalarSubspace::span(m.cols(), rows);
}

void criterion1() {
    const auto t0 = Clock::now();
    const auto& cat = builtin_catalog();
    bool ok = true;
    std::ostringstream d;
    const std::pair<const char*, std::size_t> expected[] = {{"As_2^1", 2}, {"As_3^1", 4}, {"As_3^8", 3}};
    for (auto [name, dim] : expected) {
        const auto* e = find_entry(cat, name);
        const auto der = derivation_basis(*e->table);
        const bool same = der.space == pattern_to_subspace(*e->expected_der);
        ok = ok && same && der.dim() == dim;
        d << name << " dim " << der.dim() << (same ? " span equal; " : " span differs; ");
    }
    const double t = seconds_since(t0);
    ok = ok && t < 1.0;
    d << "time " << t << " s";
    report(1, ok, d.str());
}

void criterion2() {
    AuditReport r;
    try {
        r = run_audit(builtin_catalog());
    } catch (const std::exception& e) {
        report(2, false, std::string("audit threw: ") + e.what());
        return;
    }
    bool ok = true;
    std::ostringstream d;
    for (const char* name : {"As_4^2", "As_4^4"}) {
        for (auto kind : {CheckKind::DerDim, CheckKind::DerSpan}) {
            const AuditRecord* rec = nullptr;
            for (const auto& x : r.records)
                if (x.entry == name && x.kind == kind) rec = &x;
            const bool determinate = rec && (rec->verdict == Verdict::Match || rec->verdict == Verdict::Mismatch);
            ok = ok && determinate;
            if (rec) {
                d << name << " " << to_string(kind) << " " << to_string(rec->verdict) << "; ";
                if (rec->verdict == Verdict::Mismatch && kind == CheckKind::DerSpan)
                    ok = ok && rec->details.find("printed d") != std::string::npos;
            }
        }
    }
    report(2, ok, d.str() + "conflicting entries cited");
}

void criterion3(const std::vector<AlgebraTable>& tables) {
    std::size_t mats = 0;
    bool ok = true;
    for (const auto& a : tables) {
        for (const auto& m : derivation_basis(a).mats) {
            ++mats;
            ok = ok && is_derivation(a, m).ok;
        }
    }
    report(3, ok, std::to_string(tables.size()) + " tables, " + std::to_string(mats) + " basis matrices, zero residual");
}

void criterion4() {
    bool ok = true;
    std::size_t pairs = 0;
    for (const auto& a : fixtures()) {
        const auto d = derivation_basis(a);
        for (const auto& x : d.mats)
            for (const auto& y : d.mats) {
                ++pairs;
                ok = ok && is_derivation(a, commutator(x, y)).ok;
            }
    }
    report(4, ok, std::to_string(pairs) + " commutators on fixtures");
}

void criterion5(const std::vector<AlgebraTable>& tables) {
    bool ok = true;
    std::size_t count = 0;
    for (const auto& a : tables) {
        ++count;
        ok = ok && tangent_dim(a) == derivation_basis(a).dim() &&
             row_space(tangent_system(a)) == row_space(build_leibniz_system(a).rows);
    }
    report(5, ok, std::to_string(count) + " tables, tangent_dim = dim Der and equal row spaces");
}

void criterion6() {
    const auto& cat = builtin_catalog();
    bool ok = true;
    std::ostringstream d;
    for (const char* name : {"As_2^1", "As_3^8"}) {
        const auto* e = find_entry(cat, name);
        const FamilyVerdict v = verify_family(*e->table, e->expected_aut->front());
        ok = ok && v.status == FamilyStatus::Verified;
        d << name << " " << to_string(v.status) << "; ";
    }
    const auto* e = find_entry(cat, "As_2^1");
    const auto bad = parse_families("family bad dim 2\nrow: a11, 0\nrow: a21, a11^3\nnonzero: a11\n").front();
    const FamilyVerdict v = verify_family(*e->table, bad);
    bool witnessed = v.status == FamilyStatus::Failed && !v.witness.empty();
    if (witnessed) witnessed = !is_automorphism(*e->table, instantiate(bad, v.witness));
    ok = ok && witnessed;
    d << "corrupted " << to_string(v.status);
    for (const auto& [k, x] : v.witness) d << " " << k << "=" << x.str();
    report(6, ok, d.str());
}

void criterion7() {
    const auto t0 = Clock::now();
    const AlgebraTable a = testsupport::fixture("As_2^1");
    bool ok = true;
    std::ostringstream d;
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const CensusResult one = census(a, p, {1});
        const CensusResult four = census(a, p, {4});
        ok = ok && one.aut_count == (p - 1) * p && one.der_count == mpz_class(p * p) &&
             four.aut_count == one.aut_count && four.der_count == one.der_count;
        d << "p=" << p << " aut " << one.aut_count << " der " << one.der_count.get_str() << "; ";
    }
    const CensusResult z1 = census(AlgebraTable(2), 2, {1}), z4 = census(AlgebraTable(2), 2, {4});
    ok = ok && z1.aut_count == 6 && z4.aut_count == 6;
    d << "zero n=2 p=2 aut " << z1.aut_count << "; ";
    const double t = seconds_since(t0);
    ok = ok && t < 5.0;
    d << "time " << t << " s";
    report(7, ok, d.str());
}

void criterion8() {
    const AuditReport r = run_audit(builtin_catalog());
    bool ok = true;
    std::size_t checked = 0;
    for (const auto& e : builtin_catalog()) {
        if (!e.table) continue;
        const std::size_t n = e.table->dim(), dim = derivation_basis(*e.table).dim();
        if (n == 2) ok = ok && dim <= 2;
        if (n == 3) ok = ok && dim >= 2 && dim <= 4;
    }
    for (const auto& rec : r.records) {
        if (rec.kind != CheckKind::Range) continue;
        const bool fixture = rec.entry.find('^') != std::string::npos;
        const bool der_summary = rec.details.rfind("derivations", 0) == 0;
        if (fixture || der_summary) {
            ++checked;
            ok = ok && rec.verdict == Verdict::Match;
        }
    }
    report(8, ok, std::to_string(checked) + " RANGE records (fixtures and derivation ranges) MATCH");
}

void criterion9() {
    std::mt19937_64 rng(99);
    bool ok = true;
    for (std::size_t i = 0; i < 200; ++i) {
        const AlgebraTable a = testsupport::random_table(rng, i);
        const std::string text = serialize_table(a);
        try {
            ok = ok && serialize_table(parse_table(text)) == text;
        } catch (const Error&) {
            ok = false;
        }
    }
    const std::pair<const char*, const char*> corpus[] = {
        {"", "1:1"},
        {"algebra A dim x\n", "1:15"},
        {"algebra A dim 2\ne1*e3 = e2\n", "2:4"},
        {"algebra A dim 2\ne1*e1 = e2\ne1*e1 = e1\n", "3:1"},
        {"algebra A dim 2\ne1*e1 = beta*e2\n", "2:9"},
        {"algebra A dim 2\ne1*e1 = e2*e2\n", "2:9"},
        {"algebra A dim 2\ne1*e1 = (e2\n", "2:12"},
        {"algebra A dim 2\ne1*e1 = 2 e2\n", "2:11"},
        {"algebra A dim 2\ne1*e1 = e2/0\n", "2:11"},
    };
    std::size_t fired = 0;
    for (auto [text, where] : corpus) {
        try {
            parse_table(text);
        } catch (const ParseError& e) {
            if (std::to_string(e.line()) + ":" + std::to_string(e.column()) == where) ++fired;
        }
    }
    ok = ok && fired == std::size(corpus);
    report(9, ok, "200 round-trips; " + std::to_string(fired) + "/" + std::to_string(std::size(corpus)) +
                      " positioned errors");
}

void criterion10() {
    const std::string a = run_audit(builtin_catalog()).jsonl;
    const std::string b = run_audit(builtin_catalog()).jsonl;
    AuditOptions threaded;
    threaded.threads = 4;
    const std::string c = run_audit(builtin_catalog(), threaded).jsonl;
    report(10, !a.empty() && a == b && a == c, std::to_string(a.size()) + " bytes, identical across runs and thread counts");
}

}  // namespace

int main() {
    const auto tables = [] {
        auto t = random_tables(100);
        for (auto& f : fixtures()) t.push_back(f);
        return t;
    }();
    criterion1();
    criterion2();
    criterion3(tables);
    criterion4();
    criterion5(tables);
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    return failures == 0 ? 0 : 1;
}
