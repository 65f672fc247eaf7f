#pragma once

/**
 * @file report.hpp
 * @brief Subcommands of the command-line tool and the catalog audit.
 *
 * Every command returns its exit code and output text instead of writing to
 * the terminal, so the same code backs the CLI, the tests and the Python
 * module. Exit codes: 0 success (or only documented discrepancies),
 * 1 mathematical failure, 2 parse error, 3 bad prime or infeasible size.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algaudit/catalog.hpp"
#include "algaudit/census.hpp"

namespace algaudit {

enum class CheckKind { DerDim, DerSpan, AutFamily, TangentEqDer, FfCensus, Range, Erratum };
enum class Verdict { Match, Mismatch, Skipped, Unverifiable };

std::string to_string(CheckKind k);
std::string to_string(Verdict v);

struct AuditRecord {
    std::string entry;
    CheckKind kind = CheckKind::DerDim;
    Verdict verdict = Verdict::Skipped;
    std::string reason;       ///< for SKIPPED / UNVERIFIABLE, or the known cause of a MISMATCH
    bool documented = false;  ///< MISMATCH explained by a known inconsistency
    std::string details;
};

/// One JSON object, fields in the order entry, check, verdict, reason,
/// documented, details.
std::string record_json(const AuditRecord& r);

struct AuditOptions {
    unsigned threads = 1;
    bool run_census = true;
};

struct AuditReport {
    std::vector<AuditRecord> records;
    int exit_code = 0;
    std::string text;   ///< human-readable table
    std::string jsonl;  ///< one record per line
};

/// Census prime used by the audit for a given dimension.
std::uint32_t audit_prime(std::size_t n);

AuditReport run_audit(const std::vector<CatalogEntry>& catalog, const AuditOptions& options = {});

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CommandResult cmd_check(const std::string& alg_text);

struct DerOptions {
    bool compare_pattern = false;
    /// Pattern text; when empty with compare_pattern set, the catalog pattern
    /// named like the table is used.
    std::optional<std::string> pattern_text;
};

CommandResult cmd_der(const std::string& alg_text, const DerOptions& options,
                      const std::vector<CatalogEntry>& catalog);

CommandResult cmd_autverify(const std::string& alg_text, const std::string& fam_text);

struct CensusCommandOptions {
    std::uint32_t prime = 5;
    unsigned threads = 1;
    double max_naive_log2 = kDefaultMaxNaiveLog2;
    std::optional<Rational> alpha;  ///< specialization for tables with alpha
};

CommandResult cmd_census(const std::string& alg_text, const CensusCommandOptions& options,
                         const std::vector<CatalogEntry>& catalog);

/// Human table in `out`; `records` receives the JSONL stream.
CommandResult cmd_audit(const std::vector<CatalogEntry>& catalog, const AuditOptions& options, std::string* records);

/// Matrix as "[[a, b], [c, d]]", rows first.
std::string matrix_text(const ScalarMatrix& m);

}  // namespace algaudit
