#pragma once

/**
 * @file catalog.hpp
 * @brief Text formats and the built-in catalog of tables, derivation
 * patterns and automorphism families.
 *
 * Files are line based; `#` starts a comment. A file is a sequence of
 * blocks, each opened by a header line:
 *
 *     algebra <name> dim <n>
 *     e<i>*e<j> = <linear combination of e_k>
 *
 *     pattern <name> dim <n>
 *     row: <expr>, <expr>, ...
 *
 *     family <name> dim <n> [branch <k>]
 *     row: <expr>, ...
 *     nonzero: <poly>
 *     require: <poly> = <poly>
 *     unverifiable: <reason>
 *     note: <text>
 *
 * Expressions use + - * / ^, parentheses, integers and identifiers. Tables
 * may only use the parameter `alpha`. Errors carry 1-based line and column.
 */

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algaudit/algebra.hpp"
#include "algaudit/automorphisms.hpp"

namespace algaudit {

/// Matrix of expressions linear in pattern symbols (d11, a23, ...), with
/// coefficients that may involve alpha. Each pattern owns its own symbol
/// space, so equal names in different patterns never interact.
struct SymbolicPattern {
    std::string name;
    std::size_t n = 0;
    Space space;
    ScalarMatrix entries;

    /// Names in the space other than alpha.
    std::vector<std::string> symbols() const;
};

struct CatalogEntry {
    std::string name;
    std::optional<AlgebraTable> table;
    std::optional<SymbolicPattern> expected_der;
    /// Empty optional: no family printed. Otherwise one element per branch.
    std::optional<std::vector<ParametricMatrixFamily>> expected_aut;
    std::string provenance;
};

/// All blocks of one file, in file order.
struct CatalogText {
    std::vector<AlgebraTable> tables;
    std::vector<SymbolicPattern> patterns;
    std::vector<ParametricMatrixFamily> families;
};

/// Expression over an explicit space; unknown identifiers are errors.
/// Reported positions are relative to `line` and `column`.
Scalar parse_scalar(std::string_view text, const Space& space, std::size_t line = 1, std::size_t column = 1);

/// Exactly one algebra block.
AlgebraTable parse_table(std::string_view text);
std::vector<SymbolicPattern> parse_patterns(std::string_view text);
std::vector<ParametricMatrixFamily> parse_families(std::string_view text);
/// Any mix of blocks. Empty input yields an empty result.
CatalogText parse_catalog_text(std::string_view text);

/// Canonical forms: products sorted by (i, j), one line per product.
std::string serialize_table(const AlgebraTable& a);
std::string serialize_pattern(const SymbolicPattern& p);
std::string serialize_family(const ParametricMatrixFamily& f);
std::string serialize_entry(const CatalogEntry& e);

/// Span of the matrices obtained by setting one symbol to 1 and the rest
/// to 0, in flattened coordinates. Throws InvalidInput on an entry that is
/// not linear homogeneous in the symbols.
ScalarSubspace pattern_to_subspace(const SymbolicPattern& p);

/// Symbols whose use looks typographic: a symbol dRC that never occurs at
/// its own position (R, C), or one that occurs more than once in a row.
std::vector<std::string> pattern_anomalies(const SymbolicPattern& p);

/// Built-in entries in catalog order (2-dim, then 3-dim, then 4-dim).
const std::vector<CatalogEntry>& builtin_catalog();

/// Built-in catalog merged with every *.alg, *.pat and *.fam file of
/// `extra_dir` (sorted by file name). A block for an existing name
/// replaces that component; new names are appended.
std::vector<CatalogEntry> load_catalog(const std::optional<std::filesystem::path>& extra_dir = std::nullopt);

void merge_catalog(std::vector<CatalogEntry>& entries, const CatalogText& text, const std::string& provenance);

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, std::string_view name);

/// Text of the embedded catalog files, concatenated.
std::string_view embedded_catalog_text();

}  // namespace algaudit
