#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "algaudit/errors.hpp"
#include "algaudit/report.hpp"

using namespace algaudit;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emit(const CommandResult& r, const std::string& file = {}) {
    std::cout << r.out;
    if (!r.err.empty()) std::cerr << (file.empty() ? "" : file + ": ") << r.err;
    return r.exit_code;
}

std::optional<std::filesystem::path> extra_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("ALGAUDIT_EXTRA_CATALOG"); env && *env) return std::filesystem::path(env);
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Derivations and automorphisms of low-dimensional associative algebras"};
    app.require_subcommand(1);
    std::string extra;
    app.add_option("--extra-catalog", extra, "Directory of extra .alg/.pat/.fam files (or ALGAUDIT_EXTRA_CATALOG)");

    std::string alg_file, fam_file, pattern_file, records_file, alpha_text;
    CensusCommandOptions copts;
    AuditOptions aopts;

    auto* check = app.add_subcommand("check", "Check associativity of a table");
    check->add_option("table", alg_file, "Table file (.alg)")->required();

    auto* der = app.add_subcommand("der", "Derivation algebra of a table");
    der->add_option("table", alg_file, "Table file (.alg)")->required();
    der->add_option("--pattern", pattern_file, "Compare with a pattern file, or the catalog pattern when no file is given")
        ->expected(0, 1);

    auto* autv = app.add_subcommand("autverify", "Verify automorphism families symbolically");
    autv->add_option("table", alg_file, "Table file (.alg)")->required();
    autv->add_option("families", fam_file, "Family file (.fam)")->required();

    auto* cen = app.add_subcommand("census", "Count automorphisms and derivations over F_p");
    cen->add_option("table", alg_file, "Table file (.alg)")->required();
    cen->add_option("--prime", copts.prime, "Prime in {2,3,5,7,11,13}");
    cen->add_option("--threads", copts.threads, "Worker threads")->check(CLI::PositiveNumber);
    cen->add_option("--max-naive", copts.max_naive_log2, "Largest log2 of the search space");
    cen->add_option("--alpha", alpha_text, "Rational value for alpha");

    auto* aud = app.add_subcommand("audit", "Audit the catalog");
    aud->add_option("--threads", aopts.threads, "Worker threads")->check(CLI::PositiveNumber);
    aud->add_option("--records", records_file, "Write JSONL records to this file");
    aud->add_flag("!--no-census", aopts.run_census, "Skip the finite-field census");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        const auto catalog = load_catalog(extra_dir(extra));
        if (*check) return emit(cmd_check(read_file(alg_file)), alg_file);
        if (*der) {
            DerOptions o;
            o.compare_pattern = der->count("--pattern") > 0;
            if (!pattern_file.empty()) o.pattern_text = read_file(pattern_file);
            return emit(cmd_der(read_file(alg_file), o, catalog), alg_file);
        }
        if (*autv) return emit(cmd_autverify(read_file(alg_file), read_file(fam_file)), alg_file);
        if (*cen) {
            if (!alpha_text.empty()) copts.alpha = Rational::parse(alpha_text);
            return emit(cmd_census(read_file(alg_file), copts, catalog), alg_file);
        }
        if (*aud) {
            std::string records;
            CommandResult r = cmd_audit(catalog, aopts, records_file.empty() ? nullptr : &records);
            if (!records_file.empty()) {
                std::ofstream out(records_file, std::ios::binary);
                out << records;
                if (!out) throw InvalidInput("cannot write " + records_file);
            }
            return emit(r);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
