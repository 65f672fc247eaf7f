#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "algaudit/derivations.hpp"
#include "algaudit/errors.hpp"
#include "algaudit/report.hpp"

namespace py = pybind11;
using namespace algaudit;

namespace {

py::list matrix_rows(const ScalarMatrix& m) {
    py::list rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        py::list row;
        for (std::size_t c = 0; c < m.cols(); ++c) row.append(m(r, c).str());
        rows.append(row);
    }
    return rows;
}

py::tuple result(const CommandResult& r) { return py::make_tuple(r.exit_code, r.out, r.err); }

py::dict record_dict(const AuditRecord& r) {
    py::dict d;
    d["entry"] = r.entry;
    d["check"] = to_string(r.kind);
    d["verdict"] = to_string(r.verdict);
    d["reason"] = r.reason;
    d["documented"] = r.documented;
    d["details"] = r.details;
    return d;
}

}  // namespace

PYBIND11_MODULE(algaudit, m) {
    m.doc() = "Derivations and automorphisms of associative algebras given by structure constants.";

    static py::exception<Error> error(m, "AlgauditError");
    static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(parse_error.ptr(), e.what());
        } catch (const Error& e) {
            PyErr_SetString(error.ptr(), e.what());
        }
    });

    m.def("canonical_table", [](const std::string& text) { return serialize_table(parse_table(text)); },
          "Canonical text of a table.");
    m.def("is_associative", [](const std::string& text) { return check_associativity(parse_table(text)).empty(); });

    m.def(
        "derivations",
        [](const std::string& text) {
            py::list out;
            for (const auto& d : derivation_basis(parse_table(text)).mats) out.append(matrix_rows(d));
            return out;
        },
        "Basis of Der(A); each matrix is a list of rows of strings.");
    m.def("der_dim", [](const std::string& text) { return derivation_basis(parse_table(text)).dim(); });
    m.def("tangent_dim", [](const std::string& text) { return tangent_dim(parse_table(text)); });

    m.def(
        "verify_families",
        [](const std::string& table, const std::string& families) {
            const AlgebraTable a = parse_table(table);
            py::list out;
            for (const auto& f : parse_families(families)) {
                const FamilyVerdict v = verify_family(a, f);
                py::dict d;
                d["name"] = f.name;
                d["branch"] = f.branch;
                d["status"] = to_string(v.status);
                d["reason"] = v.reason;
                py::dict w;
                for (const auto& [k, x] : v.witness) w[py::str(k)] = x.str();
                d["witness"] = w;
                out.append(d);
            }
            return out;
        },
        py::arg("table"), py::arg("families"));

    m.def(
        "census",
        [](const std::string& text, std::uint32_t p, unsigned threads) {
            CensusResult r;
            {
                py::gil_scoped_release release;
                r = census(parse_table(text), p, {threads, kDefaultMaxNaiveLog2});
            }
            py::dict d;
            d["p"] = r.p;
            d["aut_count"] = r.aut_count;
            d["der_dim"] = r.der_dim;
            d["der_count"] = py::int_(py::str(r.der_count.get_str()));
            d["pruned"] = r.pruned;
            d["warnings"] = r.warnings;
            return d;
        },
        py::arg("table"), py::arg("p") = 5, py::arg("threads") = 1);

    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& e : builtin_catalog()) names.push_back(e.name);
        return names;
    });

    m.def(
        "audit",
        [](unsigned threads, bool run_census) {
            AuditOptions o;
            o.threads = threads;
            o.run_census = run_census;
            AuditReport r;
            {
                py::gil_scoped_release release;
                r = run_audit(builtin_catalog(), o);
            }
            py::list records;
            for (const auto& rec : r.records) records.append(record_dict(rec));
            return py::make_tuple(r.exit_code, records, r.jsonl);
        },
        py::arg("threads") = 1, py::arg("census") = true,
        "Returns (exit_code, records, jsonl).");

    m.def("cmd_check", [](const std::string& text) { return result(cmd_check(text)); });
    m.def(
        "cmd_der",
        [](const std::string& text, bool compare, std::optional<std::string> pattern) {
            DerOptions o;
            o.compare_pattern = compare || pattern.has_value();
            o.pattern_text = std::move(pattern);
            return result(cmd_der(text, o, builtin_catalog()));
        },
        py::arg("table"), py::arg("compare_pattern") = false, py::arg("pattern") = py::none());
    m.def("cmd_autverify", [](const std::string& t, const std::string& f) { return result(cmd_autverify(t, f)); });
}
