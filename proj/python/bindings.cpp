#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "resitan/arith.hpp"
#include "resitan/cyclotomic.hpp"
#include "resitan/errors.hpp"
#include "resitan/harness.hpp"
#include "resitan/numeric.hpp"
#include "resitan/quadforms.hpp"
#include "resitan/record.hpp"
#include "resitan/residues.hpp"

namespace py = pybind11;
using namespace resitan;

namespace {

py::object to_pyint(const Integer& v) {
    const std::string s = v.get_str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

std::vector<Check> to_checks(const std::vector<std::string>& names) {
    std::vector<Check> out;
    for (const auto& n : names) {
        const auto c = parse_check(n);
        if (!c) throw InvalidInputError("unknown check: " + n);
        out.push_back(*c);
    }
    return out;
}

ReportFormat to_format(const std::string& s) {
    const auto f = parse_format(s);
    if (!f) throw InvalidInputError("unknown report format: " + s);
    return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and numeric checks of tangent products over power residues";

    auto base = py::register_exception<Error>(m, "ResitanError", PyExc_RuntimeError);
    auto invalid = py::register_exception<InvalidInputError>(m, "InvalidInputError", base.ptr());
    auto hypothesis = py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());
    py::register_exception<NotRepresentableError>(m, "NotRepresentableError", hypothesis.ptr());
    py::register_exception<BranchViolationError>(m, "BranchViolationError", hypothesis.ptr());
    py::register_exception<NonRealSymbolError>(m, "NonRealSymbolError", base.ptr());
    py::register_exception<BoundExceededError>(m, "BoundExceededError", base.ptr());
    py::register_exception<RingMismatchError>(m, "RingMismatchError", base.ptr());
    py::register_exception<PoleProximityError>(m, "PoleProximityError", base.ptr());
    (void)invalid;

    py::class_<VerificationRecord>(m, "VerificationRecord")
        .def_readonly("p", &VerificationRecord::p)
        .def_readonly("m", &VerificationRecord::m)
        .def_readonly("a", &VerificationRecord::a)
        .def_property_readonly("check", [](const VerificationRecord& r) { return std::string(check_name(r.check)); })
        .def_property_readonly("status", &status_string)
        .def_readonly("expected", &VerificationRecord::expected)
        .def_readonly("actual", &VerificationRecord::actual)
        .def_readonly("elapsed_ms", &VerificationRecord::elapsed_ms)
        .def("ok", &VerificationRecord::ok)
        .def("to_json", &to_json_line)
        .def("__repr__", &to_json_line);

    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("jacobi", &jacobi, py::arg("a"), py::arg("n"));
    m.def("primitive_root", [](std::uint64_t p) { return PrimeContext(p).primitive_root(); }, py::arg("p"));
    m.def("sqrt_mod", [](std::uint64_t a, std::uint64_t p) { return sqrt_mod(a, PrimeContext(p)); },
          py::arg("a"), py::arg("p"));

    m.def("is_mth_residue", [](std::int64_t k, std::uint64_t p, std::uint32_t mm) {
        return is_mth_residue(k, PrimeContext(p), mm);
    }, py::arg("k"), py::arg("p"), py::arg("m"));
    m.def("residue_set", [](std::uint64_t p, std::uint32_t mm) {
        return residue_set(PrimeContext(p), mm).members;
    }, py::arg("p"), py::arg("m"));
    m.def("residue_sum", [](std::uint64_t p, std::uint32_t mm) {
        const auto r = residue_sum_check(PrimeContext(p), mm);
        return py::make_tuple(r.holds, r.sum, r.expected);
    }, py::arg("p"), py::arg("m"), "Returns (holds, sum, expected).");
    m.def("symbol_sign", [](std::int64_t a, std::uint64_t p, std::uint32_t mm) {
        return symbol_sign(a, PrimeContext(p), mm).value;
    }, py::arg("a"), py::arg("p"), py::arg("m"));
    m.def("tangent_product_value", [](std::uint64_t p, std::uint32_t mm) {
        const auto v = tangent_product_value(PrimeContext(p), mm);
        return py::make_tuple(v.sign, v.exponent);
    }, py::arg("p"), py::arg("m"), "Returns (sign, exponent) of sign * 2**exponent.");
    m.def("tan_product", [](std::uint64_t p, std::uint32_t mm, std::int64_t a) {
        return tan_product(PrimeContext(p), mm, a).value();
    }, py::arg("p"), py::arg("m"), py::arg("a") = 1);

    m.def("cyclotomic_poly", [](std::uint32_t n) {
        py::list out;
        for (const auto& c : cyclotomic_poly(n)) out.append(to_pyint(c));
        return out;
    }, py::arg("n"), "Coefficients of the n-th cyclotomic polynomial, constant term first.");

    m.def("cornacchia", [](std::uint64_t p, std::uint64_t d) -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
        const auto r = cornacchia(PrimeContext(p), d);
        if (!r) return std::nullopt;
        return std::make_pair(r->x, r->y);
    }, py::arg("p"), py::arg("d"));

    m.def("verify_gi", [](std::uint64_t p, std::uint32_t mm, std::int64_t a) {
        return verify_gi(PrimeContext(p), mm, a);
    }, py::arg("p"), py::arg("m"), py::arg("a") = 1);
    m.def("verify_gi_plus", [](std::uint64_t p, std::uint32_t mm, std::int64_t a) {
        return verify_gi_plus(PrimeContext(p), mm, a);
    }, py::arg("p"), py::arg("m"), py::arg("a") = 1);
    m.def("verify_tan_cross", [](std::uint64_t p, std::uint32_t mm, std::int64_t a) {
        return verify_tan_cross(PrimeContext(p), mm, a);
    }, py::arg("p"), py::arg("m"), py::arg("a") = 1);
    m.def("verify_numeric", [](std::uint64_t p, std::uint32_t mm, std::int64_t a, double tol) {
        return verify_theorem_main_numeric(PrimeContext(p), mm, a, tol);
    }, py::arg("p"), py::arg("m"), py::arg("a") = 1, py::arg("rel_tol") = kDefaultRelTol);
    m.def("check_lemma31", [](std::uint64_t p) { return check_lemma31(PrimeContext(p)); }, py::arg("p"));
    m.def("two_residue_criterion", [](std::uint64_t p, std::uint32_t mm) {
        return two_residue_criterion(PrimeContext(p), mm);
    }, py::arg("p"), py::arg("m"));
    m.def("verify_cor11", [](std::uint64_t p, std::int64_t a) { return verify_cor11(PrimeContext(p), a); },
          py::arg("p"), py::arg("a") = 1);
    m.def("verify_cor12", [](std::uint64_t p, std::int64_t a) { return verify_cor12(PrimeContext(p), a); },
          py::arg("p"), py::arg("a") = 1);
    m.def("pmd_lemma", &pmd_lemma_identity, py::arg("n"), py::arg("x"), py::arg("rel_tol") = 1e-9);
    m.def("pmd_theorem14", [](std::uint64_t p, std::int64_t a, double tol) {
        return pmd_theorem14_numeric(PrimeContext(p), a, tol);
    }, py::arg("p"), py::arg("a") = 1, py::arg("rel_tol") = kDefaultRelTol);

    m.def("scan", [](std::uint64_t p_min, std::uint64_t p_max, std::optional<std::vector<std::uint32_t>> m_list,
                     std::optional<std::uint32_t> a_count, std::optional<std::vector<std::string>> checks,
                     double tolerance, unsigned threads) {
        ScanConfig cfg;
        cfg.p_min = p_min;
        cfg.p_max = p_max;
        cfg.m_list = std::move(m_list);
        if (a_count) cfg.a_count = *a_count;
        else cfg.a_all = true;
        if (checks) cfg.checks = to_checks(*checks);
        cfg.tolerance = tolerance;
        cfg.threads = threads;
        py::gil_scoped_release release;
        return scan(cfg);
    }, py::arg("p_min"), py::arg("p_max"), py::arg("m_list") = py::none(), py::arg("a_count") = 5,
       py::arg("checks") = py::none(), py::arg("tolerance") = 1e-6, py::arg("threads") = 0,
       "Run the verification scan. a_count=None selects every a in [1, p-1].");

    m.def("format_report", [](const std::vector<VerificationRecord>& records, const std::string& format) {
        std::ostringstream out;
        write_report(records, to_format(format), out);
        return out.str();
    }, py::arg("records"), py::arg("format") = "jsonl");
    m.def("write_report", [](const std::vector<VerificationRecord>& records, const std::string& path,
                             const std::string& format) { emit_report(records, to_format(format), path); },
          py::arg("records"), py::arg("path"), py::arg("format") = "jsonl");
    m.def("load_report", [](const std::string& path, const std::string& format) {
        return load_report(path, to_format(format));
    }, py::arg("path"), py::arg("format") = "jsonl");
}
