#include "conformal/closed_forms.hpp"
#include "conformal/errors.hpp"
#include "conformal/genfunc.hpp"
#include "conformal/group_gate.hpp"
#include "conformal/invariant_algebra.hpp"
#include "conformal/numeric_roots.hpp"
#include "conformal/partition.hpp"
#include "conformal/serialize.hpp"
#include "conformal/toeplitz.hpp"

#ifdef CONFORMAL_WITH_CLI
#include "commands.hpp"
#endif

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

namespace py = pybind11;
using namespace conformal;

namespace {

// Python ints are arbitrary precision; go through the decimal string.
py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json py_to_json(const py::object& o) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::vector<Factor> to_factors(const std::vector<std::pair<unsigned, unsigned>>& pairs) {
    std::vector<Factor> fs;
    for (auto [n, m] : pairs) fs.push_back({n, m});
    return fs;
}

Bindings to_bindings(const std::map<std::pair<unsigned, unsigned>, std::string>& b) {
    Bindings out;
    for (const auto& [k, v] : b) out[{k.first, k.second}] = parse_rational(v);
    return out;
}

BigCount count(unsigned n, unsigned m, unsigned s, const std::string& method) {
    if (method == "dp") return conformal_count_dp(n, m, s);
    if (method == "oracle") return conformal_count_oracle(n, m, s, default_oracle_ceiling());
    if (method == "gauss") {
        auto g = gaussian_poly(n, m);
        return s < g.size() ? g[s] : BigCount(0);
    }
    if (method == "toeplitz") return conformal_via_toeplitz(n, m, s);
    if (method == "closed") return eval_piecewise(n, m, s).value;
    throw RangeError("unknown method '" + method + "'");
}

CoeffMap coeff_map(const std::map<std::pair<unsigned, unsigned>, double>& c) {
    CoeffMap out;
    for (const auto& [k, v] : c) out[{k.first, k.second}] = v;
    if (!out.count({0, 1})) out[{0, 1}] = 1.0;
    return out;
}

}  // namespace

PYBIND11_MODULE(_conformal, m) {
    m.doc() = "Conformal partition counts and self-dual symmetric polynomials";

    auto base = py::register_exception<Error>(m, "ConformalError", PyExc_RuntimeError);
    py::register_exception<ResourceCeilingError>(m, "ResourceCeilingError", base.ptr());
    py::register_exception<InconsistencyError>(m, "InconsistencyError", base.ptr());
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<BracketError>(m, "BracketError", base.ptr());
    py::register_exception<UnknownGroupError>(m, "UnknownGroupError", PyExc_KeyError);
    py::register_exception<MismatchError>(m, "MismatchError", PyExc_ValueError);

    m.def("restricted_count", [](unsigned n, unsigned s) { return to_py(restricted_count(n, s)); },
          py::arg("n"), py::arg("s"));
    m.def("unrestricted_count", [](unsigned s) { return to_py(unrestricted_count(s)); }, py::arg("s"));
    m.def("conformal_count",
          [](unsigned n, unsigned m_, unsigned s, const std::string& method) { return to_py(count(n, m_, s, method)); },
          py::arg("n"), py::arg("m"), py::arg("s"), py::arg("method") = "dp");
    m.def("conformal_row", [](unsigned n, unsigned m_) { return to_py(conformal_row_dp(n, m_)); }, py::arg("n"),
          py::arg("m"));
    m.def("gaussian_poly", [](unsigned n, unsigned m_) { return to_py(gaussian_poly(n, m_)); }, py::arg("n"),
          py::arg("m"));
    m.def("product_gaussian",
          [](const std::vector<std::pair<unsigned, unsigned>>& pairs) { return to_py(product_gaussian(pairs)); },
          py::arg("pairs"));
    m.def("molien_series",
          [](const std::vector<unsigned>& degrees, unsigned N) { return to_py(molien_series(degrees, N)); },
          py::arg("degrees"), py::arg("N"));
    m.def("universal_d", [](unsigned k) { return to_py(universal_d(k)); }, py::arg("k"));
    m.def(
        "eval_piecewise",
        [](unsigned n, unsigned m_, unsigned s) {
            auto r = eval_piecewise(n, m_, s);
            py::dict d;
            d["value"] = to_py(r.value);
            d["regime"] = regime_name(r.regime);
            d["reflected"] = r.reflected;
            return d;
        },
        py::arg("n"), py::arg("m"), py::arg("s"));

    m.def("q_closed", [](unsigned n, unsigned m_) { return to_py(q_closed(n, m_)); }, py::arg("n"), py::arg("m"));
    m.def(
        "mu",
        [](unsigned n, unsigned m_, const std::string& kind) { return to_py(mu_closed(n, m_, parse_kind(kind))); },
        py::arg("n"), py::arg("m"), py::arg("kind"));
    m.def(
        "mu_by_count", [](unsigned n, unsigned m_, const std::string& kind) { return mu_by_count(n, m_, parse_kind(kind)); },
        py::arg("n"), py::arg("m"), py::arg("kind"));
    m.def(
        "mu_product",
        [](const std::vector<std::pair<unsigned, unsigned>>& pairs, const std::string& kind) {
            return to_py(mu_product_closed(to_factors(pairs), parse_kind(kind)));
        },
        py::arg("pairs"), py::arg("kind"));

    m.def(
        "assemble",
        [](const std::vector<std::pair<unsigned, unsigned>>& pairs, const std::string& kind, bool symmetrized,
           const std::map<std::pair<unsigned, unsigned>, std::string>& bindings) {
            return json_to_py(to_json(assemble_product(to_factors(pairs), parse_kind(kind), symmetrized, to_bindings(bindings))));
        },
        py::arg("pairs"), py::arg("kind"), py::arg("symmetrized") = false,
        py::arg("bindings") = std::map<std::pair<unsigned, unsigned>, std::string>{},
        "Polynomial as a JSON-compatible dict; binding values are rational strings like '3/4'.");
    m.def(
        "multiply",
        [](const py::object& a, const py::object& b) {
            return json_to_py(to_json(multiply(selfdual_from_json(py_to_json(a)), selfdual_from_json(py_to_json(b)))));
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "structure_ok", [](const py::object& p) { return check_structure(selfdual_from_json(py_to_json(p))).ok; },
        py::arg("poly"));
    m.def(
        "independent_coefficients",
        [](const py::object& p) { return independent_coefficients(selfdual_from_json(py_to_json(p))); }, py::arg("poly"));
    m.def(
        "to_text", [](const py::object& p) { return to_string(selfdual_from_json(py_to_json(p))); }, py::arg("poly"));
    m.def(
        "evaluate",
        [](const py::object& p, double lam, const std::vector<double>& x) {
            return evaluate(selfdual_from_json(py_to_json(p)), lam, x);
        },
        py::arg("poly"), py::arg("lam"), py::arg("x"));
    m.def(
        "transform_check",
        [](const py::object& p, const std::vector<double>& x, double lam, double tol) {
            auto r = conformal_transform_check(selfdual_from_json(py_to_json(p)), x, lam, tol);
            py::dict d;
            d["ok"] = r.ok;
            d["left"] = r.left;
            d["right"] = r.right;
            d["rel_error"] = r.rel_error;
            return d;
        },
        py::arg("poly"), py::arg("x"), py::arg("lam"), py::arg("tol") = 1e-10);

    m.def(
        "positive_root",
        [](unsigned n, unsigned m_, const std::vector<double>& x,
           const std::map<std::pair<unsigned, unsigned>, double>& coeffs, std::optional<std::uint64_t> seed) {
            CoeffMap C = seed ? random_coefficients(n, m_, *seed) : coeff_map(coeffs);
            auto r = positive_root(n, m_, C, Point{x});
            py::dict d;
            d["lambda"] = r.lambda;
            d["residual"] = r.residual;
            d["sign_changes"] = r.sign_changes;
            d["iterations"] = r.iterations;
            return d;
        },
        py::arg("n"), py::arg("m"), py::arg("x"),
        py::arg("coeffs") = std::map<std::pair<unsigned, unsigned>, double>{}, py::arg("seed") = py::none());
    m.def("bounds_basic", [](const std::vector<double>& x) { return bounds_basic(Point{x}); }, py::arg("x"));
    m.def("bounds_enhanced", [](const std::vector<double>& x) { return bounds_enhanced(Point{x}); }, py::arg("x"));
    m.def(
        "pairing_condition", [](const std::vector<double>& x, double tol) { return pairing_condition_check(Point{x}, tol); },
        py::arg("x"), py::arg("tol") = 1e-9);

    m.def(
        "classify",
        [](const std::string& name) {
            auto e = catalog_entry(name);
            auto c = classify(e);
            py::dict d;
            d["group"] = c.name;
            d["degrees"] = c.degrees;
            d["dual_degrees"] = e.dual_degrees;
            d["raw_duality"] = c.raw_duality;
            d["dual_duality"] = c.dual_duality;
            d["two_root"] = c.two_root ? py::cast(*c.two_root) : py::none();
            d["computed"] = verdict_name(c.computed);
            d["expected"] = verdict_name(c.expected);
            return d;
        },
        py::arg("name"));
    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& e : builtin_catalog()) names.push_back(e.group.name);
        return names;
    });
    m.def(
        "degree_duality", [](const std::vector<unsigned>& d) { return degree_duality_check({"", d}); },
        py::arg("degrees"));

#ifdef CONFORMAL_WITH_CLI
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line front end in-process; returns (exit_code, stdout, stderr).");
#endif
}
