#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidcoh/bar.hpp"
#include "braidcoh/cli.hpp"
#include "braidcoh/cup.hpp"
#include "braidcoh/duoidal.hpp"
#include "braidcoh/errors.hpp"
#include "braidcoh/expression.hpp"
#include "braidcoh/resolution.hpp"

namespace py = pybind11;
using namespace braidcoh;

namespace {

Presentation presentation(const std::string& name) {
  if (name == "jordan") return jordan_plane();
  if (name == "super-jordan") return super_jordan_plane();
  if (name.rfind("file:", 0) == 0) return load_presentation(name.substr(5));
  throw py::value_error("algebra must be 'jordan', 'super-jordan' or 'file:PATH'");
}

FreeResolution resolution(const std::string& name, const Algebra& a, int levels) {
  if (name == "jordan") return builtin_jordan(a);
  if (name == "super-jordan") return builtin_super_jordan(a, std::max(levels, 1));
  throw py::value_error("built-in resolutions exist for 'jordan' and 'super-jordan' only");
}

py::dict commutativity(const std::string& name, int p, int q, int max_degree, bool seeds) {
  Algebra a(presentation(name));
  FreeResolution r = resolution(name, a, p + q + 1);
  ComparisonOptions opts;
  opts.closed_form_seeds = seeds;
  Comparison cmp(r, opts);
  CommutativityReport rep = verify_braided_commutativity(cmp, p, q, max_degree);
  py::list rows;
  for (const auto& row : rep.rows) {
    py::dict d;
    d["p"] = row.p;
    d["q"] = row.q;
    d["generator"] = row.generator;
    d["psi"] = row.psi;
    d["phi"] = row.phi;
    d["lhs"] = to_string(row.lhs);
    d["rhs"] = to_string(row.rhs);
    d["sign"] = row.sign;
    d["pass"] = row.pass;
    rows.append(d);
  }
  py::dict out;
  out["pass"] = rep.ok;
  out["rows"] = rows;
  out["witness"] = rep.witness;
  out["seed_rejections"] = rep.seed_rejections;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hochschild cohomology of braided graded algebras";

  py::register_exception<Error>(m, "BraidcohError", PyExc_ValueError);

  m.def("normal_form", [](const std::string& algebra, const std::string& expr) {
    Algebra a(presentation(algebra));
    return a.presentation().format(parse_expression(expr, a));
  }, py::arg("algebra"), py::arg("expr"));

  m.def("act", [](const std::string& algebra, int k, const std::string& expr) {
    Algebra a(presentation(algebra));
    return a.presentation().format(a.act(k, parse_expression(expr, a)));
  }, py::arg("algebra"), py::arg("k"), py::arg("expr"), "t^k applied to an expression");

  m.def("coproduct", [](const std::string& algebra, const std::string& expr) {
    Algebra a(presentation(algebra));
    BraidedBialgebra b(a);
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const auto& [k, c] : b.coproduct(parse_expression(expr, a))) {
      std::vector<std::string> f;
      for (const auto& w : k) f.push_back(a.presentation().format_word(w));
      out.emplace_back(to_string(c), std::move(f));
    }
    return out;
  }, py::arg("algebra"), py::arg("expr"), "terms (coefficient, factors) of the coproduct");

  m.def("basis", [](const std::string& algebra, int degree) {
    Algebra a(presentation(algebra));
    std::vector<std::string> out;
    for (const auto& w : a.graded_basis(degree)) out.push_back(a.presentation().format_word(w));
    return out;
  }, py::arg("algebra"), py::arg("degree"));

  m.def("cohomology", [](const std::string& algebra, int max_h) {
    Algebra a(presentation(algebra));
    return cohomology_dimensions(resolution(algebra, a, max_h + 1), max_h);
  }, py::arg("algebra"), py::arg("max_h"), "dimensions of H^0..H^max_h with trivial coefficients");

  m.def("verify_commutativity", &commutativity, py::arg("algebra"), py::arg("p"), py::arg("q"),
        py::arg("max_degree"), py::arg("closed_form_seeds") = true);

  m.def("verify_dec", [](const std::string& algebra, int p, int q, int max_degree) {
    Algebra a(presentation(algebra));
    DecReport r = verify_dec_cocommutativity(BraidedBialgebra(a), p, q, max_degree);
    py::dict out;
    out["pass"] = r.ok();
    out["cases"] = r.cases;
    out["untwisted"] = r.untwisted_ok;
    out["twisted"] = r.twisted_ok;
    out["witness"] = r.witness;
    return out;
  }, py::arg("algebra"), py::arg("p"), py::arg("q"), py::arg("max_degree"));

  m.def("verify_coduoid", [](const std::string& algebra, int max_n, int max_degree) {
    Algebra a(presentation(algebra));
    BraidedBialgebra b(a);
    FreeResolution r = resolution(algebra, a, max_n + 1);
    CoduoidReport rep = verify_coduoid(r, b, max_n, max_degree);
    py::dict out;
    out["pass"] = rep.ok();
    out["homotopy_found"] = rep.homotopy_found;
    out["homotopy_values"] = rep.homotopy_values;
    out["witness"] = rep.witness;
    out["notes"] = rep.notes;
    return out;
  }, py::arg("algebra"), py::arg("max_n"), py::arg("max_degree"));

  m.def("validate_resolution", [](const std::string& algebra, int max_degree) {
    Algebra a(presentation(algebra));
    ResolutionReport rep = validate_resolution(resolution(algebra, a, max_degree + 1), max_degree);
    py::dict out;
    out["pass"] = rep.ok();
    out["d_squared_zero"] = rep.d_squared_zero;
    out["exact"] = rep.exact;
    out["equivariant"] = rep.equivariant;
    out["minimal"] = rep.minimal;
    out["failures"] = rep.failures;
    return out;
  }, py::arg("algebra"), py::arg("max_degree"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "runs one braidcoh command; returns (exit code, stdout, stderr)");
}
