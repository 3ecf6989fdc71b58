#include "braidcoh/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidcoh/bar.hpp"
#include "braidcoh/braided.hpp"
#include "braidcoh/cup.hpp"
#include "braidcoh/duoidal.hpp"
#include "braidcoh/errors.hpp"
#include "braidcoh/expression.hpp"
#include "braidcoh/resolution.hpp"

namespace braidcoh {

namespace {

using ojson = nlohmann::ordered_json;

struct Flags {
  std::string algebra = "jordan";
  std::string resolution;
  std::optional<int> trunc;
  std::string seed_maps = "on";
  std::string format = "json";
  std::optional<int> max_h;
  std::optional<int> p, q;
  std::string expr;
  int k = 1;
  std::optional<std::uint64_t> rng_seed;
  int cases = 200;
  bool standard_order = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// ---- text rendering ----

std::string scalar_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_table(const ojson& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& e : v) {
    if (!e.is_object()) return false;
    for (const auto& [k, x] : e.items()) {
      if (x.is_structured()) return false;
    }
  }
  return true;
}

void render_table(const ojson& rows, const std::string& indent, std::ostream& out) {
  std::vector<std::string> cols;
  for (const auto& [k, x] : rows.front().items()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      line.push_back(r.contains(cols[i]) ? scalar_text(r.at(cols[i])) : "");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s = indent;
    for (std::size_t i = 0; i < line.size(); ++i) {
      s += line[i];
      if (i + 1 < line.size()) s += std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << s << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void render_text(const ojson& v, const std::string& indent, std::ostream& out) {
  if (!v.is_object()) {
    if (is_table(v)) {
      render_table(v, indent, out);
    } else if (v.is_array()) {
      for (const auto& e : v) {
        if (e.is_array() && std::none_of(e.begin(), e.end(), [](const ojson& x) { return x.is_structured(); })) {
          std::string line;
          for (const auto& x : e) line += (line.empty() ? "" : " ") + scalar_text(x);
          out << indent << line << "\n";
        } else if (e.is_structured()) {
          render_text(e, indent + "  ", out);
        } else {
          out << indent << scalar_text(e) << "\n";
        }
      }
    } else {
      out << indent << scalar_text(v) << "\n";
    }
    return;
  }
  std::size_t w = 0;
  for (const auto& [k, x] : v.items()) {
    if (!x.is_structured()) w = std::max(w, k.size());
  }
  for (const auto& [k, x] : v.items()) {
    if (x.is_array() && std::none_of(x.begin(), x.end(), [](const ojson& e) { return e.is_structured(); })) {
      std::string line;
      for (const auto& e : x) line += (line.empty() ? "" : " ") + scalar_text(e);
      out << indent << k << std::string(w > k.size() ? w - k.size() : 0, ' ') << "  " << line << "\n";
    } else if (x.is_structured()) {
      out << indent << k << ":\n";
      render_text(x, indent + "  ", out);
    } else {
      out << indent << k << std::string(w - k.size(), ' ') << "  " << scalar_text(x) << "\n";
    }
  }
}

// ---- inputs ----

std::string strip_file(const std::string& spec, const char* flag) {
  if (spec.rfind("file:", 0) != 0) throw UsageError(std::string(flag) + " expects file:PATH");
  return spec.substr(5);
}

int truncation_of(const Flags& f) {
  if (f.trunc) return *f.trunc;
  if (const char* env = std::getenv("BRAIDCOH_TRUNC")) {
    try {
      std::size_t used = 0;
      int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("BRAIDCOH_TRUNC must be a nonnegative integer");
  }
  return Algebra::kUnbounded;
}

// The algebra's degree window: the requested truncation, widened to hold every relation.
int window_of(const Flags& f, const Presentation& p) {
  int w = truncation_of(f);
  for (const auto& r : p.rules) w = std::max(w, p.degree(r.lhs));
  return w;
}

bool explicit_trunc(const Flags& f) { return f.trunc.has_value() || std::getenv("BRAIDCOH_TRUNC") != nullptr; }

Presentation presentation_of(const Flags& f) {
  if (f.algebra == "jordan") return jordan_plane();
  if (f.algebra == "super-jordan") return super_jordan_plane();
  return load_presentation(strip_file(f.algebra, "--algebra"));
}

std::unique_ptr<FreeResolution> resolution_of(const Flags& f, const Algebra& a, int levels) {
  if (!f.resolution.empty()) {
    std::ifstream in(strip_file(f.resolution, "--resolution"));
    if (!in) throw UsageError("cannot open resolution file " + f.resolution);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("resolution file: ") + e.what());
    }
    auto res = std::make_unique<FreeResolution>(a, doc.value("name", std::string("file")));
    resolution_from_json(doc, *res);
    return res;
  }
  if (f.algebra == "jordan") return std::make_unique<FreeResolution>(builtin_jordan(a));
  if (f.algebra == "super-jordan") return std::make_unique<FreeResolution>(builtin_super_jordan(a, std::max(levels, 1)));
  throw UsageError("--resolution file:PATH is required for algebras read from files");
}

bool seeds_on(const Flags& f) { return f.seed_maps == "on"; }

// (p, q) pairs: the given one, or all with 1 <= p, q and p+q in [2, top].
std::vector<std::pair<int, int>> pairs_of(const Flags& f, int top) {
  if (f.p.has_value() != f.q.has_value()) throw UsageError("--p and --q go together");
  if (f.p) {
    if (*f.p < 0 || *f.q < 0) throw UsageError("--p and --q must be nonnegative");
    return {{*f.p, *f.q}};
  }
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n <= top; ++n) {
    for (int p = 1; p < n; ++p) out.emplace_back(p, n - p);
  }
  return out;
}

int top_level(const Flags& f, const FreeResolution* res, int fallback) {
  if (f.max_h) return *f.max_h;
  if (res && res->finite_length()) return std::min(res->max_level(), fallback);
  return fallback;
}

ojson tensor_json(const Algebra& a, const Tensor& t) {
  const Presentation& p = a.presentation();
  ojson arr = ojson::array();
  for (const auto& [k, c] : t) {
    ojson factors = ojson::array();
    for (const auto& w : k) factors.push_back(p.format_word(w));
    arr.push_back({{"coeff", to_string(c)}, {"factors", factors}});
  }
  return arr;
}

std::string tensor_text(const Algebra& a, const Tensor& t) {
  if (t.empty()) return "0";
  const Presentation& p = a.presentation();
  std::string out;
  for (const auto& [k, c] : t) {
    out += out.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    if (abs(c) != 1) out += to_string(abs(c)) + "*";
    for (std::size_t i = 0; i < k.size(); ++i) out += (i ? " ⊗ " : "") + p.format_word(k[i]);
  }
  return out;
}

ojson axiom_json(const AxiomReport& r) {
  return {{"pass", r.ok}, {"cases", r.cases}, {"failed", r.failed}, {"witness", r.witness}};
}

// ---- subcommands; each returns its report and whether all checks passed ----

struct Outcome {
  ojson report;
  bool pass = true;
};

Outcome cmd_check_presentation(const Flags& f) {
  Presentation p = presentation_of(f);
  Algebra a(p, window_of(f, p));
  const int d = explicit_trunc(f) ? truncation_of(f) : 6;
  CompletionReport c = a.complete_overlaps(d);
  ojson amb = ojson::array();
  for (const auto& x : c.ambiguities) {
    amb.push_back({{"kind", x.kind}, {"word", p.spell(x.word)}, {"degree", x.degree}, {"resolves", x.resolves}});
  }
  Outcome o;
  o.report["algebra"] = p.name;
  o.report["max_degree"] = d;
  o.report["confluent"] = c.confluent;
  o.report["strategies_agree"] = c.strategies_agree;
  o.report["ambiguities"] = amb;
  o.pass = c.confluent && c.strategies_agree;
  try {
    BraidedBialgebra b(a);
    AxiomReport r = b.check_bimonoid_axioms(std::min(d, 5));
    o.report["bimonoid"] = axiom_json(r);
    o.pass = o.pass && r.ok;
  } catch (const NotABimonoid& e) {
    o.report["bimonoid"] = {{"pass", false}, {"cases", 0}, {"failed", "coproduct"}, {"witness", e.what()}};
    o.pass = false;
  }
  if (f.rng_seed) {
    AxiomReport r = check_braid_identities(a, f.cases, std::min(d, 4), *f.rng_seed);
    o.report["braid"] = axiom_json(r);
    o.pass = o.pass && r.ok;
  }
  o.report["pass"] = o.pass;
  return o;
}

Outcome cmd_basis(const Flags& f) {
  Presentation p = presentation_of(f);
  Algebra a(p, window_of(f, p));
  const int d = explicit_trunc(f) ? truncation_of(f) : 6;
  ojson dims = ojson::array(), words = ojson::array();
  for (int n = 0; n <= d; ++n) {
    const auto& b = a.graded_basis(n);
    dims.push_back(b.size());
    ojson row = ojson::array();
    for (const auto& w : b) row.push_back(p.format_word(w));
    words.push_back(row);
  }
  Outcome o;
  o.report = {{"algebra", p.name}, {"dims", dims}, {"basis", words}};
  return o;
}

Outcome cmd_nf(const Flags& f) {
  if (f.expr.empty()) throw UsageError("nf needs --expr");
  Presentation pres = presentation_of(f);
  Algebra a(pres, window_of(f, pres));
  Outcome o;
  o.report = a.presentation().format(parse_expression(f.expr, a));
  return o;
}

Outcome cmd_act(const Flags& f) {
  if (f.expr.empty()) throw UsageError("act needs --expr");
  Presentation pres = presentation_of(f);
  Algebra a(pres, window_of(f, pres));
  Outcome o;
  o.report = a.presentation().format(a.act(f.k, parse_expression(f.expr, a)));
  return o;
}

Outcome cmd_coproduct(const Flags& f) {
  if (f.expr.empty()) throw UsageError("coproduct needs --expr");
  Presentation pres = presentation_of(f);
  Algebra a(pres, window_of(f, pres));
  BraidedBialgebra b(a);
  Tensor t = b.coproduct(parse_expression(f.expr, a));
  Outcome o;
  o.report = {{"coproduct", tensor_text(a, t)}, {"terms", tensor_json(a, t)}};
  return o;
}

Outcome cmd_cohomology(const Flags& f) {
  const int h = f.max_h.value_or(5);
  if (h < 0) throw UsageError("--max-h must be nonnegative");
  Presentation pres = presentation_of(f);
  Algebra a(pres, window_of(f, pres));
  auto res = resolution_of(f, a, h + 1);
  Outcome o;
  o.report["H"] = cohomology_dimensions(*res, h);
  return o;
}

Outcome cmd_cup_table(const Flags& f) {
  Presentation pres = presentation_of(f);
  Algebra a(pres, window_of(f, pres));
  auto probe = resolution_of(f, a, 1);
  auto pairs = pairs_of(f, top_level(f, probe.get(), 4));
  int need = 1;
  for (auto [p, q] : pairs) need = std::max(need, p + q + 1);
  auto res = resolution_of(f, a, need);
  ComparisonOptions opts;
  opts.closed_form_seeds = seeds_on(f);
  Comparison cmp(*res, opts);
  ojson tables = ojson::array();
  for (auto [p, q] : pairs) {
    const int d = explicit_trunc(f) ? truncation_of(f) : p + q + 2;
    ojson entries = ojson::array();
    for (const auto& e : cup_table(cmp, p, q, d, f.standard_order)) {
      entries.push_back({{"psi", e.psi}, {"phi", e.phi}, {"product", format_cochain(*res, e.product)}});
    }
    tables.push_back({{"p", p}, {"q", q}, {"max_degree", d}, {"entries", entries}});
  }
  Outcome o;
  o.report = {{"order", f.standard_order ? "standard" : "opposite"}, {"tables", tables}};
  return o;
}

Outcome cmd_verify_commutativity(const Flags& f) {
  Presentation pres = presentation_of(f);
  Algebra a(pres, window_of(f, pres));
  auto probe = resolution_of(f, a, 1);
  auto pairs = pairs_of(f, top_level(f, probe.get(), 6));
  int need = 1;
  for (auto [p, q] : pairs) need = std::max(need, p + q + 1);
  auto res = resolution_of(f, a, need);
  ComparisonOptions opts;
  opts.closed_form_seeds = seeds_on(f);
  Comparison cmp(*res, opts);
  Outcome o;
  ojson rows = ojson::array(), witnesses = ojson::array();
  for (auto [p, q] : pairs) {
    const int d = explicit_trunc(f) ? truncation_of(f) : p + q + 2;
    CommutativityReport rep = verify_braided_commutativity(cmp, p, q, d);
    for (const auto& r : rep.rows) {
      rows.push_back({{"p", r.p},
                      {"q", r.q},
                      {"generator", r.generator},
                      {"psi", r.psi},
                      {"phi", r.phi},
                      {"lhs", to_string(r.lhs)},
                      {"rhs", to_string(r.rhs)},
                      {"sign", r.sign},
                      {"pass", r.pass}});
    }
    if (!rep.ok) witnesses.push_back(rep.witness);
    o.pass = o.pass && rep.ok;
  }
  o.report["pass"] = o.pass;
  o.report["minimal"] = is_minimal(*res);
  o.report["rows"] = rows;
  o.report["witnesses"] = witnesses;
  o.report["seed_rejections"] = cmp.seed_rejections();
  return o;
}

Outcome cmd_verify_dec(const Flags& f) {
  Presentation pres = presentation_of(f);
  Algebra a(pres, window_of(f, pres));
  BraidedBialgebra b(a);
  const int d = explicit_trunc(f) ? truncation_of(f) : 5;
  auto pairs = pairs_of(f, f.max_h.value_or(4));
  Outcome o;
  ojson results = ojson::array();
  for (auto [p, q] : pairs) {
    DecReport r = verify_dec_cocommutativity(b, p, q, d);
    results.push_back({{"p", p},
                       {"q", q},
                       {"max_degree", d},
                       {"cases", r.cases},
                       {"untwisted", r.untwisted_ok},
                       {"twisted", r.twisted_ok},
                       {"witness", r.witness}});
    o.pass = o.pass && r.ok();
  }
  o.report = {{"pass", o.pass}, {"results", results}};
  return o;
}

Outcome cmd_verify_coduoid(const Flags& f) {
  Presentation pres = presentation_of(f);
  Algebra a(pres, window_of(f, pres));
  BraidedBialgebra b(a);
  const int n = f.max_h.value_or(3);
  const int d = explicit_trunc(f) ? truncation_of(f) : 6;
  auto res = resolution_of(f, a, n + 1);
  CoduoidReport r = verify_coduoid(*res, b, n, d);
  Outcome o;
  o.pass = r.ok();
  o.report = {{"pass", r.ok()},
              {"max_level", n},
              {"max_degree", d},
              {"omega_equivariant", r.omega_equivariant},
              {"delta_equivariant", r.delta_equivariant},
              {"chain_maps", r.chain_maps},
              {"degree_zero_square", r.degree_zero_square},
              {"homotopy_found", r.homotopy_found},
              {"conclusive", r.conclusive},
              {"counit_omega", r.counit_omega},
              {"counit_delta", r.counit_delta},
              {"homotopy_values", r.homotopy_values},
              {"witness", r.witness},
              {"notes", r.notes}};
  return o;
}

Outcome cmd_validate_resolution(const Flags& f) {
  Presentation pres = presentation_of(f);
  Algebra a(pres, window_of(f, pres));
  const int d = explicit_trunc(f) ? truncation_of(f) : 8;
  auto res = resolution_of(f, a, f.max_h.value_or(d + 1));
  ResolutionReport r = validate_resolution(*res, d);
  Outcome o;
  o.pass = r.ok();
  o.report = {{"pass", r.ok()},
              {"resolution", res->name()},
              {"max_level", res->max_level()},
              {"max_degree", d},
              {"d_squared_zero", r.d_squared_zero},
              {"exact", r.exact},
              {"exactness_checked_through_level", r.exactness_checked_through_level},
              {"equivariant", r.equivariant},
              {"graded", r.graded},
              {"minimal", r.minimal},
              {"failures", r.failures}};
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild cohomology of braided graded algebras with exact arithmetic", "braidcoh"};
  app.require_subcommand(1);
  Flags f;

  using Handler = std::function<Outcome(const Flags&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--algebra", f.algebra, "jordan, super-jordan or file:PATH");
    sub->add_option("--resolution", f.resolution, "file:PATH with a resolution document");
    sub->add_option("--trunc", f.trunc, "degree window (default: BRAIDCOH_TRUNC)")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed-paper-maps", f.seed_maps, "closed-form comparison values as lifting seeds")
        ->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--format", f.format, "report format")->check(CLI::IsMember({"json", "text"}));
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  add("check-presentation", "confluence and bimonoid axioms", cmd_check_presentation)
      ->add_option("--rng-seed", f.rng_seed, "also run random braid identity checks");
  app.get_subcommand("check-presentation")->add_option("--cases", f.cases, "random cases")->check(CLI::PositiveNumber);
  add("basis", "normal words by degree", cmd_basis);
  add("nf", "normal form of an expression", cmd_nf)->add_option("--expr", f.expr, "expression");
  auto* act = add("act", "t^k on an expression", cmd_act);
  act->add_option("--expr", f.expr, "expression");
  act->add_option("--k", f.k, "power of t");
  add("coproduct", "coproduct of an expression", cmd_coproduct)->add_option("--expr", f.expr, "expression");
  add("cohomology", "dimensions of H^n(A, k)", cmd_cohomology)->add_option("--max-h", f.max_h, "top degree");
  auto* cup = add("cup-table", "cup products of basis classes", cmd_cup_table);
  cup->add_option("--p", f.p);
  cup->add_option("--q", f.q);
  cup->add_option("--max-h", f.max_h, "largest p+q when --p/--q are absent");
  cup->add_flag("--standard-order", f.standard_order, "usual segment order instead of the opposite one");
  auto* com = add("verify-commutativity", "graded braided commutativity of the cup product", cmd_verify_commutativity);
  com->add_option("--p", f.p);
  com->add_option("--q", f.q);
  com->add_option("--max-h", f.max_h, "largest p+q when --p/--q are absent");
  auto* dec = add("verify-dec", "strict deconcatenation identities", cmd_verify_dec);
  dec->add_option("--p", f.p);
  dec->add_option("--q", f.q);
  dec->add_option("--max-h", f.max_h, "largest p+q when --p/--q are absent");
  add("verify-coduoid", "coduoid square up to homotopy", cmd_verify_coduoid)
      ->add_option("--max-h", f.max_h, "top homological level");
  add("validate-resolution", "d^2 = 0, exactness and equivariance", cmd_validate_resolution)
      ->add_option("--max-h", f.max_h, "levels of a built-in resolution");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kExitPass : kExitUsage;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      Outcome o = handler(f);
      if (f.format == "text") {
        render_text(o.report, "", out);
      } else {
        out << o.report.dump() << "\n";
      }
      return o.pass ? kExitPass : kExitCheckFailed;
    } catch (const UsageError& e) {
      err << "braidcoh: " << e.what() << "\n";
      return kExitUsage;
    } catch (const ParseError& e) {
      err << "braidcoh: " << e.what() << "\n";
      return kExitUsage;
    } catch (const SchemaError& e) {
      err << "braidcoh: " << e.what() << "\n";
      return kExitUsage;
    } catch (const PresentationError& e) {
      err << "braidcoh: " << e.what() << "\n";
      return kExitUsage;
    } catch (const TruncationExceeded& e) {
      err << "braidcoh: " << e.what() << " (raise --trunc)\n";
      return kExitUsage;
    } catch (const Error& e) {
      err << "braidcoh: " << e.what() << "\n";
      return kExitCheckFailed;
    }
  }
  return kExitUsage;
}

}  // namespace braidcoh
