#include "braidcoh/resolution.hpp"

#include <algorithm>

#include "braidcoh/errors.hpp"

namespace braidcoh {

using nlohmann::json;

FreeResolution::FreeResolution(const Algebra& a, std::string name) : a_(a), name_(std::move(name)) {
  int id = add_generator("1", 0, 0);
  gens_[id].t_action = Chain(key(Word(), id, Word()));
}

int FreeResolution::add_generator(const std::string& label, int level, int degree) {
  if (by_label_.count(label)) throw SchemaError("duplicate generator label '" + label + "'");
  if (gens_.size() >= 250) throw SchemaError("too many resolution generators");
  if (level < 0 || degree < 0) throw SchemaError("negative level or degree for '" + label + "'");
  int id = static_cast<int>(gens_.size());
  gens_.push_back({label, level, degree, Chain(), Chain()});
  by_label_.emplace(label, id);
  max_level_ = std::max(max_level_, level);
  basis_cache_.clear();
  t_inverse_.clear();
  return id;
}

int FreeResolution::id_of(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) throw SchemaError("unknown generator label '" + label + "'");
  return it->second;
}

Chain FreeResolution::term(const std::string& a, const std::string& label, const std::string& b) const {
  const Presentation& p = a_.presentation();
  Chain g(key(Word(), id_of(label), Word()));
  return act(a_.normal_form(p.parse_word(a)), g, a_.normal_form(p.parse_word(b)));
}

std::vector<int> FreeResolution::generator_ids(int level) const {
  std::vector<int> out;
  for (int i = 0; i < num_generators(); ++i) {
    if (gens_[i].level == level) out.push_back(i);
  }
  return out;
}

Chain FreeResolution::differential(int n, const Chain& v) const {
  Chain out;
  for (const auto& [k, c] : v) {
    const GeneratorInfo& g = gens_.at(id_of_key(k));
    if (g.level != n) throw PresentationMismatch("element of P_" + std::to_string(g.level) + " passed as level " + std::to_string(n));
    if (n == 0) continue;
    out.add(act(k[0], g.differential, k[2]), c);
  }
  return out;
}

Chain FreeResolution::act(const Word& left, const Chain& v, const Word& right) const {
  if (left.empty() && right.empty()) return v;
  Chain out;
  for (const auto& [k, c] : v) {
    const AlgebraElement& l = a_.multiply(left, k[0]);
    const AlgebraElement& r = a_.multiply(k[2], right);
    for (const auto& [lw, lc] : l) {
      for (const auto& [rw, rc] : r) out.add(Slots{lw, k[1], rw}, c * lc * rc);
    }
  }
  return out;
}

std::vector<Slots> FreeResolution::basis(int n, int degree) const {
  auto ck = std::make_pair(n, degree);
  if (auto it = basis_cache_.find(ck); it != basis_cache_.end()) return it->second;
  std::vector<Slots> out;
  for (int id : generator_ids(n)) {
    int rest = degree - gens_[id].degree;
    for (int i = 0; i <= rest; ++i) {
      for (const Word& a : a_.graded_basis(i)) {
        for (const Word& b : a_.graded_basis(rest - i)) out.push_back(key(a, id, b));
      }
    }
  }
  basis_cache_.emplace(ck, out);
  return out;
}

int FreeResolution::degree(const Slots& k) const {
  return a_.degree(k[0]) + gens_.at(id_of_key(k)).degree + a_.degree(k[2]);
}

Chain FreeResolution::t_act(const Chain& v) const {
  Chain out;
  for (const auto& [k, c] : v) {
    const Chain& tl = gens_.at(id_of_key(k)).t_action;
    const AlgebraElement& ta = a_.act(1, k[0]);
    const AlgebraElement& tb = a_.act(1, k[2]);
    out.add(BimoduleComplex::act(ta, tl, tb), c);
  }
  return out;
}

Chain FreeResolution::t_power(int k, const Chain& v) const {
  Chain cur = v;
  for (int i = 0; i < k; ++i) cur = t_act(cur);
  for (int i = 0; i > k; --i) {
    std::map<std::pair<int, int>, Chain> pieces;
    for (const auto& [key, c] : cur) pieces[{gens_.at(id_of_key(key)).level, degree(key)}].add(key, c);
    Chain next;
    for (const auto& [nd, part] : pieces) {
      auto it = t_inverse_.find(nd);
      if (it == t_inverse_.end()) {
        InversePiece ip;
        ip.basis = basis(nd.first, nd.second);
        for (std::size_t j = 0; j < ip.basis.size(); ++j) ip.index.emplace(ip.basis[j], static_cast<int>(j));
        for (const auto& b : ip.basis) {
          std::vector<SparseVec::Entry> col;
          for (const auto& [tk, tc] : t_act(Chain(b))) col.emplace_back(ip.index.at(tk), tc);
          ip.solver.add_column(SparseVec::from_unsorted(std::move(col)));
        }
        it = t_inverse_.emplace(nd, std::move(ip)).first;
      }
      std::vector<SparseVec::Entry> rhs;
      for (const auto& [pk, pc] : part) rhs.emplace_back(it->second.index.at(pk), pc);
      auto x = it->second.solver.solve(SparseVec::from_unsorted(std::move(rhs)));
      if (!x) throw InvalidComplex("t-action is not invertible on P_" + std::to_string(nd.first));
      for (const auto& [j, c] : x->entries()) next.add(it->second.basis[j], c);
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Slots> FreeResolution::generators(int n, int max_degree) const {
  std::vector<Slots> out;
  for (int id : generator_ids(n)) {
    if (gens_[id].degree <= max_degree) out.push_back(key(Word(), id, Word()));
  }
  return out;
}

FreeBimoduleComplex::Split FreeResolution::split(const Slots& k) const {
  return {k[0], Slots{Word(), k[1], Word()}, k[2]};
}

std::string FreeResolution::describe(const Slots& generator) const { return gens_.at(id_of_key(generator)).label; }

AlgebraElement FreeResolution::augmentation(const Chain& v) const {
  AlgebraElement out;
  for (const auto& [k, c] : v) {
    if (gens_.at(id_of_key(k)).level != 0) throw PresentationMismatch("augmentation applies to P_0 only");
    out.add(a_.multiply(k[0], k[2]), c);
  }
  return out;
}

std::map<int, Scalar> FreeResolution::epsilon_collapse(const Chain& v) const {
  std::map<int, Scalar> out;
  for (const auto& [k, c] : v) {
    if (k[0].empty() && k[2].empty()) out[id_of_key(k)] += c;
  }
  for (auto it = out.begin(); it != out.end();) it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

std::string FreeResolution::format(const Chain& v) const {
  if (v.empty()) return "0";
  const Presentation& p = a_.presentation();
  std::string out;
  for (const auto& [k, c] : v) {
    std::string coeff = to_string(abs(c));
    out += out.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    if (abs(c) != 1) out += coeff + "*";
    out += p.spell(k[0]) + "|" + gens_.at(id_of_key(k)).label + "|" + p.spell(k[2]);
  }
  return out;
}

namespace {

bool same_presentation(const Presentation& a, const Presentation& b) {
  if (a.generators.size() != b.generators.size() || a.rules.size() != b.rules.size()) return false;
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    if (a.generators[i].name != b.generators[i].name || a.generators[i].degree != b.generators[i].degree) return false;
  }
  for (std::size_t i = 0; i < a.rules.size(); ++i) {
    if (a.rules[i].lhs != b.rules[i].lhs || a.rules[i].rhs != b.rules[i].rhs) return false;
  }
  return a.t_images == b.t_images && a.rank == b.rank;
}

std::string x_power(int n) { return n == 1 ? "x" : "x^" + std::to_string(n); }
std::string y2x_power(int m) { return m == 1 ? "y2x" : "y2x^" + std::to_string(m); }

}  // namespace

FreeResolution builtin_jordan(const Algebra& a) {
  if (!same_presentation(a.presentation(), jordan_plane())) {
    throw PresentationMismatch("the built-in Jordan resolution needs the Jordan plane presentation");
  }
  FreeResolution res(a, "jordan");
  int x = res.add_generator("x", 1, 1);
  int y = res.add_generator("y", 1, 1);
  int r = res.add_generator("r", 2, 2);
  for (const char* v : {"x", "y"}) res.set_differential(res.id_of(v), res.term(v, "1", "1") - res.term("1", "1", v));
  Scalar half(1, 2);
  Chain dr = res.term("y", "x", "1") + res.term("1", "y", "x") - res.term("x", "y", "1") - res.term("1", "x", "y");
  dr.add(res.term("x", "x", "1"), half);
  dr.add(res.term("1", "x", "x"), half);
  res.set_differential(r, dr);
  res.set_t_action(x, res.term("1", "x", "1"));
  res.set_t_action(y, res.term("1", "x", "1") + res.term("1", "y", "1"));
  res.set_t_action(r, res.term("1", "r", "1"));
  res.set_finite_length(true);
  return res;
}

FreeResolution builtin_super_jordan(const Algebra& a, int n_max, bool printed_t_action) {
  if (!same_presentation(a.presentation(), super_jordan_plane())) {
    throw PresentationMismatch("the built-in super Jordan resolution needs the super Jordan plane presentation");
  }
  if (n_max < 1) throw Error("n_max must be at least 1");
  FreeResolution res(a, "super-jordan");
  res.add_generator("x", 1, 1);
  res.add_generator("y", 1, 1);
  for (int n = 2; n <= n_max; ++n) {
    res.add_generator(x_power(n), n, n);
    res.add_generator(y2x_power(n - 1), n, n + 1);
  }
  auto T = [&](const std::string& l, const std::string& g, const std::string& r) { return res.term(l, g, r); };
  for (const char* v : {"x", "y"}) res.set_differential(res.id_of(v), T(v, "1", "1") - T("1", "1", v));
  res.set_t_action(res.id_of("x"), -T("1", "x", "1"));
  res.set_t_action(res.id_of("y"), T("1", "x", "1") - T("1", "y", "1"));
  for (int level = 2; level <= n_max; ++level) {
    int n = level - 1;  // d_n : P_{n+1} -> P_n
    Scalar s = sign_of(n + 1);
    std::string xn = x_power(n), xn1 = x_power(n + 1);
    Chain dx = T("x", xn, "1");
    dx.add(T("1", xn, "x"), s);
    res.set_differential(res.id_of(xn1), dx);
    Chain dy;
    if (n == 1) {
      dy = T("yy", "x", "1") + T("y", "y", "x") + T("1", "y", "yx") - T("xy", "y", "1") - T("x", "y", "y") -
           T("1", "x", "yy") - T("xy", "x", "1") - T("x", "y", "x") - T("1", "x", "yx");
    } else {
      std::string prev = y2x_power(n - 1);
      dy = T("yy", xn, "1");
      dy.add(T("1", prev, "x"), s);
      dy -= T("x", prev, "1") + T("xy", xn, "1") + T("1", xn, "yy") + T("1", xn, "yx");
    }
    res.set_differential(res.id_of(y2x_power(n)), dy);
    // t-action on level n+1 generators
    res.set_t_action(res.id_of(xn1), sign_of(n + 1) * T("1", xn1, "1"));
    Chain ty = -T("1", xn1, "y");
    ty.add(T("x", xn1, "1") - T("y", xn1, "1"), sign_of(n));
    // The printed action has coefficient +1 here, which breaks d(t·g) = t·d(g) for even n+1.
    ty.add(T("1", y2x_power(n), "1"), printed_t_action ? Scalar(1) : sign_of(n));
    res.set_t_action(res.id_of(y2x_power(n)), ty);
  }
  return res;
}

ResolutionReport validate_resolution(const FreeResolution& res, int max_degree) {
  ResolutionReport rep;
  rep.max_degree = max_degree;
  const Algebra& a = res.algebra();
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    rep.failures.push_back(msg);
  };
  for (int id = 1; id < res.num_generators(); ++id) {
    const auto& g = res.info(id);
    std::string where = "generator " + g.label + " (level " + std::to_string(g.level) + ", degree " +
                        std::to_string(g.degree) + ")";
    for (const auto& [k, c] : g.differential) {
      if (res.degree(k) != g.degree || res.info(res.id_of_key(k)).level != g.level - 1) {
        fail(rep.graded, where + ": differential term of wrong degree or level");
        break;
      }
    }
    for (const auto& [k, c] : g.t_action) {
      if (res.degree(k) != g.degree || res.info(res.id_of_key(k)).level != g.level) {
        fail(rep.graded, where + ": t-action term of wrong degree or level");
        break;
      }
    }
    if (!rep.graded) continue;
    if (!res.epsilon_collapse(g.differential).empty()) rep.minimal = false;
    if (g.degree > max_degree) continue;
    if (g.level == 1) {
      if (!res.augmentation(g.differential).empty()) fail(rep.d_squared_zero, where + ": μ∘d != 0");
    } else if (!res.differential(g.level - 1, g.differential).empty()) {
      fail(rep.d_squared_zero, where + ": d∘d != 0");
    }
    Chain lhs = res.differential(g.level, g.t_action);
    Chain rhs = res.t_act(g.differential);
    if (lhs != rhs) fail(rep.equivariant, where + ": d(t·g) != t·d(g)");
  }
  if (!rep.graded) return rep;
  // Exactness of ... -> P_1 -> P_0 -> A -> 0 by ranks in each internal degree.
  int top = res.finite_length() ? res.max_level() : res.max_level() - 1;
  rep.exactness_checked_through_level = top;
  BoundarySolver coords(res);
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<int> ranks(res.max_level() + 2, 0);  // ranks[n] = rank of d: P_n -> P_{n-1}, ranks[0] = rank μ
    {
      std::map<Word, int> idx;
      const auto& ab = a.graded_basis(d);
      for (std::size_t i = 0; i < ab.size(); ++i) idx.emplace(ab[i], static_cast<int>(i));
      std::vector<SparseVec> cols;
      for (const auto& k : res.basis(0, d)) {
        std::vector<SparseVec::Entry> col;
        for (const auto& [w, c] : res.augmentation(Chain(k))) col.emplace_back(idx.at(w), c);
        cols.push_back(SparseVec::from_unsorted(std::move(col)));
      }
      ranks[0] = rank_of(cols);
      if (ranks[0] != static_cast<int>(ab.size())) {
        fail(rep.exact, "μ not surjective in degree " + std::to_string(d));
      }
    }
    for (int n = 1; n <= res.max_level(); ++n) {
      std::vector<SparseVec> cols;
      for (const auto& k : res.basis(n, d)) cols.push_back(coords.coordinates(n - 1, d, res.differential(n, Chain(k))));
      ranks[n] = rank_of(cols);
    }
    for (int n = 0; n <= top; ++n) {
      int dim = static_cast<int>(res.basis(n, d).size());
      int kernel = dim - ranks[n];
      int image = n + 1 <= res.max_level() ? ranks[n + 1] : 0;
      if (kernel != image) {
        fail(rep.exact, "homology at level " + std::to_string(n) + ", degree " + std::to_string(d) + ": kernel " +
                            std::to_string(kernel) + " vs image " + std::to_string(image));
      }
    }
  }
  return rep;
}

bool is_minimal(const FreeResolution& res) {
  for (int id = 1; id < res.num_generators(); ++id) {
    if (!res.epsilon_collapse(res.info(id).differential).empty()) return false;
  }
  return true;
}

GradedComplex induced_trivial_cochain(const FreeResolution& res, int max_level) {
  GradedComplex c;
  c.cohomological = true;
  std::map<std::pair<int, int>, std::vector<int>> ids;  // (level, degree) -> generator ids
  for (int id = 0; id < res.num_generators(); ++id) {
    const auto& g = res.info(id);
    if (g.level <= max_level + 1) ids[{g.level, g.degree}].push_back(id);
  }
  for (const auto& [nd, list] : ids) {
    if (nd.first > max_level) continue;
    c.dims[nd] = static_cast<int>(list.size());
    auto next = ids.find({nd.first + 1, nd.second});
    std::vector<SparseVec> cols;
    for (int id : list) {
      std::vector<SparseVec::Entry> col;
      if (next != ids.end()) {
        for (std::size_t j = 0; j < next->second.size(); ++j) {
          auto coll = res.epsilon_collapse(res.info(next->second[j]).differential);
          auto it = coll.find(id);
          if (it != coll.end()) col.emplace_back(static_cast<int>(j), it->second);
        }
      }
      cols.push_back(SparseVec::from_unsorted(std::move(col)));
    }
    c.differential[nd] = std::move(cols);
  }
  return c;
}

std::vector<int> cohomology_dimensions(const FreeResolution& res, int max_level) {
  if (!res.finite_length() && max_level >= res.max_level()) {
    throw Error("resolution is only available through level " + std::to_string(res.max_level()) +
                "; cohomology needs one level more than requested");
  }
  GradedComplex c = induced_trivial_cochain(res, max_level);
  std::vector<int> out(max_level + 1, 0);
  for (const auto& [nd, dim] : c.dims) out[nd.first] += c.homology(nd.first, nd.second);
  return out;
}

namespace {

json chain_to_json(const FreeResolution& res, const Chain& v) {
  const Presentation& p = res.algebra().presentation();
  json arr = json::array();
  for (const auto& [k, c] : v) {
    arr.push_back({{"left", p.spell(k[0])},
                   {"gen", res.info(res.id_of_key(k)).label},
                   {"right", p.spell(k[2])},
                   {"coeff", to_string(c)}});
  }
  return arr;
}

const json& field(const json& obj, const char* name, const std::string& path) {
  if (!obj.is_object() || !obj.contains(name)) throw SchemaError(path + ": missing field '" + name + "'");
  return obj.at(name);
}

Chain chain_from_json(FreeResolution& res, const json& terms, const std::string& path) {
  if (!terms.is_array()) throw SchemaError(path + ": expected a list of terms");
  Chain out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string tp = path + "[" + std::to_string(i) + "]";
    const json& t = terms[i];
    const json& gen = field(t, "gen", tp);
    if (!gen.is_string()) throw SchemaError(tp + ".gen: expected a string");
    std::string left = t.value("left", std::string("1"));
    std::string right = t.value("right", std::string("1"));
    Scalar c(1);
    if (t.contains("coeff")) {
      const json& cj = t.at("coeff");
      if (cj.is_string()) {
        c = parse_scalar(cj.get<std::string>());
      } else if (cj.is_number_integer()) {
        c = Scalar(cj.get<long>());
      } else {
        throw SchemaError(tp + ".coeff: expected a rational string");
      }
    }
    try {
      out.add(res.term(left, gen.get<std::string>(), right), c);
    } catch (const Error& e) {
      throw SchemaError(tp + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

json resolution_to_json(const FreeResolution& res) {
  json doc;
  doc["name"] = res.name();
  doc["finite"] = res.finite_length();
  json degrees = json::array();
  for (int n = 1; n <= res.max_level(); ++n) {
    json level;
    level["n"] = n;
    json gens = json::array();
    json d = json::object();
    for (int id : res.generator_ids(n)) {
      const auto& g = res.info(id);
      gens.push_back({{"label", g.label}, {"degree", g.degree}, {"t_action", chain_to_json(res, g.t_action)}});
      d[g.label] = chain_to_json(res, g.differential);
    }
    level["generators"] = gens;
    level["d"] = d;
    degrees.push_back(level);
  }
  doc["degrees"] = degrees;
  return doc;
}

void resolution_from_json(const json& doc, FreeResolution& out) {
  if (out.num_generators() != 1) throw SchemaError("target resolution is not empty");
  const json& degrees = field(doc, "degrees", "resolution");
  if (!degrees.is_array()) throw SchemaError("resolution.degrees: expected a list");
  out.set_finite_length(doc.value("finite", false));
  // First pass registers every label, second pass reads values referring to them.
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    std::string path = "degrees[" + std::to_string(i) + "]";
    const json& lv = degrees[i];
    const json& n = field(lv, "n", path);
    if (!n.is_number_integer() || n.get<int>() < 1) throw SchemaError(path + ".n: expected a positive integer");
    const json& gens = field(lv, "generators", path);
    if (!gens.is_array()) throw SchemaError(path + ".generators: expected a list");
    for (std::size_t j = 0; j < gens.size(); ++j) {
      std::string gp = path + ".generators[" + std::to_string(j) + "]";
      const json& label = field(gens[j], "label", gp);
      const json& deg = field(gens[j], "degree", gp);
      field(gens[j], "t_action", gp);
      if (!label.is_string() || !deg.is_number_integer()) throw SchemaError(gp + ": bad label or degree");
      out.add_generator(label.get<std::string>(), n.get<int>(), deg.get<int>());
    }
  }
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    std::string path = "degrees[" + std::to_string(i) + "]";
    const json& lv = degrees[i];
    const json& d = field(lv, "d", path);
    for (std::size_t j = 0; j < lv.at("generators").size(); ++j) {
      const json& g = lv.at("generators")[j];
      std::string label = g.at("label").get<std::string>();
      std::string gp = path + ".generators[" + std::to_string(j) + "]";
      out.set_t_action(out.id_of(label), chain_from_json(out, g.at("t_action"), gp + ".t_action"));
      out.set_differential(out.id_of(label), chain_from_json(out, field(d, label.c_str(), path + ".d"), path + ".d." + label));
    }
  }
  int max_deg = 0;
  for (int id = 0; id < out.num_generators(); ++id) max_deg = std::max(max_deg, out.info(id).degree);
  ResolutionReport rep = validate_resolution(out, std::min(max_deg + 1, 6));
  if (!rep.ok()) throw InvalidComplex("resolution failed validation: " + rep.failures.front());
}

}  // namespace braidcoh
