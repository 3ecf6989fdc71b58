#include "braidcoh/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>

#include "braidcoh/errors.hpp"

namespace braidcoh {

using nlohmann::json;

int Presentation::degree(const Word& w) const {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += generators[w[i]].degree;
  return d;
}

bool Presentation::less(const Word& a, const Word& b) const {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return rank[a[i]] < rank[b[i]];
  }
  return a.size() < b.size();
}

std::optional<int> Presentation::generator_id(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].name == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

Word Presentation::parse_word(std::string_view spelled) const {
  if (spelled.empty() || spelled == "1") return Word();
  std::string letters;
  std::size_t pos = 0;
  while (pos < spelled.size()) {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const auto& name = generators[i].name;
      if (name.size() > best_len && spelled.substr(pos, name.size()) == name) {
        best = static_cast<int>(i);
        best_len = name.size();
      }
    }
    if (best < 0) {
      throw ParseError("cannot split '" + std::string(spelled) + "' into generator names");
    }
    letters.push_back(static_cast<char>(best));
    pos += best_len;
  }
  return Word(letters);
}

std::string Presentation::spell(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += generators[w[i]].name;
  return out;
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += generators[w[i]].name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string Presentation::format(const AlgebraElement& e) const {
  if (e.empty()) return "0";
  std::vector<std::pair<Word, Scalar>> terms(e.begin(), e.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return less(b.first, a.first); });
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += format_word(w);
    } else {
      out += to_string(mag) + "*" + format_word(w);
    }
  }
  return out;
}

namespace {

AlgebraElement terms_of(std::initializer_list<std::pair<const char*, Scalar>> ts, const Presentation& p) {
  AlgebraElement e;
  for (const auto& [w, c] : ts) e.add(p.parse_word(w), c);
  return e;
}

Presentation two_generator_base(const std::string& name) {
  Presentation p;
  p.name = name;
  p.generators = {{"x", 1}, {"y", 1}};
  p.rank = {0, 1};
  return p;
}

}  // namespace

Presentation jordan_plane() {
  Presentation p = two_generator_base("jordan");
  Scalar half(1, 2);
  p.rules.push_back({p.parse_word("yx"), terms_of({{"xy", 1}, {"xx", -half}}, p)});
  p.t_images = {terms_of({{"x", 1}}, p), terms_of({{"x", 1}, {"y", 1}}, p)};
  p.t_inverse_images = {terms_of({{"x", 1}}, p), terms_of({{"y", 1}, {"x", -1}}, p)};
  return p;
}

Presentation super_jordan_plane() {
  Presentation p = two_generator_base("super-jordan");
  p.rules.push_back({p.parse_word("xx"), AlgebraElement()});
  p.rules.push_back({p.parse_word("yyx"), terms_of({{"xyy", 1}, {"xyx", 1}}, p)});
  p.t_images = {terms_of({{"x", -1}}, p), terms_of({{"x", 1}, {"y", -1}}, p)};
  p.t_inverse_images = {terms_of({{"x", -1}}, p), terms_of({{"x", -1}, {"y", -1}}, p)};
  return p;
}

Presentation free_presentation(const std::vector<Generator>& gens) {
  Presentation p;
  p.name = "free";
  p.generators = gens;
  p.rank.resize(gens.size());
  std::iota(p.rank.begin(), p.rank.end(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    p.t_images.emplace_back(Word::letter(static_cast<int>(i)));
    p.t_inverse_images.emplace_back(Word::letter(static_cast<int>(i)));
  }
  return p;
}

nlohmann::json element_to_json(const Presentation& p, const AlgebraElement& e) {
  json arr = json::array();
  std::vector<std::pair<Word, Scalar>> terms(e.begin(), e.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return p.less(b.first, a.first); });
  for (const auto& [w, c] : terms) arr.push_back({{"word", p.spell(w)}, {"coeff", to_string(c)}});
  return arr;
}

namespace {

Scalar coeff_from_json(const json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw SchemaError("coefficient must be a string like \"1/2\" or an integer");
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

}  // namespace

AlgebraElement element_from_json(const Presentation& p, const json& terms) {
  if (!terms.is_array()) throw SchemaError("an element must be a list of {word, coeff} terms");
  AlgebraElement e;
  for (const auto& t : terms) {
    const json& w = require(t, "word");
    if (!w.is_string()) throw SchemaError("term word must be a string");
    Scalar c = t.contains("coeff") ? coeff_from_json(t.at("coeff")) : Scalar(1);
    e.add(p.parse_word(w.get<std::string>()), c);
  }
  return e;
}

Presentation presentation_from_json(const json& doc) {
  Presentation p;
  p.name = doc.value("name", std::string("custom"));
  const json& gens = require(doc, "generators");
  if (!gens.is_array() || gens.empty()) throw SchemaError("'generators' must be a non-empty list");
  std::set<std::string> seen;
  for (const auto& g : gens) {
    const json& name = require(g, "name");
    if (!name.is_string() || name.get<std::string>().empty()) throw SchemaError("generator name must be a string");
    const json& deg = require(g, "degree");
    if (!deg.is_number_integer()) throw SchemaError("generator degree must be an integer");
    if (!seen.insert(name.get<std::string>()).second) {
      throw SchemaError("duplicate generator '" + name.get<std::string>() + "'");
    }
    p.generators.push_back({name.get<std::string>(), deg.get<int>()});
  }
  if (p.generators.size() > 200) throw SchemaError("too many generators");
  p.rank.assign(p.generators.size(), -1);
  if (doc.contains("order")) {
    const json& order = doc.at("order");
    if (!order.is_array() || order.size() != p.generators.size()) {
      throw SchemaError("'order' must list every generator exactly once");
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto id = order[i].is_string() ? p.generator_id(order[i].get<std::string>()) : std::nullopt;
      if (!id || p.rank[*id] != -1) throw SchemaError("'order' must list every generator exactly once");
      p.rank[*id] = static_cast<int>(i);
    }
  } else {
    std::iota(p.rank.begin(), p.rank.end(), 0);
  }
  if (doc.contains("rules")) {
    for (const auto& r : doc.at("rules")) {
      const json& lhs = require(r, "lhs");
      if (!lhs.is_string()) throw SchemaError("rule lhs must be a string");
      p.rules.push_back({p.parse_word(lhs.get<std::string>()), element_from_json(p, require(r, "rhs"))});
    }
  }
  auto read_action = [&](const char* key, std::vector<AlgebraElement>& out) {
    const json& act = require(doc, key);
    if (!act.is_object()) throw SchemaError(std::string("'") + key + "' must map generator names to elements");
    out.assign(p.generators.size(), AlgebraElement());
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      const auto& name = p.generators[i].name;
      if (!act.contains(name)) throw SchemaError(std::string("'") + key + "' has no entry for '" + name + "'");
      out[i] = element_from_json(p, act.at(name));
    }
  };
  read_action("t_action", p.t_images);
  read_action("t_inverse", p.t_inverse_images);
  return p;
}

json presentation_to_json(const Presentation& p) {
  json doc;
  doc["name"] = p.name;
  json gens = json::array();
  for (const auto& g : p.generators) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  doc["generators"] = gens;
  std::vector<std::string> order(p.generators.size());
  for (std::size_t i = 0; i < p.generators.size(); ++i) order[p.rank[i]] = p.generators[i].name;
  doc["order"] = order;
  json rules = json::array();
  for (const auto& r : p.rules) rules.push_back({{"lhs", p.spell(r.lhs)}, {"rhs", element_to_json(p, r.rhs)}});
  doc["rules"] = rules;
  json t = json::object(), ti = json::object();
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    t[p.generators[i].name] = element_to_json(p, p.t_images[i]);
    ti[p.generators[i].name] = element_to_json(p, p.t_inverse_images[i]);
  }
  doc["t_action"] = t;
  doc["t_inverse"] = ti;
  return doc;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open presentation file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError("invalid JSON in '" + path + "': " + e.what());
  }
  return presentation_from_json(doc);
}

}  // namespace braidcoh
