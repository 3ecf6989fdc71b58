#include "braidcoh/cup.hpp"

#include "braidcoh/braided.hpp"
#include "braidcoh/errors.hpp"

namespace braidcoh {

Scalar Cochain::at(int id) const {
  auto it = values.find(id);
  return it == values.end() ? Scalar(0) : it->second;
}

Cochain dual_cochain(const FreeResolution& res, const std::string& label) {
  int id = res.id_of(label);
  return Cochain{res.info(id).level, {{id, Scalar(1)}}};
}

Scalar evaluate(const FreeResolution& res, const Cochain& phi, const Chain& v) {
  Scalar out(0);
  for (const auto& [id, c] : res.epsilon_collapse(v)) out += c * phi.at(id);
  return out;
}

Cochain act_on_cochain(const FreeResolution& res, int k, const Cochain& phi) {
  Cochain out{phi.level, {}};
  for (int id : res.generator_ids(phi.level)) {
    Scalar v = evaluate(res, phi, res.t_power(-k, Chain(FreeResolution::key(Word(), id, Word()))));
    if (!is_zero(v)) out.values.emplace(id, v);
  }
  return out;
}

std::string format_cochain(const FreeResolution& res, const Cochain& phi) {
  std::string out;
  for (const auto& [id, c] : phi.values) {
    if (is_zero(c)) continue;
    out += out.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    if (abs(c) != 1) out += to_string(abs(c)) + "*";
    out += res.info(id).label + "*";
  }
  return out.empty() ? "0" : out;
}

namespace {

std::map<int, std::vector<int>> ids_by_degree(const FreeResolution& res, int level) {
  std::map<int, std::vector<int>> out;
  for (int id : res.generator_ids(level)) out[res.info(id).degree].push_back(id);
  return out;
}

// Column of δ(h*) over the generators `targets`: coefficient of h in the collapsed d(w).
SparseVec coboundary_column(const FreeResolution& res, int h, const std::vector<int>& targets) {
  std::vector<SparseVec::Entry> col;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    auto coll = res.epsilon_collapse(res.info(targets[j]).differential);
    auto it = coll.find(h);
    if (it != coll.end()) col.emplace_back(static_cast<int>(j), it->second);
  }
  return SparseVec::from_unsorted(std::move(col));
}

}  // namespace

std::vector<Cochain> cohomology_basis(const FreeResolution& res, int level) {
  if (!res.finite_length() && level >= res.max_level()) {
    throw Error("cocycles in degree " + std::to_string(level) + " need generators of degree " +
                std::to_string(level + 1));
  }
  std::vector<Cochain> out;
  auto here = ids_by_degree(res, level);
  auto next = ids_by_degree(res, level + 1);
  auto prev = level > 0 ? ids_by_degree(res, level - 1) : std::map<int, std::vector<int>>{};
  for (const auto& [d, ids] : here) {
    const std::vector<int> empty;
    const auto& up = next.count(d) ? next.at(d) : empty;
    EchelonSolver cocycles;
    for (int id : ids) cocycles.add_column(coboundary_column(res, id, up));
    EchelonSolver span;
    if (prev.count(d)) {
      for (int h : prev.at(d)) span.add_column(coboundary_column(res, h, ids));
    }
    std::vector<SparseVec> kernel = cocycles.kernel();
    for (const auto& z : kernel) {
      if (!span.add_column(z)) continue;
      Cochain c{level, {}};
      for (const auto& [j, v] : z.entries()) c.values.emplace(ids[j], v);
      out.push_back(std::move(c));
    }
  }
  return out;
}

bool is_coboundary(const FreeResolution& res, const Cochain& phi, int max_degree) {
  if (phi.level == 0) return phi.values.empty();
  auto here = ids_by_degree(res, phi.level);
  auto prev = ids_by_degree(res, phi.level - 1);
  for (const auto& [d, ids] : here) {
    if (d > max_degree) continue;
    std::vector<SparseVec::Entry> target;
    for (std::size_t j = 0; j < ids.size(); ++j) {
      Scalar v = phi.at(ids[j]);
      if (!is_zero(v)) target.emplace_back(static_cast<int>(j), v);
    }
    if (target.empty()) continue;
    EchelonSolver span;
    if (prev.count(d)) {
      for (int h : prev.at(d)) span.add_column(coboundary_column(res, h, ids));
    }
    if (!span.solve(SparseVec::from_unsorted(std::move(target)))) return false;
  }
  return true;
}

namespace {

std::string repeat_x(int k) { return k == 1 ? "x" : "x^" + std::to_string(k); }
std::string y2x_label(int m) { return m == 1 ? "y2x" : "y2x^" + std::to_string(m); }

// Level-1 generator e_i with d(e_i) = x_i ⊗ 1 - 1 ⊗ x_i for each algebra generator, if all exist.
std::vector<int> standard_level_one(const FreeResolution& res) {
  const Algebra& a = res.algebra();
  std::vector<int> out(a.num_generators(), -1);
  for (int id : res.generator_ids(1)) {
    const Chain& d = res.info(id).differential;
    for (int i = 0; i < a.num_generators(); ++i) {
      Chain want;
      want.add(FreeResolution::key(Word::letter(i), 0, Word()), Scalar(1));
      want.add(FreeResolution::key(Word(), 0, Word::letter(i)), Scalar(-1));
      if (d == want) out[i] = id;
    }
  }
  for (int id : out) {
    if (id < 0) return {};
  }
  return out;
}

}  // namespace

Comparison::Comparison(const FreeResolution& res, ComparisonOptions opts) : res_(res), opts_(opts), bar_(res.algebra()) {
  const Algebra& a = res.algebra();
  f_ = std::make_unique<LiftedChainMap>(res_, bar_, [](const Slots& k) { return Chain(Slots{k[0], k[2]}); });
  if (!opts_.f_by_solver) f_->use_contraction([this](int, const Chain& z) { return bar_.contraction(z); });
  g_ = std::make_unique<LiftedChainMap>(
      bar_, res_, [](const Slots& k) { return Chain(FreeResolution::key(k.front(), 0, k.back())); }, opts_.g_lift);
  if (!opts_.closed_form_seeds) return;

  std::vector<int> level_one = standard_level_one(res_);
  const Presentation& pr = a.presentation();
  const bool jordan = res_.name() == "jordan" && pr.name == "jordan";
  const bool super = res_.name() == "super-jordan" && pr.name == "super-jordan";

  g_->set_seeder([this, level_one, super, &pr](int n, const Slots& gen) -> std::optional<Chain> {
    if (n == 1 && !level_one.empty()) {
      const Word& w = gen[1];
      Chain out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        out.add(FreeResolution::key(w.subword(0, i), level_one[w[i]], w.subword(i + 1, w.size() - i - 1)),
                Scalar(1));
      }
      return out;
    }
    if (!super || n < 2) return std::nullopt;
    const Word x = pr.parse_word("x"), xy = pr.parse_word("xy"), yy = pr.parse_word("yy"), yx = pr.parse_word("yx");
    // inner factors: all x except one at position j
    int odd = -1;
    for (int i = 1; i <= n; ++i) {
      if (gen[i] == x) continue;
      if (odd >= 0) return std::nullopt;
      odd = i - 1;
    }
    if (odd < 0) return std::nullopt;
    const Word& o = gen[odd + 1];
    if (o == xy) {
      if (odd <= n - 2) return Chain();
      return res_.term("1", repeat_x(n), "y");
    }
    if (o == yy || o == yx) {
      if (odd >= 1) return Chain();
      if (o == yy) return res_.term("1", y2x_label(n - 1), "1");
      return res_.term("y", repeat_x(n), "1");
    }
    return std::nullopt;
  });

  f_->set_seeder([this, level_one, jordan, super](int n, const Slots& gen) -> std::optional<Chain> {
    const int id = res_.id_of_key(gen);
    const std::string& label = res_.info(id).label;
    if (n == 1 && !level_one.empty()) {
      for (std::size_t i = 0; i < level_one.size(); ++i) {
        if (level_one[i] == id) return Chain(Slots{Word(), Word::letter(static_cast<int>(i)), Word()});
      }
      return std::nullopt;
    }
    if (jordan && label == "r") {
      Chain out;
      out.add(bar_generator({"y", "x"}), Scalar(1));
      out.add(bar_generator({"x", "y"}), Scalar(-1));
      out.add(bar_generator({"x", "x"}), Scalar(1, 2));
      return out;
    }
    if (!super) return std::nullopt;
    if (label == repeat_x(n)) return Chain(bar_generator(std::vector<std::string>(n, "x")));
    const int q = n - 1;
    if (label != y2x_label(q)) return std::nullopt;
    auto with = [&](std::vector<std::string> head, const std::string& mid, int tail) {
      head.push_back(mid);
      for (int i = 0; i < tail; ++i) head.push_back("x");
      return bar_generator(head);
    };
    Chain out;
    out.add(with({"y"}, "yx", q - 1), Scalar(1));
    out.add(with({"x"}, "yy", q - 1), Scalar(-1));
    out.add(with({"x"}, "yx", q - 1), Scalar(-1));
    for (int i = 0; i <= q - 2; ++i) {
      std::vector<std::string> head(2 + i, "x");
      out.add(with(head, "yy", q - 2 - i), Scalar(sign_of(i)));
      out.add(with(head, "yx", q - 2 - i), Scalar(sign_of(i)));
    }
    return out;
  });
}

Slots Comparison::bar_generator(const std::vector<std::string>& factors) const {
  const Presentation& pr = res_.algebra().presentation();
  Slots k{Word()};
  for (const auto& f : factors) {
    Word w = pr.parse_word(f);
    if (!res_.algebra().is_irreducible(w)) throw ParseError("bar factor '" + f + "' is not a normal word");
    k.push_back(w);
  }
  k.push_back(Word());
  return k;
}

std::vector<std::string> Comparison::seed_rejections() const {
  std::vector<std::string> out;
  for (const auto& s : f_->rejected_seeds()) out.push_back("f: " + s);
  for (const auto& s : g_->rejected_seeds()) out.push_back("g: " + s);
  return out;
}

namespace {

// Drops terms whose outer factors are not units; the remaining keys are bar generators.
Chain collapse_outer(const Chain& v) {
  Chain out;
  for (const auto& [k, c] : v) {
    if (k.front().empty() && k.back().empty()) out.add(k, c);
  }
  return out;
}

Slots segment(const Slots& k, std::size_t begin, std::size_t end) {
  Slots s{Word()};
  s.insert(s.end(), k.begin() + begin, k.begin() + end);
  s.push_back(Word());
  return s;
}

Scalar cup_value(Comparison& cmp, const Cochain& lead, const Cochain& trail, const Chain& bar_chain) {
  const FreeResolution& res = cmp.resolution();
  const std::size_t lq = static_cast<std::size_t>(lead.level);
  Scalar out(0);
  for (const auto& [k, c] : collapse_outer(bar_chain)) {
    const std::size_t n = k.size() - 2;
    if (n != lq + static_cast<std::size_t>(trail.level)) throw PresentationMismatch("cup: level mismatch");
    Scalar a = evaluate(res, lead, cmp.g().value(lead.level, segment(k, 1, 1 + lq)));
    if (is_zero(a)) continue;
    Scalar b = evaluate(res, trail, cmp.g().value(trail.level, segment(k, 1 + lq, 1 + n)));
    out += c * a * b;
  }
  return out;
}

template <class F>
Cochain cochain_on_generators(const FreeResolution& res, int level, int max_degree, F&& value) {
  Cochain out{level, {}};
  for (int id : res.generator_ids(level)) {
    if (res.info(id).degree > max_degree) continue;
    Scalar v = value(id);
    if (!is_zero(v)) out.values.emplace(id, v);
  }
  return out;
}

}  // namespace

Chain braid_bar_segment(const Algebra& a, int p, const Chain& bar_chain) {
  Chain out;
  for (const auto& [k, c] : bar_chain) {
    if (!k.front().empty() || !k.back().empty()) {
      throw PresentationMismatch("braid_bar_segment expects unit outer factors");
    }
    Tensor inner(Slots(k.begin() + 1, k.end() - 1));
    for (const auto& [m, d] : braid_blocks(a, inner, static_cast<std::size_t>(p))) {
      Slots s{Word()};
      s.insert(s.end(), m.begin(), m.end());
      s.push_back(Word());
      out.add(s, c * d);
    }
  }
  return out;
}

Scalar cup_on_bar(Comparison& cmp, const Cochain& psi, const Cochain& phi, const Chain& bar_chain) {
  return cup_value(cmp, phi, psi, bar_chain);
}

Cochain cup_opposite(Comparison& cmp, const Cochain& psi, const Cochain& phi, int max_degree) {
  const int n = psi.level + phi.level;
  return cochain_on_generators(cmp.resolution(), n, max_degree, [&](int id) {
    return cup_value(cmp, phi, psi, cmp.f().value(n, FreeResolution::key(Word(), id, Word())));
  });
}

Cochain cup_standard(Comparison& cmp, const Cochain& psi, const Cochain& phi, int max_degree) {
  const int n = psi.level + phi.level;
  return cochain_on_generators(cmp.resolution(), n, max_degree, [&](int id) {
    return cup_value(cmp, psi, phi, cmp.f().value(n, FreeResolution::key(Word(), id, Word())));
  });
}

Cochain cup_braided(Comparison& cmp, const Cochain& psi, const Cochain& phi, int max_degree) {
  const int n = psi.level + phi.level;
  const Algebra& a = cmp.resolution().algebra();
  return cochain_on_generators(cmp.resolution(), n, max_degree, [&](int id) {
    Chain fw = collapse_outer(cmp.f().value(n, FreeResolution::key(Word(), id, Word())));
    return cup_value(cmp, phi, psi, braid_bar_segment(a, psi.level, fw));
  });
}

CommutativityReport verify_braided_commutativity(Comparison& cmp, int p, int q, int max_degree) {
  const FreeResolution& res = cmp.resolution();
  const Algebra& a = res.algebra();
  CommutativityReport rep;
  rep.p = p;
  rep.q = q;
  rep.max_degree = max_degree;
  rep.minimal = is_minimal(res);
  const int n = p + q;
  const int sign = (p * q) % 2 == 0 ? 1 : -1;
  auto psis = cohomology_basis(res, p);
  auto phis = cohomology_basis(res, q);

  std::vector<int> gens;
  std::map<int, Chain> plain, braided;
  for (int id : res.generator_ids(n)) {
    if (res.info(id).degree > max_degree) continue;
    gens.push_back(id);
    Chain fw = collapse_outer(cmp.f().value(n, FreeResolution::key(Word(), id, Word())));
    braided.emplace(id, braid_bar_segment(a, p, fw));
    plain.emplace(id, std::move(fw));
  }
  for (const auto& psi : psis) {
    for (const auto& phi : phis) {
      Cochain diff{n, {}};
      std::vector<CommutativityRow> rows;
      for (int id : gens) {
        CommutativityRow row;
        row.p = p;
        row.q = q;
        row.generator = res.info(id).label;
        row.psi = format_cochain(res, psi);
        row.phi = format_cochain(res, phi);
        row.sign = sign;
        row.lhs = cup_value(cmp, phi, psi, braided.at(id));
        row.rhs = sign * cup_value(cmp, phi, psi, plain.at(id));
        row.pass = row.lhs == row.rhs;
        if (!row.pass) diff.values[id] = row.lhs - row.rhs;
        rows.push_back(std::move(row));
      }
      bool pair_ok = diff.values.empty() || (!rep.minimal && is_coboundary(res, diff, max_degree));
      for (auto& r : rows) {
        if (!rep.minimal) r.pass = pair_ok;
        if (!r.pass && rep.witness.empty()) {
          rep.witness = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " w=" + r.generator + " psi=" + r.psi +
                        " phi=" + r.phi + " lhs=" + to_string(r.lhs) + " rhs=" + to_string(r.rhs);
        }
        rep.rows.push_back(std::move(r));
      }
      rep.ok = rep.ok && pair_ok;
    }
  }
  rep.seed_rejections = cmp.seed_rejections();
  return rep;
}

std::vector<CupTableEntry> cup_table(Comparison& cmp, int p, int q, int max_degree, bool standard_order) {
  const FreeResolution& res = cmp.resolution();
  std::vector<CupTableEntry> out;
  for (const auto& psi : cohomology_basis(res, p)) {
    for (const auto& phi : cohomology_basis(res, q)) {
      Cochain prod = standard_order ? cup_standard(cmp, psi, phi, max_degree) : cup_opposite(cmp, psi, phi, max_degree);
      out.push_back({format_cochain(res, psi), format_cochain(res, phi), std::move(prod)});
    }
  }
  return out;
}

}  // namespace braidcoh
