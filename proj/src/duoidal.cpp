#include "braidcoh/duoidal.hpp"

#include <functional>

#include "braidcoh/bar.hpp"
#include "braidcoh/errors.hpp"

namespace braidcoh {

int interchange_graded_sign(int n, int k) { return (n * k) % 2 == 0 ? 1 : -1; }

namespace {

// Appends `tail` to every key of `acc`, multiplying the last slot of the key into the first slot of `tail`.
Chain glue(const Algebra& a, const Chain& acc, const Slots& tail, const Scalar& c) {
  Chain out;
  for (const auto& [k, ck] : acc) {
    for (const auto& [w, cw] : a.multiply(k.back(), tail.front())) {
      Slots s(k.begin(), k.end() - 1);
      s.push_back(w);
      s.insert(s.end(), tail.begin() + 1, tail.end());
      out.add(s, ck * cw * c);
    }
  }
  return out;
}

int key_level(const FreeResolution& res, const Slots& key, std::size_t begin, std::size_t end) {
  int l = 0;
  for (std::size_t i = begin + 1; i < end; i += 2) l += res.info(key[i][0]).level;
  return l;
}

int key_degree(const FreeResolution& res, const Slots& key, std::size_t begin, std::size_t end) {
  int d = 0;
  for (std::size_t i = begin; i < end; ++i) {
    d += (i - begin) % 2 == 0 ? res.algebra().degree(key[i]) : res.info(key[i][0]).degree;
  }
  return d;
}

// Diagonal t on one segmented key: t(a_0) t(v_1) t(a_1) ... with t(v_i) from the resolution.
Chain segmented_t(const FreeResolution& res, const Slots& key) {
  const Algebra& a = res.algebra();
  Chain acc;
  for (const auto& [w, c] : a.act(1, key[0])) acc.add(Slots{w}, c);
  for (std::size_t i = 1; i < key.size(); i += 2) {
    const Chain& tv = res.info(key[i][0]).t_action;
    const AlgebraElement& ta = a.act(1, key[i + 1]);
    Chain next;
    for (const auto& [tk, tc] : tv) {
      Chain step = glue(a, acc, Slots{tk[0], tk[1], tk[2]}, tc);
      for (const auto& [w, c] : ta) next.add(glue(a, step, Slots{w}, c));
    }
    acc = std::move(next);
  }
  return acc;
}

Chain segmented_t_power(const FreeResolution& res, int k, const Chain& v) {
  Chain cur = v;
  for (int i = 0; i < k; ++i) {
    Chain next;
    for (const auto& [key, c] : cur) next.add(segmented_t(res, key), c);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

// ---- SegmentedComplex ----

SegmentedComplex::SegmentedComplex(const FreeResolution& res, int factors) : res_(res), k_(factors) {
  if (factors < 1) throw InvalidComplex("a segmented complex needs at least one factor");
}

int SegmentedComplex::degree(const Slots& key) const { return key_degree(res_, key, 0, key.size()); }

int SegmentedComplex::level(const Slots& key) const { return key_level(res_, key, 0, key.size()); }

Chain SegmentedComplex::differential(int, const Chain& v) const {
  const Algebra& a = res_.algebra();
  Chain out;
  for (const auto& [key, c] : v) {
    int sign = 1;
    for (int i = 1; i <= k_; ++i) {
      const auto& info = res_.info(key[2 * i - 1][0]);
      if (info.level > 0) {
        Slots head(key.begin(), key.begin() + 2 * i - 1);
        Slots tail(key.begin() + 2 * i, key.end());
        Chain acc(head);
        for (const auto& [dk, dc] : info.differential) {
          Chain step = glue(a, acc, Slots{dk[0], dk[1], dk[2]}, dc);
          out.add(glue(a, step, tail, c * sign));
        }
      }
      if (info.level % 2) sign = -sign;
    }
  }
  return out;
}

Chain SegmentedComplex::act(const Word& left, const Chain& v, const Word& right) const {
  const Algebra& a = res_.algebra();
  Chain out;
  for (const auto& [key, c] : v) {
    for (const auto& [wl, cl] : a.multiply(left, key.front())) {
      for (const auto& [wr, cr] : a.multiply(key.back(), right)) {
        Slots s = key;
        s.front() = wl;
        s.back() = wr;
        out.add(s, c * cl * cr);
      }
    }
  }
  return out;
}

namespace {

// Label tuples of k generators with levels summing to n and degrees summing to <= max_degree.
std::vector<std::vector<int>> label_tuples(const FreeResolution& res, int k, int n, int max_degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left_level, int left_degree) {
    if (static_cast<int>(cur.size()) == k) {
      if (left_level == 0) out.push_back(cur);
      return;
    }
    for (int id = 0; id < res.num_generators(); ++id) {
      const auto& g = res.info(id);
      if (g.level > left_level || g.degree > left_degree) continue;
      cur.push_back(id);
      rec(left_level - g.level, left_degree - g.degree);
      cur.pop_back();
    }
  };
  rec(n, max_degree);
  return out;
}

// All ways to fill `slots` word positions with total degree exactly `degree`.
void fill_words(const Algebra& a, std::size_t slots, int degree, const std::function<void(const std::vector<Word>&)>& emit) {
  std::vector<Word> cur(slots);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == slots) {
      for (const auto& w : a.graded_basis(left)) {
        cur[i] = w;
        emit(cur);
      }
      return;
    }
    for (int d = 0; d <= left; ++d) {
      for (const auto& w : a.graded_basis(d)) {
        cur[i] = w;
        rec(i + 1, left - d);
      }
    }
  };
  if (slots == 0) {
    if (degree == 0) emit(cur);
    return;
  }
  rec(0, degree);
}

}  // namespace

std::vector<Slots> SegmentedComplex::basis(int n, int degree) const {
  auto key = std::make_pair(n, degree);
  if (auto it = basis_cache_.find(key); it != basis_cache_.end()) return it->second;
  std::vector<Slots> out;
  for (const auto& labels : label_tuples(res_, k_, n, degree)) {
    int ld = 0;
    for (int id : labels) ld += res_.info(id).degree;
    fill_words(res_.algebra(), static_cast<std::size_t>(k_ + 1), degree - ld, [&](const std::vector<Word>& ws) {
      Slots s;
      for (int i = 0; i < k_; ++i) {
        s.push_back(ws[i]);
        s.push_back(Word::letter(labels[i]));
      }
      s.push_back(ws[k_]);
      out.push_back(std::move(s));
    });
  }
  basis_cache_.emplace(key, out);
  return out;
}

std::vector<Slots> SegmentedComplex::generators(int n, int max_degree) const {
  std::vector<Slots> out;
  for (const auto& labels : label_tuples(res_, k_, n, max_degree)) {
    int ld = 0;
    for (int id : labels) ld += res_.info(id).degree;
    for (int d = 0; d <= max_degree - ld; ++d) {
      fill_words(res_.algebra(), static_cast<std::size_t>(k_ - 1), d, [&](const std::vector<Word>& ws) {
        Slots s{Word()};
        for (int i = 0; i < k_; ++i) {
          s.push_back(Word::letter(labels[i]));
          s.push_back(i + 1 < k_ ? ws[i] : Word());
        }
        out.push_back(std::move(s));
      });
    }
  }
  return out;
}

FreeBimoduleComplex::Split SegmentedComplex::split(const Slots& key) const {
  Split s{key.front(), key, key.back()};
  s.generator.front() = Word();
  s.generator.back() = Word();
  return s;
}

std::string SegmentedComplex::describe(const Slots& generator) const {
  const Presentation& p = res_.algebra().presentation();
  std::string out;
  for (std::size_t i = 0; i < generator.size(); ++i) {
    out += i ? "|" : "";
    out += i % 2 ? res_.info(generator[i][0]).label : p.spell(generator[i]);
  }
  return out;
}

Chain SegmentedComplex::t_act(const Chain& v) const {
  Chain out;
  for (const auto& [key, c] : v) out.add(segmented_t(res_, key), c);
  return out;
}

Chain SegmentedComplex::tensor_over_A(const Algebra& a, const Chain& x, const Chain& y) {
  Chain out;
  for (const auto& [ky, cy] : y) out.add(glue(a, x, ky, cy));
  return out;
}

// ---- OdotComplex ----

OdotComplex::OdotComplex(const BimoduleComplex& m, const BimoduleComplex& n, const BraidedBialgebra& b)
    : m_(m), n_(n), b_(b) {
  if (m.key_arity() < 0 || n.key_arity() < 0) throw InvalidComplex("⊙ needs complexes with fixed key arity");
  if (!m.has_t_action() || !n.has_t_action()) throw InvalidComplex("⊙ needs t-actions on both factors");
  split_ = static_cast<std::size_t>(m.key_arity());
}

std::pair<Slots, Slots> OdotComplex::split_key(const Slots& key) const {
  return {Slots(key.begin(), key.begin() + split_), Slots(key.begin() + split_, key.end())};
}

Slots OdotComplex::join(const Slots& x, const Slots& y) {
  Slots s = x;
  s.insert(s.end(), y.begin(), y.end());
  return s;
}

Chain outer_product(const Chain& x, const Chain& y) { return tensor_product(x, y); }

int OdotComplex::degree(const Slots& key) const {
  auto [l, r] = split_key(key);
  return m_.degree(l) + n_.degree(r);
}

int OdotComplex::level(const Slots& key) const {
  auto [l, r] = split_key(key);
  return m_.level(l) + n_.level(r);
}

Chain OdotComplex::differential(int, const Chain& v) const {
  Chain out;
  for (const auto& [key, c] : v) {
    auto [l, r] = split_key(key);
    const int ll = m_.level(l), lr = n_.level(r);
    if (ll > 0) out.add(outer_product(m_.differential(ll, Chain(l)), Chain(r)), c);
    if (lr > 0) out.add(outer_product(Chain(l), n_.differential(lr, Chain(r))), c * (ll % 2 ? -1 : 1));
  }
  return out;
}

Chain OdotComplex::act(const Word& left, const Chain& v, const Word& right) const {
  const Algebra& a = b_.algebra();
  Chain cur = v;
  if (!left.empty()) {
    Chain next;
    for (const auto& [key, c] : cur) {
      auto [l, r] = split_key(key);
      for (const auto& [dk, dc] : b_.coproduct(left)) {
        Chain tl = m_.t_power_nonneg(a.degree(dk[1]), Chain(l));
        next.add(outer_product(m_.act(dk[0], tl, Word()), n_.act(dk[1], Chain(r), Word())), c * dc);
      }
    }
    cur = std::move(next);
  }
  if (!right.empty()) {
    Chain next;
    for (const auto& [key, c] : cur) {
      auto [l, r] = split_key(key);
      const int shift = n_.degree(r);
      for (const auto& [dk, dc] : b_.coproduct(right)) {
        AlgebraElement tb = a.act(shift, dk[0]);
        Chain ml = m_.act(a.unit(), Chain(l), tb);
        next.add(outer_product(ml, n_.act(Word(), Chain(r), dk[1])), c * dc);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Slots> OdotComplex::basis(int n, int degree) const {
  auto key = std::make_pair(n, degree);
  if (auto it = basis_cache_.find(key); it != basis_cache_.end()) return it->second;
  std::vector<Slots> out;
  for (int i = 0; i <= n; ++i) {
    for (int d = 0; d <= degree; ++d) {
      auto lb = m_.basis(i, d);
      if (lb.empty()) continue;
      auto rb = n_.basis(n - i, degree - d);
      for (const auto& x : lb) {
        for (const auto& y : rb) out.push_back(join(x, y));
      }
    }
  }
  basis_cache_.emplace(key, out);
  return out;
}

Chain OdotComplex::t_act(const Chain& v) const {
  Chain out;
  for (const auto& [key, c] : v) {
    auto [l, r] = split_key(key);
    out.add(outer_product(m_.t_act(Chain(l)), n_.t_act(Chain(r))), c);
  }
  return out;
}

// ---- ζ ----

Chain zeta(const Algebra& a, const FreeResolution& res, const Chain& rep, const std::vector<int>& arities) {
  if (arities.size() != 4) throw InvalidComplex("ζ needs the arities of four factors");
  Chain out;
  for (const auto& [key, c] : rep) {
    std::size_t pos = 0;
    std::vector<Slots> part;
    for (int ar : arities) {
      part.emplace_back(key.begin() + pos, key.begin() + pos + ar);
      pos += static_cast<std::size_t>(ar);
    }
    if (pos != key.size()) throw InvalidComplex("ζ: key arity does not match");
    const Slots& n = part[1];
    const Slots& k = part[2];
    const int sign = interchange_graded_sign(key_level(res, n, 0, n.size()), key_level(res, k, 0, k.size()));
    Chain tk = segmented_t_power(res, key_degree(res, n, 0, n.size()), Chain(k));
    Chain left = SegmentedComplex::tensor_over_A(a, Chain(part[0]), tk);
    Chain right = SegmentedComplex::tensor_over_A(a, Chain(part[1]), Chain(part[3]));
    out.add(outer_product(left, right), c * sign);
  }
  return out;
}

// ---- TensorOverA ----

TensorOverA::TensorOverA(const BimoduleComplex& m, int mi, const BimoduleComplex& n, int nj, int degree) {
  const Algebra& a = m.algebra();
  for (int d = 0; d <= degree; ++d) {
    for (const auto& x : m.basis(mi, d)) {
      for (const auto& y : n.basis(nj, degree - d)) basis_.push_back(OdotComplex::join(x, y));
    }
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
  auto coords = [&](const Chain& v) {
    std::vector<SparseVec::Entry> e;
    for (const auto& [k, c] : v) e.emplace_back(index_.at(k), c);
    return SparseVec::from_unsorted(std::move(e));
  };
  for (int d = 0; d <= degree; ++d) {
    for (const auto& x : m.basis(mi, d)) {
      for (int e = 1; d + e <= degree; ++e) {
        for (const auto& w : a.graded_basis(e)) {
          Chain xa = m.act(Word(), Chain(x), w);
          for (const auto& y : n.basis(nj, degree - d - e)) {
            Chain rel = outer_product(xa, Chain(y)) - outer_product(Chain(x), n.act(w, Chain(y), Word()));
            relations_.add_column(coords(rel));
          }
        }
      }
    }
  }
}

SparseVec TensorOverA::project(const Chain& x) const {
  std::vector<SparseVec::Entry> e;
  for (const auto& [k, c] : x) {
    auto it = index_.find(k);
    if (it == index_.end()) throw InvalidComplex("element outside the tensor piece");
    e.emplace_back(it->second, c);
  }
  return relations_.reduce(SparseVec::from_unsorted(std::move(e)));
}

// ---- Coduoid ----

namespace {

std::string check_failure(const std::string& what, const ChainMapCheck& c) {
  return what + " is not a chain map at " + c.witness;
}

}  // namespace

bool check_degree_zero_square(const BraidedBialgebra& b, int max_degree, std::string* witness) {
  const Algebra& a = b.algebra();
  // ζ on (m⊗n)⊗(k⊗l) in (A⊙A)⊗(A⊙A), then ⊗_A by multiplication
  auto zeta_a = [&](const Tensor& rep) {
    Tensor out;
    for (const auto& [k, c] : rep) {
      for (const auto& [tk, ct] : a.act(a.degree(k[1]), k[2])) {
        for (const auto& [l, cl] : a.multiply(k[0], tk)) {
          for (const auto& [r, cr] : a.multiply(k[1], k[3])) out.add(Slots{l, r}, c * ct * cl * cr);
        }
      }
    }
    return out;
  };
  // right ⊙-action of a word on A⊙A
  auto act_right = [&](const Tensor& v, const Word& w) {
    Tensor out;
    for (const auto& [k, c] : v) {
      for (const auto& [dk, dc] : b.coproduct(w)) {
        for (const auto& [tw, ct] : a.act(a.degree(k[1]), dk[0])) {
          for (const auto& [l, cl] : a.multiply(k[0], tw)) {
            for (const auto& [r, cr] : a.multiply(k[1], dk[1])) out.add(Slots{l, r}, c * dc * ct * cl * cr);
          }
        }
      }
    }
    return out;
  };
  auto act_left = [&](const Word& w, const Tensor& v) {
    Tensor out;
    for (const auto& [k, c] : v) {
      for (const auto& [dk, dc] : b.coproduct(w)) {
        for (const auto& [tm, ct] : a.act(a.degree(dk[1]), k[0])) {
          for (const auto& [l, cl] : a.multiply(dk[0], tm)) {
            for (const auto& [r, cr] : a.multiply(dk[1], k[1])) out.add(Slots{l, r}, c * dc * ct * cl * cr);
          }
        }
      }
    }
    return out;
  };
  const Tensor one(Slots{Word(), Word()});
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& w : a.graded_basis(d)) {
      const Tensor& route2 = b.coproduct(w);  // (ω⊙ω)∘Δ at the A level: a ↦ Σ (a'⊗_A 1)⊙(a''⊗_A 1)
      // a ⊗_A 1 and 1 ⊗_A a, then Δ ⊗_A Δ
      Tensor rep1 = tensor_product(act_right(one, w), one);
      Tensor rep2 = tensor_product(one, act_left(w, one));
      if (zeta_a(rep1) != route2 || zeta_a(rep2) != route2) {
        if (witness) *witness = "degree-0 square fails on " + a.presentation().spell(w);
        return false;
      }
    }
  }
  return true;
}

bool check_bar_deconcatenation(const Algebra& a, int max_n, int max_degree, std::string* witness) {
  BarComplex bar(a);
  // Elements of B ⊗_A B: split point p -> keys a_0..a_p | m | b_1..b_{q+1}
  using Split = std::map<int, Chain>;
  auto omega_key = [&](const Slots& k, const Scalar& c, Split& out) {
    const int n = static_cast<int>(k.size()) - 2;
    for (int p = 0; p <= n; ++p) {
      Slots s(k.begin(), k.begin() + p + 1);
      s.push_back(Word());
      s.insert(s.end(), k.begin() + p + 1, k.end());
      out[p].add(s, c);
    }
  };
  auto d_split = [&](const Split& x) {
    Split out;
    for (const auto& [p, v] : x) {
      for (const auto& [k, c] : v) {
        Slots lx(k.begin(), k.begin() + p + 1);
        lx.push_back(Word());
        Slots ry(k.begin() + p + 1, k.end());
        const int q = static_cast<int>(ry.size()) - 2;
        if (p > 0) {
          for (const auto& [dk, dc] : bar.differential(p, Chain(lx))) out[p - 1].add(glue(a, Chain(dk), ry, c * dc));
        }
        if (q > 0) {
          Chain right = bar.differential(q, Chain(ry));
          Chain left(lx);
          for (const auto& [dk, dc] : right) out[p].add(glue(a, left, dk, c * dc * (p % 2 ? -1 : 1)));
        }
      }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
  };
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& g : bar.generators(n, max_degree)) {
      Split w;
      omega_key(g, Scalar(1), w);
      Split lhs = d_split(w);
      Split rhs;
      for (const auto& [k, c] : bar.differential(n, Chain(g))) omega_key(k, c, rhs);
      for (auto it = rhs.begin(); it != rhs.end();) it = it->second.empty() ? rhs.erase(it) : std::next(it);
      if (lhs != rhs) {
        if (witness) *witness = "d∘ω != ω∘d on " + bar.describe(g);
        return false;
      }
    }
  }
  return true;
}

CoduoidReport verify_coduoid(const FreeResolution& res, const BraidedBialgebra& b, int max_n, int max_degree) {
  const Algebra& a = res.algebra();
  if (&b.algebra() != &a) throw PresentationMismatch("bialgebra and resolution use different algebras");
  CoduoidReport rep;
  rep.max_n = max_n;
  rep.max_degree = max_degree;

  SegmentedComplex pp(res, 2);  // P ⊗_A P
  OdotComplex po(res, res, b);  // P ⊙ P
  OdotComplex q(pp, pp, b);     // (P ⊗_A P) ⊙ (P ⊗_A P)
  const Word e0 = Word::letter(0);

  LiftedChainMap omega(res, pp, [&](const Slots&) { return Chain(Slots{Word(), e0, Word(), e0, Word()}); });
  LiftedChainMap delta(res, po, [&](const Slots&) { return Chain(Slots{Word(), e0, Word(), Word(), e0, Word()}); });
  std::string why;
  if (!lift_equivariant(omega, max_n, max_degree, &why)) {
    rep.omega_equivariant = false;
    rep.notes.push_back("ω: " + why + "; plain lift used above it");
  }
  if (!lift_equivariant(delta, max_n, max_degree, &why)) {
    rep.delta_equivariant = false;
    rep.notes.push_back("δ: " + why + "; plain lift used above it");
  }

  FunctionChainMap around_omega(res, q, [&](int n, const Slots& g) {
    Chain out;
    for (const auto& [k, c] : omega.value(n, g)) {
      Slots x(k.begin(), k.begin() + 3);
      Slots y{Word(), k[3], k[4]};
      Chain dx = delta.apply(res.level(x), Chain(x));
      Chain dy = delta.apply(res.level(y), Chain(y));
      out.add(zeta(a, res, outer_product(dx, dy), {3, 3, 3, 3}), c);
    }
    return out;
  });
  FunctionChainMap around_delta(res, q, [&](int n, const Slots& g) {
    Chain out;
    for (const auto& [k, c] : delta.value(n, g)) {
      auto [l, r] = po.split_key(k);
      out.add(outer_product(omega.apply(res.level(l), Chain(l)), omega.apply(res.level(r), Chain(r))), c);
    }
    return out;
  });

  for (const auto* m : {&around_omega, &around_delta}) {
    ChainMapCheck chk = check_chain_map(*m, max_n, max_degree);
    if (!chk.ok) {
      rep.chain_maps = false;
      if (rep.witness.empty()) rep.witness = check_failure(m == &around_omega ? "ζ∘(δ⊗δ)∘ω" : "(ω⊙ω)∘δ", chk);
    }
  }
  // The two composites agree after augmentation, so the search starts at level 0.
  HomotopyResult h = find_homotopy(around_omega, around_delta, max_n, max_degree);
  rep.homotopy_found = h.found;
  rep.conclusive = h.conclusive;
  rep.homotopy_values = static_cast<int>(h.values.size());
  if (!h.found && rep.witness.empty()) rep.witness = "no homotopy at " + h.witness;

  std::string w0;
  rep.degree_zero_square = check_degree_zero_square(b, max_degree, &w0);
  if (!rep.degree_zero_square && rep.witness.empty()) rep.witness = w0;

  // counit laws
  FunctionChainMap id(res, res, [](int, const Slots& g) { return Chain(g); });
  FunctionChainMap mu_left(res, res, [&](int n, const Slots& g) {
    Chain out;
    for (const auto& [k, c] : omega.value(n, g)) {
      if (k[1] != e0) continue;
      for (const auto& [w, cw] : a.multiply(k[0], k[2])) out.add(Slots{w, k[3], k[4]}, c * cw);
    }
    return out;
  });
  FunctionChainMap mu_right(res, res, [&](int n, const Slots& g) {
    Chain out;
    for (const auto& [k, c] : omega.value(n, g)) {
      if (k[3] != e0) continue;
      for (const auto& [w, cw] : a.multiply(k[2], k[4])) out.add(Slots{k[0], k[1], w}, c * cw);
    }
    return out;
  });
  FunctionChainMap eps_left(res, res, [&](int n, const Slots& g) {
    Chain out;
    for (const auto& [k, c] : delta.value(n, g)) {
      if (k[1] == e0 && k[0].empty() && k[2].empty()) out.add(Slots{k[3], k[4], k[5]}, c);
    }
    return out;
  });
  FunctionChainMap eps_right(res, res, [&](int n, const Slots& g) {
    Chain out;
    for (const auto& [k, c] : delta.value(n, g)) {
      if (k[4] == e0 && k[3].empty() && k[5].empty()) out.add(Slots{k[0], k[1], k[2]}, c);
    }
    return out;
  });
  rep.counit_omega = find_homotopy(mu_left, id, max_n, max_degree).found &&
                     find_homotopy(mu_right, id, max_n, max_degree).found;
  rep.counit_delta = find_homotopy(eps_left, id, max_n, max_degree).found &&
                     find_homotopy(eps_right, id, max_n, max_degree).found;
  if (!rep.counit_omega) rep.notes.push_back("counit law for ω not witnessed");
  if (!rep.counit_delta) rep.notes.push_back("counit law for δ not witnessed");
  return rep;
}

}  // namespace braidcoh
