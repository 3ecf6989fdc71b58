#include "braidcoh/braided.hpp"

#include <random>

#include "braidcoh/errors.hpp"

namespace braidcoh {

Tensor braid_blocks(const Algebra& a, const Tensor& e, std::size_t p) {
  Tensor out;
  for (const auto& [key, c] : e) {
    if (key.size() < p) throw PresentationMismatch("braid_blocks: arity smaller than block size");
    int du = slots_degree(a, key, 0, p);
    Slots rotated(key.begin() + p, key.end());
    rotated.insert(rotated.end(), key.begin(), key.begin() + p);
    out.add(act_slots(a, du, rotated, 0, key.size() - p), c);
  }
  return out;
}

Tensor braid(const Algebra& a, const Tensor& e) {
  for (const auto& kv : e) {
    if (kv.first.size() != 2) throw PresentationMismatch("braid expects arity 2");
  }
  return braid_blocks(a, e, 1);
}

Tensor braid_inverse(const Algebra& a, const Tensor& e) {
  Tensor out;
  for (const auto& [key, c] : e) {
    if (key.size() != 2) throw PresentationMismatch("braid_inverse expects arity 2");
    int dw = a.degree(key[1]);
    out.add(act_slots(a, -dw, Slots{key[1], key[0]}, 1, 2), c);
  }
  return out;
}

Tensor braided_square_multiply(const Algebra& a, const Tensor& u, const Tensor& v) {
  Tensor out;
  for (const auto& [k1, c1] : u) {
    int db = a.degree(k1[1]);
    for (const auto& [k2, c2] : v) {
      const AlgebraElement& bd = a.multiply(k1[1], k2[1]);
      const AlgebraElement& tc = a.act(db, k2[0]);
      for (const auto& [w, cw] : tc) {
        const AlgebraElement& left = a.multiply(k1[0], w);
        for (const auto& [l, cl] : left) {
          for (const auto& [r, cr] : bd) out.add(Slots{l, r}, c1 * c2 * cw * cl * cr);
        }
      }
    }
  }
  return out;
}

BraidedBialgebra::BraidedBialgebra(const Algebra& a) : a_(a) {
  const Presentation& p = a.presentation();
  for (const auto& r : p.rules) {
    Tensor lhs = coproduct(r.lhs);
    Tensor rhs;
    for (const auto& [w, c] : r.rhs) rhs.add(coproduct(w), c);
    if (lhs != rhs) {
      throw NotABimonoid("coproduct does not respect the relation " + p.spell(r.lhs) +
                         ": primitive generators do not give a bialgebra");
    }
  }
}

const Tensor& BraidedBialgebra::coproduct(const Word& w) const {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  Tensor result;
  if (w.empty()) {
    result.add(Slots{Word(), Word()}, Scalar(1));
  } else if (w.size() == 1) {
    result.add(Slots{w, Word()}, Scalar(1));
    result.add(Slots{Word(), w}, Scalar(1));
  } else {
    Tensor head = coproduct(w.subword(0, w.size() - 1));
    result = braided_square_multiply(a_, head, coproduct(w.subword(w.size() - 1)));
  }
  return memo_.emplace(w, std::move(result)).first->second;
}

Tensor BraidedBialgebra::coproduct(const AlgebraElement& e) const {
  Tensor out;
  for (const auto& [w, c] : e) out.add(coproduct(w), c);
  return out;
}

namespace {

Tensor delta_slot(const BraidedBialgebra& b, const Tensor& t, std::size_t i) {
  Tensor out;
  for (const auto& [key, c] : t) {
    for (const auto& [pair, d] : b.coproduct(key[i])) {
      Slots k(key.begin(), key.begin() + i);
      k.push_back(pair[0]);
      k.push_back(pair[1]);
      k.insert(k.end(), key.begin() + i + 1, key.end());
      out.add(k, c * d);
    }
  }
  return out;
}

Tensor counit_slot(const Tensor& t, std::size_t i) {
  Tensor out;
  for (const auto& [key, c] : t) {
    if (!key[i].empty()) continue;
    Slots k = key;
    k.erase(k.begin() + i);
    out.add(k, c);
  }
  return out;
}

}  // namespace

AxiomReport BraidedBialgebra::check_bimonoid_axioms(int max_degree) const {
  AxiomReport rep;
  const Presentation& p = a_.presentation();
  auto fail = [&](const char* what, const std::string& witness) {
    if (rep.ok) {
      rep.ok = false;
      rep.failed = what;
      rep.witness = witness;
    }
  };
  for (int d = 0; d <= max_degree; ++d) {
    for (const Word& w : a_.graded_basis(d)) {
      ++rep.cases;
      Tensor dw = coproduct(w);
      if (delta_slot(*this, dw, 0) != delta_slot(*this, dw, 1)) fail("coassociativity", p.spell(w));
      if (counit_slot(dw, 0) != Tensor(Slots{w})) fail("left counit", p.spell(w));
      if (counit_slot(dw, 1) != Tensor(Slots{w})) fail("right counit", p.spell(w));
      for (int e = 0; d + e <= max_degree; ++e) {
        for (const Word& v : a_.graded_basis(e)) {
          const AlgebraElement& wv = a_.multiply(w, v);
          if (coproduct(wv) != braided_square_multiply(a_, dw, coproduct(v))) {
            fail("multiplicativity of the coproduct", p.spell(w) + " * " + p.spell(v));
          }
          if (augment(wv) != augment(AlgebraElement(w)) * augment(AlgebraElement(v))) {
            fail("multiplicativity of the counit", p.spell(w) + " * " + p.spell(v));
          }
        }
      }
    }
  }
  return rep;
}

AxiomReport check_braid_identities(const Algebra& a, int cases, int max_degree, std::uint64_t seed) {
  AxiomReport rep;
  std::mt19937_64 rng(seed);
  const Presentation& p = a.presentation();
  auto spell = [&](const Slots& s) {
    std::string out;
    for (const auto& w : s) out += (out.empty() ? "" : "|") + p.spell(w);
    return out;
  };
  auto on_slots = [&](const Tensor& t, std::size_t begin, std::size_t len, auto&& op) {
    Tensor out;
    for (const auto& [key, c] : t) {
      Slots mid(key.begin() + begin, key.begin() + begin + len);
      for (const auto& [img, d] : op(Tensor(mid))) {
        Slots k(key.begin(), key.begin() + begin);
        k.insert(k.end(), img.begin(), img.end());
        k.insert(k.end(), key.begin() + begin + len, key.end());
        out.add(k, c * d);
      }
    }
    return out;
  };
  auto c2 = [&](const Tensor& t) { return braid(a, t); };
  for (int i = 0; i < cases; ++i) {
    Slots key = random_basis_slots(a, 3, max_degree, rng);
    Tensor t(key);
    ++rep.cases;
    // braid equation
    Tensor lhs = on_slots(on_slots(on_slots(t, 0, 2, c2), 1, 2, c2), 0, 2, c2);
    Tensor rhs = on_slots(on_slots(on_slots(t, 1, 2, c2), 0, 2, c2), 1, 2, c2);
    if (lhs != rhs && rep.ok) rep = {false, rep.cases, "braid equation", spell(key)};
    // c_{U⊗V,W} = (c_{U,W} ⊗ id)(id ⊗ c_{V,W})
    Tensor h1 = braid_blocks(a, t, 2);
    Tensor h1r = on_slots(on_slots(t, 1, 2, c2), 0, 2, c2);
    if (h1 != h1r && rep.ok) rep = {false, rep.cases, "first hexagon", spell(key)};
    // c_{U,V⊗W} = (id ⊗ c_{U,W})(c_{U,V} ⊗ id)
    Tensor h2 = braid_blocks(a, t, 1);
    Tensor h2r = on_slots(on_slots(t, 0, 2, c2), 1, 2, c2);
    if (h2 != h2r && rep.ok) rep = {false, rep.cases, "second hexagon", spell(key)};
    Tensor pair(Slots{key[0], key[1]});
    if (braid_inverse(a, braid(a, pair)) != pair || braid(a, braid_inverse(a, pair)) != pair) {
      if (rep.ok) rep = {false, rep.cases, "inverse braiding", spell(key)};
    }
  }
  rep.cases = cases;
  return rep;
}

}  // namespace braidcoh
