#include "braidcoh/bar.hpp"

#include <functional>

#include "braidcoh/errors.hpp"

namespace braidcoh {

namespace {

std::size_t arity_of(const Tensor& e) { return e.empty() ? 0 : e.begin()->first.size(); }

Slots erase_range(const Slots& k, std::size_t begin, std::size_t end) {
  Slots out;
  out.reserve(k.size() - (end - begin));
  out.insert(out.end(), k.begin(), k.begin() + begin);
  out.insert(out.end(), k.begin() + end, k.end());
  return out;
}

bool all_units(const Slots& k, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (!k[i].empty()) return false;
  }
  return true;
}

std::string spell_slots(const Algebra& a, const Slots& k) {
  std::string out;
  for (std::size_t i = 0; i < k.size(); ++i) out += (i ? "|" : "") + a.presentation().spell(k[i]);
  return out;
}

}  // namespace

Tensor face(const Algebra& a, int i, const Tensor& e) {
  Tensor out;
  for (const auto& [k, c] : e) {
    const int n = static_cast<int>(k.size());
    if (i < 0 || i > n) throw InvalidComplex("face index out of range");
    if (i == 0 || i == n) {
      std::size_t pos = i == 0 ? 0 : static_cast<std::size_t>(n - 1);
      if (k[pos].empty()) out.add(erase_range(k, pos, pos + 1), c);
    } else {
      out.add(merge_slots(a, k, static_cast<std::size_t>(i - 1)), c);
    }
  }
  return out;
}

Tensor degeneracy(int j, const Tensor& e) {
  Tensor out;
  for (const auto& [k, c] : e) {
    Slots s = k;
    s.insert(s.begin() + j, Word());
    out.add(s, c);
  }
  return out;
}

Tensor simplicial_differential(const Algebra& a, const Tensor& e) {
  Tensor out;
  const int n = static_cast<int>(arity_of(e));
  for (int i = 0; i <= n; ++i) out.add(face(a, i, e), sign_of(i));
  return out;
}

Tensor face_pairs(const Algebra& a, int i, const Tensor& e) {
  Tensor out;
  for (const auto& [k, c] : e) {
    const int n = static_cast<int>(k.size() / 2);
    if (i == 0 || i == n) {
      std::size_t pos = i == 0 ? 0 : static_cast<std::size_t>(2 * n - 2);
      if (k[pos].empty() && k[pos + 1].empty()) out.add(erase_range(k, pos, pos + 2), c);
      continue;
    }
    const std::size_t j = static_cast<std::size_t>(2 * (i - 1));
    Tensor lhs(Slots{k[j], k[j + 1]});
    Tensor rhs(Slots{k[j + 2], k[j + 3]});
    for (const auto& [m, d] : braided_square_multiply(a, lhs, rhs)) {
      Slots s = erase_range(k, j, j + 2);
      s[j] = m[0];
      s[j + 1] = m[1];
      out.add(s, c * d);
    }
  }
  return out;
}

Tensor face_product(const Algebra& a, int i, const Tensor& e) {
  Tensor out;
  for (const auto& [k, c] : e) {
    const std::size_t n = k.size() / 2;
    Tensor left(Slots(k.begin(), k.begin() + n));
    Tensor right(Slots(k.begin() + n, k.end()));
    out.add(tensor_product(face(a, i, left), face(a, i, right)), c);
  }
  return out;
}

Tensor simplicial_coproduct(const BraidedBialgebra& b, const Tensor& e) {
  Tensor out;
  for (const auto& [k, c] : e) {
    Tensor acc(Slots{});
    for (const auto& w : k) acc = tensor_product(acc, b.coproduct(w));
    out.add(acc, c);
  }
  return out;
}

Tensor g_map(const Algebra& a, const Tensor& e) {
  Tensor out;
  for (const auto& [k, c] : e) {
    const std::size_t n = k.size() / 2;
    Tensor acc(Slots{});
    int shift = 0;
    for (std::size_t i = 0; i < n; ++i) {
      acc = tensor_product(acc, as_tensor(a.act(shift, k[2 * i])));
      shift += a.degree(k[2 * i + 1]);
    }
    Slots right;
    for (std::size_t i = 0; i < n; ++i) right.push_back(k[2 * i + 1]);
    out.add(tensor_product(acc, Tensor(right)), c);
  }
  return out;
}

Bitensor dec(int p, int q, const Tensor& e) {
  for (const auto& [k, c] : e) {
    if (static_cast<int>(k.size()) != p + q) throw PresentationMismatch("dec: arity is not p+q");
  }
  return Bitensor{p, e};
}

Bitensor alexander_whitney(const Algebra&, int p, int q, const Tensor& e) {
  Bitensor out{p, {}};
  for (const auto& [k, c] : e) {
    const std::size_t n = k.size() / 2;
    if (static_cast<int>(n) != p + q) throw PresentationMismatch("Alexander-Whitney: arity is not p+q");
    // left strand: keep a_1..a_p, counit on a_{p+1}..a_n; right strand: counit on b_1..b_p
    if (!all_units(k, p, n) || !all_units(k, n, n + p)) continue;
    Slots s(k.begin(), k.begin() + p);
    s.insert(s.end(), k.begin() + n + p, k.end());
    out.data.add(s, c);
  }
  return out;
}

Bitensor alexander_whitney_twisted(const Algebra&, int p, int q, const Tensor& e) {
  Bitensor out{p, {}};
  const Scalar sign(sign_of(p * q));
  for (const auto& [k, c] : e) {
    const std::size_t n = k.size() / 2;
    if (static_cast<int>(n) != p + q) throw PresentationMismatch("Alexander-Whitney: arity is not p+q");
    if (!all_units(k, 0, q) || !all_units(k, n + q, 2 * n)) continue;
    Slots s(k.begin() + q, k.begin() + n);
    s.insert(s.end(), k.begin() + n, k.begin() + n + q);
    out.data.add(s, sign * c);
  }
  return out;
}

std::map<int, Tensor> total_differential(const Algebra& a, const Bitensor& x) {
  std::map<int, Tensor> out;
  for (const auto& [k, c] : x.data) {
    const std::size_t p = static_cast<std::size_t>(x.p);
    Tensor left(Slots(k.begin(), k.begin() + p));
    Tensor right(Slots(k.begin() + p, k.end()));
    if (p > 0) out[x.p - 1].add(tensor_product(simplicial_differential(a, left), right), c);
    if (k.size() > p) out[x.p].add(tensor_product(left, simplicial_differential(a, right)), c * sign_of(x.p));
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

DecReport verify_dec_cocommutativity(const BraidedBialgebra& b, int p, int q, int max_degree) {
  const Algebra& a = b.algebra();
  DecReport rep;
  rep.p = p;
  rep.q = q;
  rep.max_degree = max_degree;
  const int n = p + q;
  const Scalar sign(sign_of(p * q));
  Slots key(n);
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == n) {
      ++rep.cases;
      Tensor e(key);
      Tensor img = g_map(a, simplicial_coproduct(b, e));
      if (rep.untwisted_ok && alexander_whitney(a, p, q, img) != dec(p, q, e)) {
        rep.untwisted_ok = false;
        if (rep.witness.empty()) rep.witness = "AW on " + spell_slots(a, key);
      }
      // first q factors braided past the last p
      Bitensor want{p, braid_blocks(a, e, static_cast<std::size_t>(q))};
      want.data *= sign;
      if (rep.twisted_ok && alexander_whitney_twisted(a, p, q, img) != want) {
        rep.twisted_ok = false;
        if (rep.witness.empty()) rep.witness = "twisted AW on " + spell_slots(a, key);
      }
      return;
    }
    for (int d = 0; d <= budget; ++d) {
      for (const auto& w : a.graded_basis(d)) {
        key[i] = w;
        rec(i + 1, budget - d);
      }
    }
  };
  rec(0, max_degree);
  return rep;
}

Chain BarComplex::differential(int n, const Chain& v) const {
  Chain out;
  if (n == 0) return out;
  for (const auto& [k, c] : v) {
    for (int i = 0; i <= n; ++i) out.add(merge_slots(a_, k, static_cast<std::size_t>(i)), c * sign_of(i));
  }
  return out;
}

Chain BarComplex::act(const Word& left, const Chain& v, const Word& right) const {
  Chain out = v;
  if (!left.empty()) {
    out = map_slot(out, 0, [&](const Word& w) -> const AlgebraElement& { return a_.multiply(left, w); });
  }
  if (!right.empty()) {
    Chain tmp;
    for (const auto& [k, c] : out) {
      const std::size_t last = k.size() - 1;
      for (const auto& [w, d] : a_.multiply(k[last], right)) {
        Slots s = k;
        s[last] = w;
        tmp.add(s, c * d);
      }
    }
    out = std::move(tmp);
  }
  return out;
}

std::vector<Slots> BarComplex::generators_of_degree(int n, int degree) const {
  std::vector<Slots> out;
  Slots key(static_cast<std::size_t>(n) + 2);
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == n + 1) {
      if (budget == 0) out.push_back(key);
      return;
    }
    const int remaining = n - i;  // slots after this one, each needing degree >= 1
    for (int d = 1; d <= budget - remaining; ++d) {
      for (const auto& w : a_.graded_basis(d)) {
        key[i] = w;
        rec(i + 1, budget - d);
      }
    }
  };
  rec(1, degree);
  return out;
}

std::vector<Slots> BarComplex::generators(int n, int max_degree) const {
  std::vector<Slots> out;
  for (int d = n; d <= max_degree; ++d) {
    auto g = generators_of_degree(n, d);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

std::vector<Slots> BarComplex::basis(int n, int degree) const {
  std::vector<Slots> out;
  for (int inner = n; inner <= degree; ++inner) {
    auto gens = generators_of_degree(n, inner);
    for (int l = 0; l <= degree - inner; ++l) {
      const int r = degree - inner - l;
      for (const auto& wl : a_.graded_basis(l)) {
        for (const auto& wr : a_.graded_basis(r)) {
          for (const auto& g : gens) {
            Slots k = g;
            k.front() = wl;
            k.back() = wr;
            out.push_back(std::move(k));
          }
        }
      }
    }
  }
  return out;
}

FreeBimoduleComplex::Split BarComplex::split(const Slots& key) const {
  Split s;
  s.left = key.front();
  s.right = key.back();
  s.generator = key;
  s.generator.front() = Word();
  s.generator.back() = Word();
  return s;
}

Chain BarComplex::contraction(const Chain& v) const {
  Chain out;
  for (const auto& [k, c] : v) {
    if (k.front().empty()) continue;
    Slots s;
    s.reserve(k.size() + 1);
    s.push_back(Word());
    s.insert(s.end(), k.begin(), k.end());
    out.add(s, c);
  }
  return out;
}

Chain BarComplex::normalize(const Chain& v) {
  Chain out;
  for (const auto& [k, c] : v) {
    bool unit_inner = false;
    for (std::size_t i = 1; i + 1 < k.size(); ++i) unit_inner = unit_inner || k[i].empty();
    if (!unit_inner) out.add(k, c);
  }
  return out;
}

}  // namespace braidcoh
