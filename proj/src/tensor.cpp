#include "braidcoh/tensor.hpp"

namespace braidcoh {

int slots_degree(const Algebra& a, const Slots& s, std::size_t begin, std::size_t end) {
  int d = 0;
  for (std::size_t i = begin; i < end; ++i) d += a.degree(s[i]);
  return d;
}

Tensor as_tensor(const AlgebraElement& e) {
  Tensor out;
  for (const auto& [w, c] : e) out.add(Slots{w}, c);
  return out;
}

Tensor tensor_product(const Tensor& u, const Tensor& v) {
  Tensor out;
  for (const auto& [k1, c1] : u) {
    for (const auto& [k2, c2] : v) {
      Slots k = k1;
      k.insert(k.end(), k2.begin(), k2.end());
      out.add(k, c1 * c2);
    }
  }
  return out;
}

Tensor tensor_of(const std::vector<AlgebraElement>& factors) {
  Tensor out(Slots{});
  for (const auto& f : factors) out = tensor_product(out, as_tensor(f));
  return out;
}

Tensor act_slots(const Algebra& a, int k, const Slots& key, std::size_t begin, std::size_t end) {
  Tensor out(key);
  if (k == 0) return out;
  for (std::size_t i = begin; i < end; ++i) {
    out = map_slot(out, i, [&](const Word& w) -> const AlgebraElement& { return a.act(k, w); });
  }
  return out;
}

Tensor act_slots(const Algebra& a, int k, const Tensor& t) {
  Tensor out;
  for (const auto& [key, c] : t) out.add(act_slots(a, k, key, 0, key.size()), c);
  return out;
}

Tensor merge_slots(const Algebra& a, const Slots& key, std::size_t i) {
  Tensor out;
  const AlgebraElement& prod = a.multiply(key[i], key[i + 1]);
  for (const auto& [w, c] : prod) {
    Slots k;
    k.reserve(key.size() - 1);
    k.insert(k.end(), key.begin(), key.begin() + i);
    k.push_back(w);
    k.insert(k.end(), key.begin() + i + 2, key.end());
    out.add(k, c);
  }
  return out;
}

Tensor merge_slots(const Algebra& a, const Tensor& t, std::size_t i) {
  Tensor out;
  for (const auto& [key, c] : t) out.add(merge_slots(a, key, i), c);
  return out;
}

Tensor normalize(const Algebra& a, const Tensor& t) {
  Tensor out = t;
  std::size_t arity = t.empty() ? 0 : t.begin()->first.size();
  for (std::size_t i = 0; i < arity; ++i) {
    out = map_slot(out, i, [&](const Word& w) -> const AlgebraElement& { return a.normal_form(w); });
  }
  return out;
}

}  // namespace braidcoh
