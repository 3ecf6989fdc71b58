#pragma once

#include <cstddef>
#include <vector>

#include "braidcoh/algebra.hpp"

namespace braidcoh {

// Degree of slots [begin, end).
int slots_degree(const Algebra& a, const Slots& s, std::size_t begin, std::size_t end);
inline int slots_degree(const Algebra& a, const Slots& s) { return slots_degree(a, s, 0, s.size()); }

Tensor as_tensor(const AlgebraElement& e);
Tensor tensor_product(const Tensor& u, const Tensor& v);
Tensor tensor_of(const std::vector<AlgebraElement>& factors);

// Replaces slot i of every key by f(slot), where f returns an AlgebraElement.
template <class F>
Tensor map_slot(const Tensor& t, std::size_t i, F&& f) {
  Tensor out;
  for (const auto& [key, c] : t) {
    const auto& img = f(key[i]);
    for (const auto& [w, d] : img) {
      Slots k = key;
      k[i] = w;
      out.add(k, c * d);
    }
  }
  return out;
}

// t^k on every slot in [begin, end).
Tensor act_slots(const Algebra& a, int k, const Slots& key, std::size_t begin, std::size_t end);
Tensor act_slots(const Algebra& a, int k, const Tensor& t);

// Multiplies slot i into slot i+1 and removes slot i.
Tensor merge_slots(const Algebra& a, const Slots& key, std::size_t i);
Tensor merge_slots(const Algebra& a, const Tensor& t, std::size_t i);

// Every slot reduced to normal form.
Tensor normalize(const Algebra& a, const Tensor& t);

// Random element of the tensor power with words of degree <= max_degree, for property tests.
template <class Rng>
Slots random_basis_slots(const Algebra& a, std::size_t arity, int max_degree, Rng& rng) {
  Slots key;
  for (std::size_t i = 0; i < arity; ++i) {
    int d = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
    const auto& b = a.graded_basis(d);
    key.push_back(b[rng() % b.size()]);
  }
  return key;
}

}  // namespace braidcoh
