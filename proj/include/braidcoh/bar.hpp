#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "braidcoh/braided.hpp"
#include "braidcoh/complex.hpp"

namespace braidcoh {

// ---- The simplicial object S(A), S_n = A^{⊗n} ----

// ∂_i : S_n -> S_{n-1}, 0 <= i <= n. ∂_0 = ε ⊗ id, ∂_n = id ⊗ ε, otherwise multiply factors i and i+1.
Tensor face(const Algebra& a, int i, const Tensor& e);
// s_j : S_n -> S_{n+1}, inserts the unit at position j.
Tensor degeneracy(int j, const Tensor& e);
// Σ (-1)^i ∂_i
Tensor simplicial_differential(const Algebra& a, const Tensor& e);

// Faces of S(A ⊗ A): slots are pairs (a_1, b_1, ..., a_n, b_n); inner faces use the braided product.
Tensor face_pairs(const Algebra& a, int i, const Tensor& e);
// Faces of S(A) × S(A): slots (a_1..a_n, b_1..b_n), ∂_i ⊗ ∂_i.
Tensor face_product(const Algebra& a, int i, const Tensor& e);

// S_n(Δ): (a_1..a_n) -> Σ (a_1', a_1'', ..., a_n', a_n'').
Tensor simplicial_coproduct(const BraidedBialgebra& b, const Tensor& e);
// g: S(A ⊗ A) -> S(A) × S(A), a_i ⊗ b_i strands separated; a_i picks up t^{|b_1|+...+|b_{i-1}|}.
Tensor g_map(const Algebra& a, const Tensor& e);

// S_p ⊗ S_q summand, stored as a single tensor of arity p+q with its split point.
struct Bitensor {
  int p = 0;
  Tensor data;
  bool operator==(const Bitensor&) const = default;
};

// dec_{p,q}: deconcatenation component, S_{p+q} -> S_p ⊗ S_q.
Bitensor dec(int p, int q, const Tensor& e);
// AW_{p,q}: first p factors of the left strand, last q of the right; ε on the rest.
Bitensor alexander_whitney(const Algebra& a, int p, int q, const Tensor& e);
// (-1)^{pq}: last p factors of the left strand, first q of the right.
Bitensor alexander_whitney_twisted(const Algebra& a, int p, int q, const Tensor& e);
// δ ⊗ id + (-1)^p id ⊗ δ, returned by split point.
std::map<int, Tensor> total_differential(const Algebra& a, const Bitensor& x);

struct DecReport {
  int p = 0, q = 0, max_degree = 0;
  int cases = 0;
  bool untwisted_ok = true;  // AW ∘ g ∘ S(Δ) = dec
  bool twisted_ok = true;    // AW̄ ∘ g ∘ S(Δ) = (-1)^{pq} c ∘ dec, braiding the first q factors past the last p
  std::string witness;
  bool ok() const { return untwisted_ok && twisted_ok; }
};

// Both identities on every basis tensor of A^{⊗(p+q)} of total degree <= max_degree.
DecReport verify_dec_cocommutativity(const BraidedBialgebra& b, int p, int q, int max_degree);

// ---- The bar resolution B_n = A ⊗ Ā^{⊗n} ⊗ A (normalized) ----
// Keys have n+2 slots; inner slots are never the unit word.
class BarComplex : public FreeBimoduleComplex {
 public:
  explicit BarComplex(const Algebra& a) : a_(a) {}

  const Algebra& algebra() const override { return a_; }
  Chain differential(int n, const Chain& v) const override;
  Chain act(const Word& left, const Chain& v, const Word& right) const override;
  using BimoduleComplex::act;
  std::vector<Slots> basis(int n, int degree) const override;
  int degree(const Slots& key) const override { return slots_degree(a_, key); }
  bool has_t_action() const override { return true; }
  Chain t_act(const Chain& v) const override { return act_slots(a_, 1, v); }
  int level(const Slots& key) const override { return static_cast<int>(key.size()) - 2; }
  std::vector<Slots> generators(int n, int max_degree) const override;
  Split split(const Slots& key) const override;

  // s(a_0 ⊗ ... ⊗ a_{n+1}) = 1 ⊗ a_0 ⊗ ... ⊗ a_{n+1}; zero when a_0 is the unit.
  Chain contraction(const Chain& v) const;
  // Drops terms with a unit inner slot.
  static Chain normalize(const Chain& v);
  // Generators 1 ⊗ a_1 ⊗ ... ⊗ a_n ⊗ 1 with inner degrees summing to exactly `degree`.
  std::vector<Slots> generators_of_degree(int n, int degree) const;

 private:
  const Algebra& a_;
};

}  // namespace braidcoh
