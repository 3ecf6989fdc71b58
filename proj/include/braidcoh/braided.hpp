#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

#include "braidcoh/tensor.hpp"

namespace braidcoh {

// c(v ⊗ w) = t^{|v|} w ⊗ v on A ⊗ A.
Tensor braid(const Algebra& a, const Tensor& e);
// c^{-1}(v ⊗ w) = w ⊗ t^{-|w|} v.
Tensor braid_inverse(const Algebra& a, const Tensor& e);
// Braiding of the first `p` slots past the remaining ones: u ⊗ w -> t^{|u|} w ⊗ u.
Tensor braid_blocks(const Algebra& a, const Tensor& e, std::size_t p);
// (a ⊗ b)(c ⊗ d) = a t^{|b|}(c) ⊗ b d in A ⊗ A with the braided product.
Tensor braided_square_multiply(const Algebra& a, const Tensor& u, const Tensor& v);

struct AxiomReport {
  bool ok = true;
  int cases = 0;
  std::string failed;   // name of the first failing identity
  std::string witness;  // offending input, spelled out
};

// A with its primitively generated coproduct. Construction checks that the
// coproduct respects every relation and throws NotABimonoid otherwise.
class BraidedBialgebra {
 public:
  explicit BraidedBialgebra(const Algebra& a);

  const Algebra& algebra() const noexcept { return a_; }

  const Tensor& coproduct(const Word& w) const;
  Tensor coproduct(const AlgebraElement& e) const;
  Scalar counit(const AlgebraElement& e) const { return augment(e); }

  // Coassociativity, counit, multiplicativity of Δ and ε on all basis words of degree <= max_degree.
  AxiomReport check_bimonoid_axioms(int max_degree) const;

 private:
  const Algebra& a_;
  mutable std::unordered_map<Word, Tensor> memo_;
};

// Braid equation, both hexagons and c∘c^{-1} = id on `cases` random basis inputs.
AxiomReport check_braid_identities(const Algebra& a, int cases, int max_degree, std::uint64_t seed);

}  // namespace braidcoh
