#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "braidcoh/braided.hpp"
#include "braidcoh/resolution.hpp"

namespace braidcoh {

// (-1)^{nk}: the sign carried by the interchange law on middle homological degrees n, k.
int interchange_graded_sign(int n, int k);

// P ⊗_A ... ⊗_A P (k factors) as the free bimodule with keys a_0 | v_1 | a_1 | ... | v_k | a_k.
// The middle words absorb the ⊗_A identifications, so keys are canonical.
class SegmentedComplex : public FreeBimoduleComplex {
 public:
  SegmentedComplex(const FreeResolution& res, int factors);

  int factors() const noexcept { return k_; }
  const FreeResolution& resolution() const noexcept { return res_; }

  const Algebra& algebra() const override { return res_.algebra(); }
  Chain differential(int n, const Chain& v) const override;
  Chain act(const Word& left, const Chain& v, const Word& right) const override;
  using BimoduleComplex::act;
  std::vector<Slots> basis(int n, int degree) const override;
  int degree(const Slots& key) const override;
  bool has_t_action() const override { return true; }
  Chain t_act(const Chain& v) const override;
  int level(const Slots& key) const override;
  int key_arity() const override { return 2 * k_ + 1; }
  std::vector<Slots> generators(int n, int max_degree) const override;
  Split split(const Slots& key) const override;
  std::string describe(const Slots& generator) const override;

  // x ⊗_A y for keys of two segmented complexes over the same resolution: merges the touching words.
  static Chain tensor_over_A(const Algebra& a, const Chain& x, const Chain& y);

 private:
  const FreeResolution& res_;
  int k_;
  mutable std::map<std::pair<int, int>, std::vector<Slots>> basis_cache_;
};

// M ⊙ N: M ⊗ N with a·(m⊗n) = Σ a'·t^{|a''|}m ⊗ a''·n and (m⊗n)·a = Σ m·t^{|n|}a' ⊗ n·a''.
// Keys are an M key followed by an N key; both complexes need fixed key arity and levels.
class OdotComplex : public BimoduleComplex {
 public:
  OdotComplex(const BimoduleComplex& m, const BimoduleComplex& n, const BraidedBialgebra& b);

  const BimoduleComplex& left() const noexcept { return m_; }
  const BimoduleComplex& right() const noexcept { return n_; }
  std::pair<Slots, Slots> split_key(const Slots& key) const;
  static Slots join(const Slots& x, const Slots& y);

  const Algebra& algebra() const override { return b_.algebra(); }
  Chain differential(int n, const Chain& v) const override;
  Chain act(const Word& left, const Chain& v, const Word& right) const override;
  using BimoduleComplex::act;
  std::vector<Slots> basis(int n, int degree) const override;
  int degree(const Slots& key) const override;
  bool has_t_action() const override { return true; }
  Chain t_act(const Chain& v) const override;
  int level(const Slots& key) const override;
  int key_arity() const override { return m_.key_arity() + n_.key_arity(); }

 private:
  const BimoduleComplex& m_;
  const BimoduleComplex& n_;
  const BraidedBialgebra& b_;
  std::size_t split_;
  mutable std::map<std::pair<int, int>, std::vector<Slots>> basis_cache_;
};

// M ⊗ N over k for two chains given as keys, with the product of coefficients.
Chain outer_product(const Chain& x, const Chain& y);

// ζ on representatives in (M⊙N) ⊗ (K⊙L), M..L segmented over the same resolution:
// (m⊗n)⊗(k⊗l) -> (-1)^{|n||k|} (m ⊗_A t^{|n|}k) ⊙ (n ⊗_A l).
// `arities` gives the key arity of M, N, K, L.
Chain zeta(const Algebra& a, const FreeResolution& res, const Chain& rep, const std::vector<int>& arities);

// The quotient M_i ⊗_A N_j in one internal degree, computed as a coequalizer of vector spaces.
class TensorOverA {
 public:
  TensorOverA(const BimoduleComplex& m, int mi, const BimoduleComplex& n, int nj, int degree);

  int dimension() const noexcept { return static_cast<int>(basis_.size()) - relations_.rank(); }
  int ambient_dimension() const noexcept { return static_cast<int>(basis_.size()); }
  // Canonical representative: remainder modulo the relation span.
  SparseVec project(const Chain& x) const;
  bool same_class(const Chain& x, const Chain& y) const { return project(x - y).empty(); }

 private:
  std::vector<Slots> basis_;  // M key ++ N key
  std::map<Slots, int> index_;
  EchelonSolver relations_;
};

struct CoduoidReport {
  int max_n = 0, max_degree = 0;
  bool omega_equivariant = true;
  bool delta_equivariant = true;
  bool chain_maps = true;      // both composites commute with d
  bool degree_zero_square = true;
  bool homotopy_found = false;
  bool conclusive = true;
  bool counit_omega = false;   // (μ ⊗_A id)∘ω ≃ id and (id ⊗_A μ)∘ω ≃ id
  bool counit_delta = false;   // (εμ ⊙ id)∘δ ≃ id and (id ⊙ εμ)∘δ ≃ id
  int homotopy_values = 0;
  std::vector<std::string> notes;
  std::string witness;
  bool ok() const {
    return chain_maps && degree_zero_square && homotopy_found && counit_omega && counit_delta;
  }
};

// Builds ω: P -> P⊗_A P and δ: P -> P⊙P by equivariant lifting and searches for a homotopy
// ζ∘(δ⊗_Aδ)∘ω ≃ (ω⊙ω)∘δ through level max_n and internal degree max_degree.
CoduoidReport verify_coduoid(const FreeResolution& res, const BraidedBialgebra& b, int max_n, int max_degree);

// The A-level square on basis words of degree <= max_degree, with both representatives 1⊗_A a and a⊗_A 1.
bool check_degree_zero_square(const BraidedBialgebra& b, int max_degree, std::string* witness = nullptr);

// ω on the bar resolution by deconcatenation; checks d∘ω = ω∘d on generators up to the given level.
bool check_bar_deconcatenation(const Algebra& a, int max_n, int max_degree, std::string* witness = nullptr);

}  // namespace braidcoh
