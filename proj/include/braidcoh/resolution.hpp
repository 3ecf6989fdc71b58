#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidcoh/complex.hpp"

namespace braidcoh {

// A free A-bimodule resolution P_n = A ⊗ V_n ⊗ A of A.
// Keys are {a, label, b} where label is a one-letter Word holding the generator id.
// Level 0 has the single generator "1" (id 0), so P_0 = A ⊗ A.
class FreeResolution : public FreeBimoduleComplex {
 public:
  struct GeneratorInfo {
    std::string label;
    int level = 0;
    int degree = 0;
    Chain differential;  // in P_{level-1}; empty for level 0
    Chain t_action;      // t·(1 ⊗ label ⊗ 1) in P_level
  };

  FreeResolution(const Algebra& a, std::string name);

  int add_generator(const std::string& label, int level, int degree);
  void set_differential(int id, Chain d) { gens_.at(id).differential = std::move(d); }
  void set_t_action(int id, Chain t) { gens_.at(id).t_action = std::move(t); }

  // {a, generator id, b}
  static Slots key(const Word& a, int id, const Word& b) { return Slots{a, Word::letter(id), b}; }
  Chain term(const std::string& a, const std::string& label, const std::string& b) const;
  int id_of(const std::string& label) const;
  int id_of_key(const Slots& key) const { return key[1][0]; }
  const GeneratorInfo& info(int id) const { return gens_.at(id); }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  int max_level() const { return max_level_; }
  const std::string& name() const { return name_; }
  std::vector<int> generator_ids(int level) const;

  // FreeBimoduleComplex
  const Algebra& algebra() const override { return a_; }
  Chain differential(int n, const Chain& v) const override;
  Chain act(const Word& left, const Chain& v, const Word& right) const override;
  using BimoduleComplex::act;
  std::vector<Slots> basis(int n, int degree) const override;
  int degree(const Slots& key) const override;
  bool has_t_action() const override { return true; }
  Chain t_act(const Chain& v) const override;
  int level(const Slots& key) const override { return gens_.at(id_of_key(key)).level; }
  int key_arity() const override { return 3; }
  std::vector<Slots> generators(int n, int max_degree) const override;
  Split split(const Slots& key) const override;
  std::string describe(const Slots& generator) const override;

  Chain t_power(int k, const Chain& v) const;

  // μ: P_0 -> A
  AlgebraElement augmentation(const Chain& v) const;
  // ε ⊗ id ⊗ ε: coefficient of each generator id after collapsing outer words
  std::map<int, Scalar> epsilon_collapse(const Chain& v) const;

  std::string format(const Chain& v) const;

 private:
  const Algebra& a_;
  std::string name_;
  std::vector<GeneratorInfo> gens_;
  std::map<std::string, int> by_label_;
  int max_level_ = 0;
  mutable std::map<std::pair<int, int>, std::vector<Slots>> basis_cache_;
  bool finite_length_ = false;
  struct InversePiece {
    std::map<Slots, int> index;
    std::vector<Slots> basis;
    EchelonSolver solver;
  };
  mutable std::map<std::pair<int, int>, InversePiece> t_inverse_;

 public:
  // True when max_level() is the true length, so exactness is also checked at the top level.
  bool finite_length() const { return finite_length_; }
  void set_finite_length(bool f) { finite_length_ = f; }
};

FreeResolution builtin_jordan(const Algebra& jordan);
// With printed_t_action the generator 1⊗y²xⁿ⁻¹⊗1 keeps coefficient +1 in its own t-image,
// as commonly quoted; that version is not equivariant and exists for comparison only.
FreeResolution builtin_super_jordan(const Algebra& super_jordan, int n_max, bool printed_t_action = false);

struct ResolutionReport {
  int max_degree = 0;
  bool d_squared_zero = true;
  bool exact = true;
  bool equivariant = true;
  bool graded = true;
  bool minimal = true;
  int exactness_checked_through_level = 0;
  std::vector<std::string> failures;  // with bidegree witnesses
  bool ok() const { return d_squared_zero && exact && equivariant && graded; }
};

// Checks on all pieces of internal degree <= max_degree.
ResolutionReport validate_resolution(const FreeResolution& res, int max_degree);
bool is_minimal(const FreeResolution& res);

// Hom_{AA}(P, k) ≅ V_n^*, differentials from ε-collapsing d.
GradedComplex induced_trivial_cochain(const FreeResolution& res, int max_level);
std::vector<int> cohomology_dimensions(const FreeResolution& res, int max_level);

nlohmann::json resolution_to_json(const FreeResolution& res);
// Builds the resolution into `out` (which must be empty apart from level 0) and validates it through max_degree.
void resolution_from_json(const nlohmann::json& doc, FreeResolution& out);

}  // namespace braidcoh
