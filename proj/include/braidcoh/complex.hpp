#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidcoh/linalg.hpp"
#include "braidcoh/tensor.hpp"

namespace braidcoh {

// Elements of a bimodule complex; the meaning of the slots is fixed by the complex.
using Chain = Tensor;

// A nonnegatively graded chain complex of graded A-bimodules, C_n -> C_{n-1}.
class BimoduleComplex {
 public:
  virtual ~BimoduleComplex() = default;

  virtual const Algebra& algebra() const = 0;
  virtual Chain differential(int n, const Chain& v) const = 0;
  virtual Chain act(const Word& left, const Chain& v, const Word& right) const = 0;
  // k-basis of the degree-`degree` part of C_n, as canonical keys.
  virtual std::vector<Slots> basis(int n, int degree) const = 0;
  virtual int degree(const Slots& key) const = 0;
  // Diagonal kZ-action, when the complex carries one.
  virtual bool has_t_action() const { return false; }
  virtual Chain t_act(const Chain& v) const;
  // Homological degree of a key, for Koszul signs in tensor products.
  virtual int level(const Slots& key) const;
  // Number of slots in every key, or -1 when it varies with the level.
  virtual int key_arity() const { return -1; }

  // t^k for k >= 0
  Chain t_power_nonneg(int k, const Chain& v) const;

  Chain act(const AlgebraElement& left, const Chain& v, const AlgebraElement& right) const;
};

// A complex of free bimodules: every key is left · generator · right for a unique generator.
class FreeBimoduleComplex : public BimoduleComplex {
 public:
  struct Split {
    Word left;
    Slots generator;
    Word right;
  };
  // Generators of C_n of internal degree <= max_degree.
  virtual std::vector<Slots> generators(int n, int max_degree) const = 0;
  virtual Split split(const Slots& key) const = 0;
  virtual std::string describe(const Slots& generator) const;
};

// Coordinates of degree-homogeneous pieces of a complex, with cached solvers for d.
class BoundarySolver {
 public:
  explicit BoundarySolver(const BimoduleComplex& c) : c_(c) {}

  // y in (C_n)_degree with d(y) = z, or nullopt. The kernel perturbation is applied when rng_seed is set.
  std::optional<Chain> solve(int n, int degree, const Chain& z, std::optional<std::uint64_t> rng_seed = {});
  // Like solve, using only basis keys whose first or last slot is not the unit.
  std::optional<Chain> solve_outer(int n, int degree, const Chain& z);

  struct Piece {
    std::vector<Slots> basis;
    std::map<Slots, int> index;
  };
  const Piece& piece(int n, int degree);
  SparseVec coordinates(int n, int degree, const Chain& v);
  Chain from_coordinates(int n, int degree, const SparseVec& x);

 private:
  EchelonSolver& solver(int n, int degree);

  const BimoduleComplex& c_;
  std::map<std::pair<int, int>, Piece> pieces_;
  std::map<std::pair<int, int>, EchelonSolver> solvers_;
  std::map<std::pair<int, int>, std::pair<std::vector<int>, EchelonSolver>> outer_solvers_;
};

enum class LiftStrategy { FirstPivot, RandomKernel };

struct LiftOptions {
  LiftStrategy strategy = LiftStrategy::FirstPivot;
  std::uint64_t seed = 0;
};

// A bimodule map out of a free complex, given by its values on generators.
// Values are computed on demand and memoized.
class ChainMap {
 public:
  ChainMap(const FreeBimoduleComplex& source, const BimoduleComplex& target) : src_(source), dst_(target) {}
  virtual ~ChainMap() = default;
  ChainMap(const ChainMap&) = delete;
  ChainMap& operator=(const ChainMap&) = delete;

  const Chain& value(int n, const Slots& generator) const;
  void assign(int n, const Slots& generator, Chain value);
  bool has_value(int n, const Slots& generator) const;
  Chain apply(int n, const Chain& x) const;

  const FreeBimoduleComplex& source() const noexcept { return src_; }
  const BimoduleComplex& target() const noexcept { return dst_; }

 protected:
  virtual Chain compute(int n, const Slots& generator) const = 0;

 private:
  const FreeBimoduleComplex& src_;
  const BimoduleComplex& dst_;
  mutable std::map<std::pair<int, Slots>, Chain> memo_;
};

// Values supplied by a function (or only through assign()).
class FunctionChainMap : public ChainMap {
 public:
  using Fn = std::function<Chain(int, const Slots&)>;
  FunctionChainMap(const FreeBimoduleComplex& s, const BimoduleComplex& t, Fn fn)
      : ChainMap(s, t), fn_(std::move(fn)) {}

 protected:
  Chain compute(int n, const Slots& g) const override;

 private:
  Fn fn_;
};

// Lifts given degree-0 values through the exact target: f_n(g) solves d f_n(g) = f_{n-1}(d g).
class LiftedChainMap : public ChainMap {
 public:
  using Base = std::function<Chain(const Slots&)>;
  LiftedChainMap(const FreeBimoduleComplex& s, const BimoduleComplex& t, Base base, LiftOptions opts = {},
                 std::shared_ptr<BoundarySolver> solver = nullptr);

  // Pre-set value; returns false (and leaves the map unchanged) if it does not satisfy the lifting equation.
  bool seed(int n, const Slots& generator, const Chain& v);

  // Closed-form candidates tried before solving. A candidate only needs to be right up to
  // terms with a non-unit outer factor: if it fails the lifting equation, such terms are
  // solved for and added (counted in seeds_completed()). A candidate that cannot be
  // completed is recorded in rejected_seeds() and the solver is used instead.
  using Seeder = std::function<std::optional<Chain>(int, const Slots&)>;
  void set_seeder(Seeder s) { seeder_ = std::move(s); }
  int seeds_accepted() const noexcept { return accepted_; }
  int seeds_completed() const noexcept { return completed_; }
  const std::vector<std::string>& rejected_seeds() const noexcept { return rejected_; }

  // Replaces the solver by y = h(z), e.g. a contracting homotopy of the target.
  using Contraction = std::function<Chain(int, const Chain&)>;
  void use_contraction(Contraction h) { contraction_ = std::move(h); }

 protected:
  Chain compute(int n, const Slots& g) const override;

 private:
  Base base_;
  LiftOptions opts_;
  std::shared_ptr<BoundarySolver> solver_;
  Seeder seeder_;
  Contraction contraction_;
  mutable int accepted_ = 0;
  mutable int completed_ = 0;
  mutable std::vector<std::string> rejected_;
};

// Lifts where the t-equivariance f(t·g) = t·f(g) is imposed together with the chain condition.
// Fills levels 1..max_n for all generators of degree <= max_degree, level by level; if that
// gets stuck, all levels are solved together. Returns false if no equivariant solution exists.
bool lift_equivariant(LiftedChainMap& f, int max_n, int max_degree, std::string* failure = nullptr);

struct ChainMapCheck {
  bool ok = true;
  int generators_checked = 0;
  std::string witness;
};
ChainMapCheck check_chain_map(const ChainMap& f, int max_n, int max_degree);

struct HomotopyResult {
  bool found = false;
  bool conclusive = true;
  int max_n = 0;
  int max_degree = 0;
  std::string witness;  // first generator where no homotopy value exists
  std::map<std::pair<int, Slots>, Chain> values;
};

// Bimodule homotopy h with d h + h d = f - g on generators of level <= max_n, degree <= max_degree.
HomotopyResult find_homotopy(const ChainMap& f, const ChainMap& g, int max_n, int max_degree,
                             std::shared_ptr<BoundarySolver> solver = nullptr);

// Finite-dimensional graded complex of vector spaces, for (co)homology.
struct GradedComplex {
  bool cohomological = true;  // differential raises n when true
  std::map<std::pair<int, int>, int> dims;  // (n, internal degree) -> dimension
  // (n, degree) -> columns of the differential out of that piece
  std::map<std::pair<int, int>, std::vector<SparseVec>> differential;

  int dim(int n, int d) const;
  int rank_out(int n, int d) const;
  int homology(int n, int d) const;
  // d∘d = 0 on every piece; returns a description of the first failure or empty.
  std::string check_square_zero() const;
};

}  // namespace braidcoh
