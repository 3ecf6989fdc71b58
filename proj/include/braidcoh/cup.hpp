#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "braidcoh/bar.hpp"
#include "braidcoh/resolution.hpp"

namespace braidcoh {

// A bimodule map P_n -> k, stored by its values on generators (generator id -> value).
struct Cochain {
  int level = 0;
  std::map<int, Scalar> values;

  Scalar at(int id) const;
  bool operator==(const Cochain&) const = default;
};

Cochain dual_cochain(const FreeResolution& res, const std::string& label);
// Outer factors collapsed by ε, then paired with the generator values.
Scalar evaluate(const FreeResolution& res, const Cochain& phi, const Chain& v);
// (t^k·φ)(w) = φ(t^{-k}·w)
Cochain act_on_cochain(const FreeResolution& res, int k, const Cochain& phi);
std::string format_cochain(const FreeResolution& res, const Cochain& phi);
// Cocycles whose classes form a basis of H^level; the dual basis when the resolution is minimal.
std::vector<Cochain> cohomology_basis(const FreeResolution& res, int level);
// Whether φ is a coboundary, using generators of degree <= max_degree.
bool is_coboundary(const FreeResolution& res, const Cochain& phi, int max_degree);

struct ComparisonOptions {
  bool closed_form_seeds = true;  // closed-form values for the built-in resolutions, checked before use
  LiftOptions g_lift;
  bool f_by_solver = false;  // otherwise f is built with the bar contraction
};

// Comparison maps f: P -> B and g: B -> P lifting the identity of A.
class Comparison {
 public:
  explicit Comparison(const FreeResolution& res, ComparisonOptions opts = {});
  Comparison(const Comparison&) = delete;
  Comparison& operator=(const Comparison&) = delete;

  const FreeResolution& resolution() const noexcept { return res_; }
  const BarComplex& bar() const noexcept { return bar_; }
  LiftedChainMap& f() { return *f_; }
  LiftedChainMap& g() { return *g_; }
  const ComparisonOptions& options() const noexcept { return opts_; }

  // Bar generator 1 ⊗ a_1 ⊗ ... ⊗ a_n ⊗ 1 for spelled factors, e.g. {"x", "xy"}.
  Slots bar_generator(const std::vector<std::string>& factors) const;
  std::vector<std::string> seed_rejections() const;
  int seeds_accepted() const { return f_->seeds_accepted() + g_->seeds_accepted(); }
  int seeds_completed() const { return f_->seeds_completed() + g_->seeds_completed(); }

 private:
  const FreeResolution& res_;
  ComparisonOptions opts_;
  BarComplex bar_;
  std::unique_ptr<LiftedChainMap> f_;
  std::unique_ptr<LiftedChainMap> g_;
};

// 1 ⊗ u ⊗ w ⊗ 1 -> 1 ⊗ t^{|u|}w ⊗ u ⊗ 1 with u the first p factors; outer factors must be units.
Chain braid_bar_segment(const Algebra& a, int p, const Chain& bar_chain);

// (ψ g_p ⌣ φ g_q) on a bar chain of level p+q: φ sees the leading q factors.
Scalar cup_on_bar(Comparison& cmp, const Cochain& psi, const Cochain& phi, const Chain& bar_chain);
// (ψ g_p ⌣ φ g_q) ∘ f_{p+q}, as a cochain on generators of degree <= max_degree.
Cochain cup_opposite(Comparison& cmp, const Cochain& psi, const Cochain& phi, int max_degree);
// The usual order, ψ on the leading segment.
Cochain cup_standard(Comparison& cmp, const Cochain& psi, const Cochain& phi, int max_degree);
// (ψ g_p ⌣ φ g_q) ∘ c_{p,q} ∘ f_{p+q}
Cochain cup_braided(Comparison& cmp, const Cochain& psi, const Cochain& phi, int max_degree);

struct CommutativityRow {
  int p = 0, q = 0;
  std::string generator, psi, phi;
  Scalar lhs, rhs;
  int sign = 1;
  bool pass = true;
};

struct CommutativityReport {
  int p = 0, q = 0, max_degree = 0;
  bool minimal = true;
  bool ok = true;
  std::vector<CommutativityRow> rows;
  std::vector<std::string> seed_rejections;
  std::string witness;
};

// L = (ψg⌣φg)(c f(w)) against R = (-1)^{pq} (ψg⌣φg)(f(w)) for every pair of basis classes and
// every generator w of P_{p+q} with degree <= max_degree. Exact equality on minimal resolutions,
// equality modulo coboundaries otherwise.
CommutativityReport verify_braided_commutativity(Comparison& cmp, int p, int q, int max_degree);

struct CupTableEntry {
  std::string psi, phi;
  Cochain product;
};
// Products of basis classes of degrees p and q, expressed as cochains on P_{p+q}.
std::vector<CupTableEntry> cup_table(Comparison& cmp, int p, int q, int max_degree, bool standard_order = false);

}  // namespace braidcoh
