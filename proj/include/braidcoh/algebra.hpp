#pragma once

#include <climits>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidcoh/presentation.hpp"

namespace braidcoh {

enum class ReductionStrategy { Leftmost, Rightmost };

struct Ambiguity {
  std::string kind;  // "overlap" or "inclusion"
  Word word;
  int degree = 0;
  bool resolves = false;
  AlgebraElement difference;
};

struct CompletionReport {
  int max_degree = 0;
  std::vector<Ambiguity> ambiguities;
  bool confluent = true;
  // Leftmost and rightmost reduction agree on every word of degree <= strategies_checked_through.
  bool strategies_agree = true;
  int strategies_checked_through = 0;
};

// A graded algebra given by a rewriting presentation.
// Memo tables are not synchronised: an Algebra belongs to one thread at a time.
class Algebra {
 public:
  static constexpr int kUnbounded = INT_MAX;

  enum class Checks { Full, Structural };

  // Full checks also verify t * t^-1 = id and that t preserves the relations.
  explicit Algebra(Presentation p, int truncation = kUnbounded, Checks checks = Checks::Full);

  const Presentation& presentation() const noexcept { return p_; }
  int truncation() const noexcept { return truncation_; }
  int degree(const Word& w) const { return p_.degree(w); }
  int num_generators() const { return static_cast<int>(p_.generators.size()); }

  // Memoized leftmost normal form of a single word.
  const AlgebraElement& normal_form(const Word& w) const;
  AlgebraElement normal_form(const AlgebraElement& raw) const;
  // Unmemoized reduction with an explicit strategy.
  AlgebraElement reduce(const Word& w, ReductionStrategy strategy) const;
  bool is_irreducible(const Word& w) const;

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  const AlgebraElement& multiply(const Word& a, const Word& b) const { return normal_form(a + b); }

  // t^k acting on A; k may be negative.
  const AlgebraElement& act(int k, const Word& w) const;
  AlgebraElement act(int k, const AlgebraElement& e) const;

  // Irreducible words of degree n in increasing monomial order.
  const std::vector<Word>& graded_basis(int n) const;

  CompletionReport complete_overlaps(int max_degree) const;

  AlgebraElement unit() const { return AlgebraElement(Word()); }

 private:
  void validate_structure() const;
  void validate_action() const;
  void check_window(const Word& w) const;
  AlgebraElement act_once(int sign, const Word& w) const;

  Presentation p_;
  int truncation_;
  mutable std::unordered_map<Word, AlgebraElement> nf_cache_;
  mutable std::unordered_map<long long, std::unordered_map<Word, AlgebraElement>> act_cache_;
  mutable std::map<int, std::vector<Word>> basis_cache_;
};

// The augmentation: coefficient of the empty word.
Scalar augment(const AlgebraElement& e);

// Adds rules for non-resolving ambiguities until everything resolves up to max_degree.
// Returns the completed presentation; throws PresentationError when max_rounds is hit.
Presentation complete_presentation(const Presentation& p, int max_degree, int max_rounds = 16);

}  // namespace braidcoh
