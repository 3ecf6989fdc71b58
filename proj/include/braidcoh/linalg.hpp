#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "braidcoh/scalar.hpp"

namespace braidcoh {

// Sparse vector: (index, nonzero value) pairs sorted by index.
class SparseVec {
 public:
  using Entry = std::pair<int, Scalar>;

  SparseVec() = default;
  explicit SparseVec(std::vector<Entry> sorted_entries) : e_(std::move(sorted_entries)) {}
  static SparseVec unit(int i) { return SparseVec({{i, Scalar(1)}}); }

  bool empty() const noexcept { return e_.empty(); }
  std::size_t size() const noexcept { return e_.size(); }
  const Entry& front() const { return e_.front(); }
  const std::vector<Entry>& entries() const noexcept { return e_; }
  Scalar at(int i) const;

  // this += a * x
  void axpy(const Scalar& a, const SparseVec& x);
  void scale(const Scalar& a);
  // Builds from unsorted entries, merging duplicates and dropping zeros.
  static SparseVec from_unsorted(std::vector<Entry> entries);

  bool operator==(const SparseVec&) const = default;

 private:
  std::vector<Entry> e_;
};

// Incremental semi-echelon basis of the column span of a matrix.
// Each pivot row remembers which combination of input columns produced it,
// which yields particular solutions and kernel vectors.
class EchelonSolver {
 public:
  // Adds the next column; returns true when it increased the rank.
  bool add_column(const SparseVec& column);

  int rank() const noexcept { return static_cast<int>(pivots_.size()); }
  int num_columns() const noexcept { return columns_; }

  // x with M x = b, free variables zero; nullopt when b is not in the span.
  std::optional<SparseVec> solve(const SparseVec& b) const;
  // Residue of b modulo the column span (zero iff b is in the span).
  SparseVec reduce(const SparseVec& b) const;
  const std::vector<SparseVec>& kernel() const noexcept { return kernel_; }

 private:
  struct Pivot {
    SparseVec vec;   // leading coefficient 1 at the pivot index
    SparseVec prov;  // combination of input columns
  };
  std::map<int, Pivot> pivots_;
  std::vector<SparseVec> kernel_;
  int columns_ = 0;
};

int rank_of(const std::vector<SparseVec>& columns);

}  // namespace braidcoh
