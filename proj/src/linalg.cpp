#include "braidcoh/linalg.hpp"

#include <algorithm>

namespace braidcoh {

Scalar SparseVec::at(int i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& e, int k) { return e.first < k; });
  return (it != e_.end() && it->first == i) ? it->second : Scalar(0);
}

void SparseVec::axpy(const Scalar& a, const SparseVec& x) {
  if (is_zero(a) || x.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + x.e_.size());
  auto i = e_.begin(), ie = e_.end();
  auto j = x.e_.begin(), je = x.e_.end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == ie || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Scalar v = i->second + a * j->second;
      if (!is_zero(v)) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  e_ = std::move(out);
}

void SparseVec::scale(const Scalar& a) {
  if (is_zero(a)) {
    e_.clear();
    return;
  }
  for (auto& e : e_) e.second *= a;
}

SparseVec SparseVec::from_unsorted(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      if (!out.empty() && is_zero(out.back().second)) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && is_zero(out.back().second)) out.pop_back();
  return SparseVec(std::move(out));
}

bool EchelonSolver::add_column(const SparseVec& column) {
  SparseVec v = column;
  SparseVec prov = SparseVec::unit(columns_++);
  while (!v.empty()) {
    auto it = pivots_.find(v.front().first);
    if (it == pivots_.end()) break;
    Scalar f = -v.front().second;
    v.axpy(f, it->second.vec);
    prov.axpy(f, it->second.prov);
  }
  if (v.empty()) {
    kernel_.push_back(std::move(prov));
    return false;
  }
  Scalar inv = 1 / v.front().second;
  v.scale(inv);
  prov.scale(inv);
  int key = v.front().first;
  pivots_.emplace(key, Pivot{std::move(v), std::move(prov)});
  return true;
}

SparseVec EchelonSolver::reduce(const SparseVec& b) const {
  SparseVec v = b;
  SparseVec rest;
  std::vector<SparseVec::Entry> stuck;
  while (!v.empty()) {
    auto it = pivots_.find(v.front().first);
    if (it == pivots_.end()) {
      stuck.push_back(v.front());
      v = SparseVec(std::vector<SparseVec::Entry>(v.entries().begin() + 1, v.entries().end()));
      continue;
    }
    v.axpy(-v.front().second, it->second.vec);
  }
  return SparseVec(std::move(stuck));
}

std::optional<SparseVec> EchelonSolver::solve(const SparseVec& b) const {
  SparseVec v = b;
  SparseVec x;
  while (!v.empty()) {
    auto it = pivots_.find(v.front().first);
    if (it == pivots_.end()) return std::nullopt;
    Scalar f = v.front().second;
    v.axpy(-f, it->second.vec);
    x.axpy(f, it->second.prov);
  }
  return x;
}

int rank_of(const std::vector<SparseVec>& columns) {
  EchelonSolver s;
  for (const auto& c : columns) s.add_column(c);
  return s.rank();
}

}  // namespace braidcoh
