#pragma once

#include <map>
#include <utility>
#include <vector>

#include "braidcoh/scalar.hpp"
#include "braidcoh/word.hpp"

namespace braidcoh {

// Finite formal sum of keys with nonzero rational coefficients.
template <class Key>
class LinearCombination {
 public:
  using Map = std::map<Key, Scalar>;
  using const_iterator = typename Map::const_iterator;

  LinearCombination() = default;
  LinearCombination(Key key, Scalar coeff = Scalar(1)) { add(std::move(key), coeff); }

  void add(const Key& key, const Scalar& coeff) {
    if (is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Scalar& scale = Scalar(1)) {
    if (is_zero(scale)) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const Map& terms() const noexcept { return terms_; }

  LinearCombination& operator+=(const LinearCombination& o) {
    add(o);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add(o, Scalar(-1));
    return *this;
  }
  LinearCombination& operator*=(const Scalar& s) {
    if (is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= s;
    }
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const Scalar& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Scalar(-1); }

  bool operator==(const LinearCombination& o) const { return terms_ == o.terms_; }

  // Applies f: Key -> LinearCombination<K2> linearly.
  template <class K2, class F>
  LinearCombination<K2> map_linear(F&& f) const {
    LinearCombination<K2> out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

 private:
  Map terms_;
};

using AlgebraElement = LinearCombination<Word>;

// Keys of tensor powers and of all free-bimodule layouts: a tuple of words.
using Slots = std::vector<Word>;
using Tensor = LinearCombination<Slots>;

}  // namespace braidcoh
