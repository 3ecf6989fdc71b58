#include <doctest.h>

#include <random>

#include "braidcoh/bar.hpp"
#include "braidcoh/expression.hpp"

using namespace braidcoh;

namespace {

Slots K(const Algebra& a, std::initializer_list<const char*> words) {
  Slots s;
  for (const char* w : words) s.push_back(a.presentation().parse_word(w));
  return s;
}

Tensor T(const Algebra& a, std::initializer_list<const char*> words) { return Tensor(K(a, words)); }

// Σ_{p+q=n} of a bitensor-valued map, collected by split point.
template <class F>
std::map<int, Tensor> summed(int n, F&& f) {
  std::map<int, Tensor> out;
  for (int p = 0; p <= n; ++p) {
    Bitensor b = f(p, n - p);
    if (!b.data.empty()) out[p] += b.data;
  }
  return out;
}

void drop_empty(std::map<int, Tensor>& m) {
  for (auto it = m.begin(); it != m.end();) it = it->second.empty() ? m.erase(it) : std::next(it);
}

}  // namespace

TEST_CASE("faces and degeneracies") {
  Algebra j(jordan_plane());
  CHECK(simplicial_differential(j, T(j, {"x", "y"})) == -Tensor(K(j, {"xy"})));
  CHECK(face(j, 0, T(j, {"x", "y"})).empty());
  CHECK(face(j, 0, T(j, {"1", "y"})) == T(j, {"y"}));
  CHECK(face(j, 1, T(j, {"y", "x"})) == T(j, {"xy"}) - Scalar(1, 2) * T(j, {"xx"}));
  CHECK(degeneracy(1, T(j, {"x", "y"})) == T(j, {"x", "1", "y"}));
}

TEST_CASE("simplicial identities") {
  for (auto p : {jordan_plane(), super_jordan_plane()}) {
    Algebra a(p);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 3);
      Tensor e(random_basis_slots(a, n, 2, rng));
      for (int jj = 1; jj <= n; ++jj) {
        for (int i = 0; i < jj; ++i) CHECK(face(a, i, face(a, jj, e)) == face(a, jj - 1, face(a, i, e)));
      }
      for (int jj = 0; jj <= n; ++jj) {
        CHECK(face(a, jj, degeneracy(jj, e)) == e);
        CHECK(face(a, jj + 1, degeneracy(jj, e)) == e);
      }
      CHECK(simplicial_differential(a, simplicial_differential(a, e)).empty());
    }
  }
}

TEST_CASE("bar differential and contraction") {
  Algebra j(jordan_plane()), s(super_jordan_plane());
  BarComplex bj(j);
  CHECK(bj.differential(2, T(j, {"1", "x", "y", "1"})) ==
        T(j, {"x", "y", "1"}) - T(j, {"1", "xy", "1"}) + T(j, {"1", "x", "y"}));
  for (const Algebra* a : {&j, &s}) {
    BarComplex b(*a);
    for (int n = 1; n <= 3; ++n) {
      for (int d = n; d <= n + 2; ++d) {
        for (const auto& k : b.basis(n, d)) {
          Chain v(k);
          CHECK(b.differential(n - 1, b.differential(n, v)).empty());
          Chain h = b.differential(n + 1, b.contraction(v)) + b.contraction(b.differential(n, v));
          CHECK(h == v);
        }
      }
    }
  }
  CHECK(BarComplex::normalize(T(j, {"1", "x", "1", "y", "1"})).empty());
}

TEST_CASE("g commutes with faces") {
  for (auto p : {jordan_plane(), super_jordan_plane()}) {
    Algebra a(p);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 3);
      Tensor e(random_basis_slots(a, 2 * n, 2, rng));
      for (int i = 0; i <= n; ++i) CHECK(g_map(a, face_pairs(a, i, e)) == face_product(a, i, g_map(a, e)));
    }
  }
}

TEST_CASE("Alexander-Whitney maps") {
  Algebra j(jordan_plane());
  Bitensor aw = alexander_whitney(j, 1, 1, T(j, {"x", "1", "1", "y"}));
  CHECK(aw.p == 1);
  CHECK(aw.data == T(j, {"x", "y"}));
  CHECK(alexander_whitney(j, 1, 1, T(j, {"x", "y", "1", "y"})).data.empty());
  CHECK(alexander_whitney_twisted(j, 1, 1, T(j, {"1", "x", "y", "1"})).data == -T(j, {"x", "y"}));

  for (auto p : {jordan_plane(), super_jordan_plane()}) {
    Algebra a(p);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 3);
      Tensor e(random_basis_slots(a, 2 * n, 1, rng));
      Tensor de;
      for (int i = 0; i <= n; ++i) de.add(face_product(a, i, e), sign_of(i));
      for (bool twisted : {false, true}) {
        auto map = [&](const Tensor& x, int p, int q) {
          return twisted ? alexander_whitney_twisted(a, p, q, x) : alexander_whitney(a, p, q, x);
        };
        std::map<int, Tensor> lhs;
        for (const auto& [pp, t] : summed(n, [&](int p, int q) { return map(e, p, q); })) {
          for (const auto& [s, u] : total_differential(a, Bitensor{pp, t})) lhs[s] += u;
        }
        std::map<int, Tensor> rhs = summed(n - 1, [&](int p, int q) { return map(de, p, q); });
        drop_empty(lhs);
        drop_empty(rhs);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("deconcatenation identities") {
  for (auto p : {jordan_plane(), super_jordan_plane()}) {
    Algebra a(p);
    BraidedBialgebra b(a);
    for (int n = 2; n <= 3; ++n) {
      for (int pp = 1; pp < n; ++pp) {
        DecReport r = verify_dec_cocommutativity(b, pp, n - pp, 4);
        CHECK(r.ok());
        CHECK(r.cases > 0);
      }
    }
  }
}
