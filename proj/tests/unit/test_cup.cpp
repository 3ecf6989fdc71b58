#include <doctest.h>

#include "braidcoh/cup.hpp"

using namespace braidcoh;

namespace {

Chain gen(const FreeResolution& r, const std::string& label) { return r.term("1", label, "1"); }

Slots key_of(const FreeResolution& r, const std::string& label) {
  return FreeResolution::key(Word(), r.id_of(label), Word());
}

}  // namespace

TEST_CASE("jordan comparison maps") {
  Algebra j(jordan_plane());
  FreeResolution r = builtin_jordan(j);
  Comparison cmp(r);
  Chain fr;
  fr.add(cmp.bar_generator({"y", "x"}), Scalar(1));
  fr.add(cmp.bar_generator({"x", "y"}), Scalar(-1));
  fr.add(cmp.bar_generator({"x", "x"}), Scalar(1, 2));
  CHECK(cmp.f().value(2, key_of(r, "r")) == fr);
  CHECK(cmp.g().value(1, cmp.bar_generator({"xy"})) == r.term("1", "x", "y") + r.term("x", "y", "1"));
  CHECK(check_chain_map(cmp.f(), 2, 5).ok);
  CHECK(check_chain_map(cmp.g(), 3, 4).ok);
  CHECK(cmp.seed_rejections().empty());
  CHECK_THROWS(cmp.bar_generator({"yx"}));
}

TEST_CASE("jordan cup table") {
  Algebra j(jordan_plane());
  FreeResolution r = builtin_jordan(j);
  Comparison cmp(r);
  Cochain x = dual_cochain(r, "x"), y = dual_cochain(r, "y");
  const int rid = r.id_of("r");
  CHECK(cup_opposite(cmp, x, x, 4).at(rid) == Scalar(1, 2));
  CHECK(cup_opposite(cmp, x, y, 4).at(rid) == 1);
  CHECK(cup_opposite(cmp, y, x, 4).at(rid) == -1);
  CHECK(cup_opposite(cmp, y, y, 4).at(rid) == 0);
  CHECK(cup_standard(cmp, x, y, 4).at(rid) == -1);

  CommutativityReport rep = verify_braided_commutativity(cmp, 1, 1, 4);
  CHECK(rep.ok);
  CHECK(rep.minimal);
  CHECK(rep.rows.size() == 4);
  for (const auto& row : rep.rows) {
    CHECK(row.pass);
    CHECK(row.sign == -1);
  }

  // H^1 · H^2 lands in H^3 = 0.
  auto t = cup_table(cmp, 1, 2, 6);
  CHECK(t.size() == 2);
  for (const auto& e : t) CHECK(e.product.values.empty());
}

TEST_CASE("super jordan cup products") {
  Algebra s(super_jordan_plane());
  FreeResolution r = builtin_super_jordan(s, 6);
  Comparison cmp(r);
  Cochain x = dual_cochain(r, "x"), y = dual_cochain(r, "y");
  CHECK(cup_opposite(cmp, x, x, 3) == Cochain{2, {{r.id_of("x^2"), Scalar(1)}}});
  CHECK(cup_opposite(cmp, x, y, 3).values.empty());
  for (int n = 2; n <= 4; ++n) {
    for (int p = 1; p < n; ++p) {
      CommutativityReport rep = verify_braided_commutativity(cmp, p, n - p, n + 2);
      CHECK_MESSAGE(rep.ok, rep.witness);
      CHECK_FALSE(rep.rows.empty());
    }
  }
  CHECK(cmp.seeds_accepted() > 0);
}

TEST_CASE("cup products do not depend on the lift") {
  for (bool super : {false, true}) {
    Algebra a(super ? super_jordan_plane() : jordan_plane());
    FreeResolution r = super ? builtin_super_jordan(a, 5) : builtin_jordan(a);
    ComparisonOptions first, random;
    first.closed_form_seeds = random.closed_form_seeds = false;
    random.g_lift = LiftOptions{LiftStrategy::RandomKernel, 42};
    Comparison c1(r, first), c2(r, random);
    const int top = super ? 4 : 2;
    for (int n = 2; n <= top; ++n) {
      for (int p = 1; p < n; ++p) {
        auto t1 = cup_table(c1, p, n - p, n + 2);
        auto t2 = cup_table(c2, p, n - p, n + 2);
        REQUIRE(t1.size() == t2.size());
        for (std::size_t i = 0; i < t1.size(); ++i) CHECK(t1[i].product == t2[i].product);
        auto r1 = verify_braided_commutativity(c1, p, n - p, n + 2);
        auto r2 = verify_braided_commutativity(c2, p, n - p, n + 2);
        CHECK(r1.ok);
        CHECK(r2.ok);
      }
    }
  }
}

TEST_CASE("t acts on cochains") {
  Algebra j(jordan_plane()), s(super_jordan_plane());
  FreeResolution rj = builtin_jordan(j);
  FreeResolution rs = builtin_super_jordan(s, 4);
  Cochain r = dual_cochain(rj, "r");
  CHECK(act_on_cochain(rj, 1, r) == r);
  Cochain x = dual_cochain(rs, "x"), y = dual_cochain(rs, "y");
  CHECK(act_on_cochain(rs, 0, y) == y);
  // t⁻¹ sends y to -x - y
  CHECK(act_on_cochain(rs, 1, x) == Cochain{1, {{rs.id_of("x"), Scalar(-1)}, {rs.id_of("y"), Scalar(-1)}}});
  CHECK(act_on_cochain(rs, 1, act_on_cochain(rs, -1, y)) == y);
  CHECK(format_cochain(rs, x) == "x*");
}

TEST_CASE("unit and associativity") {
  Algebra s(super_jordan_plane());
  FreeResolution r = builtin_super_jordan(s, 6);
  Comparison cmp(r);
  auto h0 = cohomology_basis(r, 0);
  REQUIRE(h0.size() == 1);
  auto h1 = cohomology_basis(r, 1);
  REQUIRE(h1.size() == 2);
  for (const auto& c : h1) {
    CHECK(cup_standard(cmp, h0[0], c, 5) == c);
    CHECK(cup_standard(cmp, c, h0[0], 5) == c);
  }
  for (const auto& a : h1) {
    for (const auto& b : h1) {
      for (const auto& c : h1) {
        Cochain left = cup_standard(cmp, cup_standard(cmp, a, b, 6), c, 6);
        Cochain right = cup_standard(cmp, a, cup_standard(cmp, b, c, 6), 6);
        CHECK(left == right);
      }
    }
  }
}

TEST_CASE("braiding of bar segments") {
  Algebra j(jordan_plane());
  FreeResolution r = builtin_jordan(j);
  Comparison cmp(r);
  CHECK(braid_bar_segment(j, 1, Chain(cmp.bar_generator({"y", "x"}))) == Chain(cmp.bar_generator({"x", "y"})));
  // t·y = x + y
  CHECK(braid_bar_segment(j, 1, Chain(cmp.bar_generator({"x", "y"}))) ==
        Chain(cmp.bar_generator({"y", "x"})) + Chain(cmp.bar_generator({"x", "x"})));
  CHECK_THROWS(braid_bar_segment(j, 1, r.term("x", "x", "1")));
  CHECK(evaluate(r, dual_cochain(r, "x"), gen(r, "x") + r.term("x", "x", "1")) == 1);
}
