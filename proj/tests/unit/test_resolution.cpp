#include <doctest.h>

#include "braidcoh/errors.hpp"
#include "braidcoh/expression.hpp"
#include "braidcoh/resolution.hpp"

using namespace braidcoh;

TEST_CASE("jordan resolution differentials") {
  Algebra j(jordan_plane());
  FreeResolution r = builtin_jordan(j);
  CHECK(r.info(r.id_of("r")).degree == 2);
  CHECK(r.info(r.id_of("r")).differential.size() == 6);
  for (int id : r.generator_ids(2)) {
    Chain g(FreeResolution::key(Word(), id, Word()));
    CHECK(r.differential(1, r.differential(2, g)).empty());
  }
  // d(x) = x|1|1 - 1|1|x, and its augmentation vanishes.
  Chain dx = r.differential(1, r.term("1", "x", "1"));
  CHECK(dx == r.term("x", "1", "1") - r.term("1", "1", "x"));
  CHECK(r.augmentation(dx).empty());
  CHECK(r.format(r.term("1", "y", "x")) == "1|y|x");
  CHECK(is_minimal(r));
}

TEST_CASE("super jordan differentials") {
  Algebra s(super_jordan_plane());
  FreeResolution r = builtin_super_jordan(s, 5);
  CHECK(r.differential(3, r.term("1", "x^3", "1")) == r.term("x", "x^2", "1") - r.term("1", "x^2", "x"));
  CHECK(r.differential(2, r.term("1", "x^2", "1")) == r.term("x", "x", "1") + r.term("1", "x", "x"));
  for (int n = 2; n <= 5; ++n) {
    std::string l = n == 2 ? "y2x" : "y2x^" + std::to_string(n - 1);
    CHECK(r.info(r.id_of(l)).degree == n + 1);
  }
  CHECK(is_minimal(r));
}

TEST_CASE("validation of both resolutions") {
  Algebra j(jordan_plane()), s(super_jordan_plane());
  FreeResolution rj = builtin_jordan(j);
  FreeResolution rs = builtin_super_jordan(s, 9);
  ResolutionReport a = validate_resolution(rj, 8);
  ResolutionReport b = validate_resolution(rs, 8);
  CHECK(a.ok());
  CHECK(b.ok());
  CHECK(a.exactness_checked_through_level >= 2);
  CHECK(b.exactness_checked_through_level >= 8);
}

TEST_CASE("corrupted differential gives a witness") {
  Algebra j(jordan_plane());
  FreeResolution r = builtin_jordan(j);
  r.set_differential(r.id_of("x"), r.term("x", "1", "1") + r.term("1", "1", "x"));
  ResolutionReport rep = validate_resolution(r, 4);
  CHECK_FALSE(rep.ok());
  REQUIRE_FALSE(rep.failures.empty());
}

TEST_CASE("printed t-action is not equivariant") {
  Algebra s(super_jordan_plane());
  FreeResolution good = builtin_super_jordan(s, 4);
  FreeResolution printed = builtin_super_jordan(s, 4, true);
  CHECK(validate_resolution(good, 6).equivariant);
  ResolutionReport rep = validate_resolution(printed, 6);
  CHECK_FALSE(rep.equivariant);
  CHECK(rep.d_squared_zero);
}

TEST_CASE("json round trip") {
  Algebra s(super_jordan_plane());
  FreeResolution r = builtin_super_jordan(s, 4);
  nlohmann::json doc = resolution_to_json(r);
  FreeResolution back(s, "copy");
  resolution_from_json(doc, back);
  REQUIRE(back.num_generators() == r.num_generators());
  for (int id = 0; id < r.num_generators(); ++id) {
    CHECK(back.info(id).label == r.info(id).label);
    CHECK(back.info(id).differential == r.info(id).differential);
    CHECK(back.info(id).t_action == r.info(id).t_action);
  }

  nlohmann::json missing = doc;
  missing["degrees"][0]["generators"][0].erase("t_action");
  FreeResolution m(s, "m");
  CHECK_THROWS_AS(resolution_from_json(missing, m), SchemaError);

  nlohmann::json wrong = doc;
  wrong["degrees"][1]["generators"][0]["degree"] = 3;
  FreeResolution w(s, "w");
  CHECK_THROWS_AS(resolution_from_json(wrong, w), InvalidComplex);
}

TEST_CASE("cohomology dimensions") {
  Algebra j(jordan_plane()), s(super_jordan_plane());
  CHECK(cohomology_dimensions(builtin_jordan(j), 5) == std::vector<int>{1, 2, 1, 0, 0, 0});
  CHECK(cohomology_dimensions(builtin_super_jordan(s, 6), 5) == std::vector<int>{1, 2, 2, 2, 2, 2});
  CHECK_THROWS(cohomology_dimensions(builtin_super_jordan(s, 3), 5));
}

TEST_CASE("t powers are inverse") {
  Algebra s(super_jordan_plane());
  FreeResolution r = builtin_super_jordan(s, 4);
  Chain v = r.term("y", "y2x^2", "x") + r.term("1", "x^3", "yx");
  Chain tv = r.t_power(3, v);
  CHECK(r.t_power(-3, tv) == v);
  CHECK(r.t_power(0, v) == v);
  CHECK(r.t_power(1, v) == r.t_act(v));
}

TEST_CASE("lifting the identity") {
  Algebra j(jordan_plane());
  FreeResolution r = builtin_jordan(j);
  auto base = [](const Slots& g) { return Chain(g); };
  LiftedChainMap a(r, r, base);
  LiftedChainMap b(r, r, base, LiftOptions{LiftStrategy::RandomKernel, 7});
  CHECK(check_chain_map(a, 2, 5).ok);
  CHECK(check_chain_map(b, 2, 5).ok);
  CHECK(lift_equivariant(a, 2, 5));
  HomotopyResult h = find_homotopy(a, b, 2, 5);
  CHECK(h.found);

  // id and 0 agree on nothing in degree 0, so no homotopy exists.
  FunctionChainMap zero(r, r, [](int, const Slots&) { return Chain(); });
  HomotopyResult none = find_homotopy(a, zero, 2, 3);
  CHECK_FALSE(none.found);
  CHECK_FALSE(none.witness.empty());
}
