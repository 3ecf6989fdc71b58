#include <doctest.h>

#include <functional>
#include <set>

#include "braidcoh/algebra.hpp"
#include "braidcoh/errors.hpp"
#include "braidcoh/expression.hpp"

using namespace braidcoh;

namespace {

AlgebraElement E(const Algebra& a, const char* text) { return parse_expression(text, a); }

// Words over {x, y} of degree n avoiding the given factors, counted naively.
int brute_count(int n, const std::vector<std::string>& forbidden) {
  int count = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::string w;
    for (int i = 0; i < n; ++i) w += (mask >> (n - 1 - i)) & 1 ? 'y' : 'x';
    bool ok = true;
    for (const auto& f : forbidden) ok = ok && w.find(f) == std::string::npos;
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("jordan normal forms") {
  Algebra a(jordan_plane());
  const auto& p = a.presentation();
  CHECK(p.format(a.normal_form(p.parse_word("yx"))) == "x*y - 1/2*x^2");
  CHECK(E(a, "y*x") == E(a, "x*y - 1/2*x^2"));
  // y x^2 = x^2 y - x^3
  CHECK(E(a, "y*x^2") == E(a, "x^2*y - x^3"));
  CHECK(E(a, "y^2*x") == E(a, "x*y^2 - x^2*y + 1/2*x^3"));
  CHECK(augment(E(a, "3 + x")) == 3);
  CHECK(augment(E(a, "x*y")) == 0);
}

TEST_CASE("super jordan normal forms") {
  Algebra a(super_jordan_plane());
  CHECK(E(a, "x*x").empty());
  CHECK(E(a, "y*y*x") == E(a, "x*y*y + x*y*x"));
  // y x y x = y (xyx)
  CHECK(E(a, "(x*y)^2") == E(a, "x*y*x*y"));
  CHECK(a.is_irreducible(a.presentation().parse_word("xyxy")));
  CHECK_FALSE(a.is_irreducible(a.presentation().parse_word("xyyx")));
}

TEST_CASE("graded dimensions") {
  Algebra j(jordan_plane()), s(super_jordan_plane());
  for (int n = 0; n <= 10; ++n) {
    CHECK(j.graded_basis(n).size() == static_cast<std::size_t>(n + 1));
    CHECK(s.graded_basis(n).size() == static_cast<std::size_t>(n + 1));
    CHECK(static_cast<int>(s.graded_basis(n).size()) == brute_count(n, {"xx", "yyx"}));
  }
  const auto& b = j.graded_basis(3);
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(j.presentation().less(b[i - 1], b[i]));
}

TEST_CASE("t-action") {
  Algebra j(jordan_plane()), s(super_jordan_plane());
  CHECK(j.act(1, E(j, "y")) == E(j, "x + y"));
  CHECK(j.act(5, E(j, "y")) == E(j, "5*x + y"));
  CHECK(j.act(-1, E(j, "y")) == E(j, "y - x"));
  CHECK(s.act(1, E(s, "x")) == E(s, "-x"));
  CHECK(s.act(1, E(s, "y")) == E(s, "x - y"));
  CHECK(s.act(2, E(s, "y")) == E(s, "y - 2*x"));
  CHECK(s.act(-1, E(s, "y")) == E(s, "-x - y"));
  // t is an algebra map on normal forms
  for (const char* u : {"x*y", "y^2", "x*y^2"}) {
    for (const char* v : {"x", "y", "x*y"}) {
      CHECK(j.act(1, j.multiply(E(j, u), E(j, v))) == j.multiply(j.act(1, E(j, u)), j.act(1, E(j, v))));
      CHECK(s.act(1, s.multiply(E(s, u), E(s, v))) == s.multiply(s.act(1, E(s, u)), s.act(1, E(s, v))));
    }
  }
}

TEST_CASE("confluence and reduction strategies") {
  for (auto p : {jordan_plane(), super_jordan_plane()}) {
    Algebra a(p);
    CompletionReport rep = a.complete_overlaps(8);
    CHECK(rep.confluent);
    CHECK(rep.strategies_agree);
    CHECK(rep.strategies_checked_through == 8);
  }
  Algebra s(super_jordan_plane());
  CompletionReport rep = s.complete_overlaps(6);
  std::set<std::string> words;
  for (const auto& amb : rep.ambiguities) words.insert(s.presentation().spell(amb.word));
  CHECK(words == std::set<std::string>{"xxx", "yyxx"});
}

TEST_CASE("completion of a non-confluent presentation") {
  Presentation p = free_presentation({{"x", 1}, {"y", 1}});
  p.rules.push_back({p.parse_word("yx"), AlgebraElement()});
  p.rules.push_back({p.parse_word("yy"), AlgebraElement(p.parse_word("xy"))});
  Algebra a(p);
  CompletionReport rep = a.complete_overlaps(4);
  CHECK_FALSE(rep.confluent);
  Presentation done = complete_presentation(p, 6);
  CHECK(done.rules.size() > p.rules.size());
  CHECK(Algebra(done).complete_overlaps(6).confluent);
}

TEST_CASE("presentation validation") {
  Presentation p = jordan_plane();
  p.rules[0].rhs.add(p.parse_word("x"), Scalar(1));
  CHECK_THROWS_AS(Algebra{p}, PresentationError);

  Presentation q = jordan_plane();
  q.rules[0].lhs = q.parse_word("xy");
  q.rules[0].rhs = AlgebraElement(q.parse_word("yx"));
  CHECK_THROWS_AS(Algebra{q}, PresentationError);

  Presentation r = jordan_plane();
  r.t_images[1] = AlgebraElement(r.parse_word("y"));
  CHECK_THROWS_AS(Algebra{r}, PresentationError);
}

TEST_CASE("json round trip and truncation") {
  Presentation p = super_jordan_plane();
  Presentation back = presentation_from_json(presentation_to_json(p));
  Algebra a(back);
  CHECK(E(a, "y*y*x") == E(a, "x*y*y + x*y*x"));
  CHECK_THROWS_AS(presentation_from_json(nlohmann::json::parse(R"({"generators": []})")), SchemaError);

  Algebra t(jordan_plane(), 3);
  CHECK_NOTHROW(E(t, "y^3"));
  CHECK_THROWS_AS(E(t, "y^4"), TruncationExceeded);
  CHECK_THROWS_AS(E(t, "x +"), ParseError);
  CHECK_THROWS_AS(E(t, "q"), ParseError);
}

TEST_CASE("scalars") {
  CHECK(parse_scalar("-2/4") == Scalar(-1, 2));
  CHECK(to_string(parse_scalar(" 6/3 ")) == "2");
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
}
