#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "braidcoh/linear_combination.hpp"

namespace braidcoh {

struct Generator {
  std::string name;
  int degree = 1;
};

// lhs -> rhs, where every word of rhs is strictly smaller than lhs.
struct RewriteRule {
  Word lhs;
  AlgebraElement rhs;
};

// Generators, monomial order, rewriting rules and the kZ-action on generators.
// Words are ordered degree-lexicographically; letters compare by `rank`.
struct Presentation {
  std::string name;
  std::vector<Generator> generators;
  std::vector<int> rank;  // rank[id] = position of generator id in the precedence order
  std::vector<RewriteRule> rules;
  std::vector<AlgebraElement> t_images;
  std::vector<AlgebraElement> t_inverse_images;

  int degree(const Word& w) const;
  // Strict monomial order.
  bool less(const Word& a, const Word& b) const;
  std::optional<int> generator_id(std::string_view name) const;

  // "xyy", "1" or "" for the unit. Generator names may be longer than one character.
  Word parse_word(std::string_view spelled) const;
  // Concatenated names, "1" for the unit.
  std::string spell(const Word& w) const;
  // Human form with powers: "x*y^2".
  std::string format_word(const Word& w) const;
  std::string format(const AlgebraElement& e) const;
};

Presentation jordan_plane();
Presentation super_jordan_plane();
// Free algebra on primitive generators of the given degrees; t acts trivially.
Presentation free_presentation(const std::vector<Generator>& gens);

Presentation presentation_from_json(const nlohmann::json& doc);
nlohmann::json presentation_to_json(const Presentation& p);
Presentation load_presentation(const std::string& path);

nlohmann::json element_to_json(const Presentation& p, const AlgebraElement& e);
AlgebraElement element_from_json(const Presentation& p, const nlohmann::json& terms);

}  // namespace braidcoh
