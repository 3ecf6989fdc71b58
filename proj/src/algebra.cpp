#include "braidcoh/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "braidcoh/errors.hpp"

namespace braidcoh {

Scalar augment(const AlgebraElement& e) { return e.coefficient(Word()); }

Algebra::Algebra(Presentation p, int truncation, Checks checks) : p_(std::move(p)), truncation_(truncation) {
  validate_structure();
  if (checks == Checks::Full) validate_action();
}

void Algebra::validate_structure() const {
  const std::size_t n = p_.generators.size();
  if (n == 0) throw PresentationError("presentation has no generators");
  if (n > 250) throw PresentationError("too many generators");
  if (p_.rank.size() != n) throw PresentationError("precedence order does not cover every generator");
  std::vector<int> seen(n, 0);
  for (int r : p_.rank) {
    if (r < 0 || r >= static_cast<int>(n) || seen[r]++) throw PresentationError("precedence order is not a permutation");
  }
  for (const auto& g : p_.generators) {
    if (g.degree < 1) throw PresentationError("generator '" + g.name + "' must have positive degree");
  }
  std::set<Word> lhs_seen;
  for (const auto& r : p_.rules) {
    std::string l = p_.spell(r.lhs);
    if (r.lhs.empty()) throw PresentationError("rule with empty left-hand side");
    if (!lhs_seen.insert(r.lhs).second) throw PresentationError("two rules share the left-hand side " + l);
    for (const auto& [w, c] : r.rhs) {
      if (p_.degree(w) != p_.degree(r.lhs)) {
        throw PresentationError("rule " + l + " is not homogeneous: term " + p_.spell(w));
      }
      if (!p_.less(w, r.lhs)) {
        throw PresentationError("rule " + l + " has a right-hand term " + p_.spell(w) + " that is not smaller");
      }
    }
  }
  if (p_.t_images.size() != n || p_.t_inverse_images.size() != n) {
    throw PresentationError("t-action must be given on every generator");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto* img : {&p_.t_images[i], &p_.t_inverse_images[i]}) {
      for (const auto& [w, c] : *img) {
        if (p_.degree(w) != p_.generators[i].degree) {
          throw PresentationError("t-action does not preserve the degree of '" + p_.generators[i].name + "'");
        }
      }
    }
  }
}

void Algebra::validate_action() const {
  for (int i = 0; i < num_generators(); ++i) {
    Word g = Word::letter(i);
    const auto& name = p_.generators[i].name;
    if (act(1, act(-1, g)) != AlgebraElement(g) || act(-1, act(1, g)) != AlgebraElement(g)) {
      throw PresentationError("t and t^-1 are not inverse on '" + name + "'");
    }
  }
  for (const auto& r : p_.rules) {
    for (int s : {1, -1}) {
      AlgebraElement lhs = normal_form(act_once(s, r.lhs));
      AlgebraElement rhs;
      for (const auto& [w, c] : r.rhs) rhs.add(act_once(s, w), c);
      if (lhs != normal_form(rhs)) {
        throw PresentationError("t-action does not preserve the relation " + p_.spell(r.lhs));
      }
    }
  }
}

void Algebra::check_window(const Word& w) const {
  if (truncation_ == kUnbounded) return;
  int d = p_.degree(w);
  if (d > truncation_) throw TruncationExceeded(d, truncation_);
}

const AlgebraElement& Algebra::normal_form(const Word& w) const {
  if (auto it = nf_cache_.find(w); it != nf_cache_.end()) return it->second;
  check_window(w);
  std::size_t best = std::string::npos;
  const RewriteRule* rule = nullptr;
  for (const auto& r : p_.rules) {
    std::size_t pos = w.find(r.lhs);
    if (pos < best) {
      best = pos;
      rule = &r;
    }
  }
  AlgebraElement result;
  if (rule == nullptr) {
    result.add(w, Scalar(1));
  } else {
    Word prefix = w.subword(0, best), suffix = w.subword(best + rule->lhs.size());
    for (const auto& [u, c] : rule->rhs) result.add(normal_form(prefix + u + suffix), c);
  }
  return nf_cache_.emplace(w, std::move(result)).first->second;
}

AlgebraElement Algebra::normal_form(const AlgebraElement& raw) const {
  AlgebraElement out;
  for (const auto& [w, c] : raw) out.add(normal_form(w), c);
  return out;
}

AlgebraElement Algebra::reduce(const Word& w, ReductionStrategy strategy) const {
  std::unordered_map<Word, AlgebraElement> memo;
  std::function<AlgebraElement(const Word&)> go = [&](const Word& v) -> AlgebraElement {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    check_window(v);
    std::size_t chosen = std::string::npos;
    const RewriteRule* rule = nullptr;
    for (const auto& r : p_.rules) {
      std::size_t pos = strategy == ReductionStrategy::Leftmost ? v.find(r.lhs) : v.letters().rfind(r.lhs.letters());
      if (pos == std::string::npos) continue;
      bool better = rule == nullptr ||
                    (strategy == ReductionStrategy::Leftmost ? pos < chosen : pos > chosen);
      if (better) {
        chosen = pos;
        rule = &r;
      }
    }
    AlgebraElement result;
    if (rule == nullptr) {
      result.add(v, Scalar(1));
    } else {
      Word prefix = v.subword(0, chosen), suffix = v.subword(chosen + rule->lhs.size());
      for (const auto& [u, c] : rule->rhs) result.add(go(prefix + u + suffix), c);
    }
    memo.emplace(v, result);
    return result;
  };
  return go(w);
}

bool Algebra::is_irreducible(const Word& w) const {
  for (const auto& r : p_.rules) {
    if (w.find(r.lhs) != std::string::npos) return false;
  }
  return true;
}

AlgebraElement Algebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) out.add(normal_form(u + v), cu * cv);
  }
  return out;
}

AlgebraElement Algebra::act_once(int sign, const Word& w) const {
  const auto& images = sign > 0 ? p_.t_images : p_.t_inverse_images;
  AlgebraElement out = unit();
  for (std::size_t i = 0; i < w.size(); ++i) out = multiply(out, images[w[i]]);
  return out;
}

const AlgebraElement& Algebra::act(int k, const Word& w) const {
  if (k == 0) return normal_form(w);
  auto& table = act_cache_[k];
  if (auto it = table.find(w); it != table.end()) return it->second;
  int s = k > 0 ? 1 : -1;
  AlgebraElement result;
  if (k == s) {
    result = normal_form(act_once(s, w));
  } else {
    AlgebraElement inner = act(k - s, w);
    for (const auto& [u, c] : inner) result.add(act(s, u), c);
  }
  return table.emplace(w, std::move(result)).first->second;
}

AlgebraElement Algebra::act(int k, const AlgebraElement& e) const {
  AlgebraElement out;
  for (const auto& [w, c] : e) out.add(act(k, w), c);
  return out;
}

const std::vector<Word>& Algebra::graded_basis(int n) const {
  if (n < 0) throw Error("negative degree");
  if (truncation_ != kUnbounded && n > truncation_) throw TruncationExceeded(n, truncation_);
  if (auto it = basis_cache_.find(n); it != basis_cache_.end()) return it->second;
  std::vector<int> letters(num_generators());
  for (int i = 0; i < num_generators(); ++i) letters[p_.rank[i]] = i;
  std::vector<Word> out;
  std::function<void(const Word&, int)> extend = [&](const Word& w, int d) {
    if (d == n) {
      out.push_back(w);
      return;
    }
    for (int g : letters) {
      int dg = p_.generators[g].degree;
      if (d + dg > n) continue;
      Word next = w + Word::letter(g);
      bool ok = true;
      for (const auto& r : p_.rules) {
        if (next.ends_with(r.lhs)) {
          ok = false;
          break;
        }
      }
      if (ok) extend(next, d + dg);
    }
  };
  extend(Word(), 0);
  return basis_cache_.emplace(n, std::move(out)).first->second;
}

CompletionReport Algebra::complete_overlaps(int max_degree) const {
  CompletionReport report;
  report.max_degree = max_degree;
  const auto& rules = p_.rules;
  auto record = [&](const char* kind, const Word& w, AlgebraElement a, AlgebraElement b) {
    Ambiguity amb;
    amb.kind = kind;
    amb.word = w;
    amb.degree = p_.degree(w);
    amb.difference = normal_form(a) - normal_form(b);
    amb.resolves = amb.difference.empty();
    report.confluent = report.confluent && amb.resolves;
    report.ambiguities.push_back(std::move(amb));
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& li = rules[i].lhs;
      const Word& lj = rules[j].lhs;
      for (std::size_t k = 1; k < li.size() && k < lj.size(); ++k) {
        if (li.subword(li.size() - k) != lj.subword(0, k)) continue;
        Word w = li + lj.subword(k);
        if (p_.degree(w) > max_degree) continue;
        AlgebraElement a, b;
        for (const auto& [u, c] : rules[i].rhs) a.add(u + lj.subword(k), c);
        for (const auto& [u, c] : rules[j].rhs) b.add(li.subword(0, li.size() - k) + u, c);
        record("overlap", w, a, b);
      }
      if (i != j && lj.size() < li.size()) {
        for (std::size_t pos = li.find(lj); pos != std::string::npos; pos = li.find(lj, pos + 1)) {
          if (p_.degree(li) > max_degree) break;
          AlgebraElement b;
          for (const auto& [u, c] : rules[j].rhs) b.add(li.subword(0, pos) + u + li.subword(pos + lj.size()), c);
          record("inclusion", li, rules[i].rhs, b);
        }
      }
    }
  }
  // Exhaustive cross-check of reduction strategies on all words, while the word count stays small.
  std::vector<std::vector<Word>> by_degree(max_degree + 1);
  by_degree[0].push_back(Word());
  for (int d = 1; d <= max_degree; ++d) {
    for (int g = 0; g < num_generators(); ++g) {
      int dg = p_.generators[g].degree;
      if (dg > d) continue;
      for (const auto& w : by_degree[d - dg]) by_degree[d].push_back(w + Word::letter(g));
    }
    if (by_degree[d].size() > 4096) break;
    for (const auto& w : by_degree[d]) {
      if (reduce(w, ReductionStrategy::Leftmost) != reduce(w, ReductionStrategy::Rightmost)) {
        report.strategies_agree = false;
      }
    }
    report.strategies_checked_through = d;
  }
  return report;
}

Presentation complete_presentation(const Presentation& p, int max_degree, int max_rounds) {
  Presentation current = p;
  for (int round = 0; round < max_rounds; ++round) {
    Algebra a(current, Algebra::kUnbounded, Algebra::Checks::Structural);
    CompletionReport rep = a.complete_overlaps(max_degree);
    bool added = false;
    std::set<Word> new_lhs;
    for (const auto& amb : rep.ambiguities) {
      if (amb.resolves) continue;
      const Word* lead = nullptr;
      for (const auto& [w, c] : amb.difference) {
        if (lead == nullptr || current.less(*lead, w)) lead = &w;
      }
      if (!new_lhs.insert(*lead).second) continue;
      Scalar lc = amb.difference.coefficient(*lead);
      AlgebraElement rhs;
      for (const auto& [w, c] : amb.difference) {
        if (w != *lead) rhs.add(w, -c / lc);
      }
      current.rules.push_back({*lead, rhs});
      added = true;
    }
    if (!added) {
      Algebra check(current);
      return current;
    }
  }
  throw PresentationError("completion did not finish within the round limit");
}

}  // namespace braidcoh
