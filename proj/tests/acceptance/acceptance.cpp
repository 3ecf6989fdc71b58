// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "braidcoh/bar.hpp"
#include "braidcoh/braided.hpp"
#include "braidcoh/cup.hpp"
#include "braidcoh/duoidal.hpp"
#include "braidcoh/resolution.hpp"

using namespace braidcoh;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

bool run(int id, const char* name, double budget_s, const std::function<Verdict()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = budget_s <= 0 || dt < budget_s;
  bool ok = v.pass && in_time;
  std::string timing = std::to_string(dt).substr(0, 6) + " s";
  if (budget_s > 0) timing += " / " + std::to_string(static_cast<int>(budget_s)) + " s";
  std::printf("[%s] %d %s: %s (%s)%s\n", ok ? "PASS" : "FAIL", id, name, v.detail.c_str(), timing.c_str(),
              in_time ? "" : " over budget");
  std::fflush(stdout);
  return ok;
}

std::string xp(int n) { return n == 1 ? "x" : "x^" + std::to_string(n); }
std::string y2(int m) { return m == 1 ? "y2x" : "y2x^" + std::to_string(m); }

Verdict jordan_identity() {
  Algebra j(jordan_plane());
  FreeResolution r = builtin_jordan(j);
  Comparison cmp(r);
  const int rid = r.id_of("r");
  Cochain x = dual_cochain(r, "x"), y = dual_cochain(r, "y");
  int good = 0;
  for (const auto* psi : {&x, &y}) {
    for (const auto* phi : {&x, &y}) {
      Scalar plain = cup_opposite(cmp, *psi, *phi, 2).at(rid);
      Scalar braided = cup_braided(cmp, *psi, *phi, 2).at(rid);
      Scalar want = phi->at(r.id_of("y")) * psi->at(r.id_of("x")) - phi->at(r.id_of("x")) * psi->at(r.id_of("y")) +
                    Scalar(1, 2) * phi->at(r.id_of("x")) * psi->at(r.id_of("x"));
      if (braided == -plain && plain == want) ++good;
    }
  }
  return {good == 4, std::to_string(good) + "/4 pairs"};
}

Verdict super_jordan_commutativity() {
  Algebra s(super_jordan_plane());
  FreeResolution r = builtin_super_jordan(s, 7);
  Comparison cmp(r);
  int pairs = 0, rows = 0, table_checks = 0;
  std::string bad;
  for (int n = 2; n <= 6; ++n) {
    for (int p = 1; p < n; ++p) {
      const int q = n - p;
      CommutativityReport rep = verify_braided_commutativity(cmp, p, q, n + 2);
      ++pairs;
      rows += static_cast<int>(rep.rows.size());
      if (!rep.ok && bad.empty()) bad = rep.witness;
      if (p < 2 || q < 2) continue;
      // φ(y²x^{q-1})ψ(x^p) + (-1)^q φ(x^q)ψ(y²x^{p-1}) on y²x^{p+q-1}
      const int w = r.id_of(y2(n - 1));
      for (const char* pl : {"x", "y"}) {
        for (const char* ql : {"x", "y"}) {
          Cochain psi = dual_cochain(r, pl[0] == 'x' ? xp(p) : y2(p - 1));
          Cochain phi = dual_cochain(r, ql[0] == 'x' ? xp(q) : y2(q - 1));
          Scalar want = phi.at(r.id_of(y2(q - 1))) * psi.at(r.id_of(xp(p))) +
                        sign_of(q) * phi.at(r.id_of(xp(q))) * psi.at(r.id_of(y2(p - 1)));
          ++table_checks;
          if (cup_opposite(cmp, psi, phi, n + 2).at(w) != want && bad.empty()) {
            bad = "table value at p=" + std::to_string(p) + " q=" + std::to_string(q);
          }
        }
      }
    }
  }
  std::string d = std::to_string(pairs) + " (p,q) pairs, " + std::to_string(rows) + " rows, " +
                  std::to_string(table_checks) + " closed-form table values";
  if (!bad.empty()) d += "; first failure " + bad;
  return {bad.empty(), d};
}

Verdict cohomology_dims() {
  Algebra j(jordan_plane()), s(super_jordan_plane());
  auto hj = cohomology_dimensions(builtin_jordan(j), 5);
  FreeResolution rs = builtin_super_jordan(s, 6);
  auto hs = cohomology_dimensions(rs, 5);
  auto fmt = [](const std::vector<int>& v) {
    std::string o;
    for (int x : v) o += (o.empty() ? "" : ",") + std::to_string(x);
    return "(" + o + ")";
  };
  bool ok = hj == std::vector<int>{1, 2, 1, 0, 0, 0} && hs == std::vector<int>{1, 2, 2, 2, 2, 2} &&
            is_minimal(builtin_jordan(j)) && is_minimal(rs);
  return {ok, "jordan " + fmt(hj) + ", super jordan " + fmt(hs)};
}

Verdict dec_identities() {
  int cases = 0, checked = 0;
  std::string bad;
  for (auto p : {jordan_plane(), super_jordan_plane()}) {
    Algebra a(p);
    BraidedBialgebra b(a);
    for (int n = 2; n <= 4; ++n) {
      for (int pp = 1; pp < n; ++pp) {
        DecReport r = verify_dec_cocommutativity(b, pp, n - pp, 5);
        cases += r.cases;
        ++checked;
        if (!r.ok() && bad.empty()) bad = r.witness;
      }
    }
  }
  std::string d = std::to_string(checked) + " (p,q) on both algebras, " + std::to_string(cases) + " basis tensors";
  if (!bad.empty()) d += "; first failure " + bad;
  return {bad.empty(), d};
}

Verdict coduoid() {
  Algebra j(jordan_plane());
  BraidedBialgebra b(j);
  FreeResolution r = builtin_jordan(j);
  CoduoidReport rep = verify_coduoid(r, b, 3, 6);
  std::string d = "jordan D=6, " + std::to_string(rep.homotopy_values) + " homotopy values";
  if (!rep.ok()) d += "; " + rep.witness;
  return {rep.ok(), d};
}

Verdict property_suites() {
  std::vector<std::string> failed;
  int braid_cases = 0;
  const char* names[] = {"jordan", "super jordan"};
  int i = 0;
  for (auto p : {jordan_plane(), super_jordan_plane()}) {
    const std::string name = names[i++];
    Algebra a(p);
    AxiomReport br = check_braid_identities(a, 200, 4, 20261016);
    braid_cases += br.cases;
    if (!br.ok || br.cases < 200) failed.push_back(name + " braid");
    if (!BraidedBialgebra(a).check_bimonoid_axioms(5).ok) failed.push_back(name + " bimonoid");
    CompletionReport c = a.complete_overlaps(8);
    if (!c.confluent || !c.strategies_agree) failed.push_back(name + " confluence");
  }
  Algebra j(jordan_plane()), s(super_jordan_plane());
  FreeResolution rj = builtin_jordan(j);
  FreeResolution rs = builtin_super_jordan(s, 9);
  for (const FreeResolution* r : {&rj, &rs}) {
    ResolutionReport v = validate_resolution(*r, 8);
    if (!v.d_squared_zero || !v.exact || !v.graded) failed.push_back(r->name() + " resolution");
    if (!v.equivariant) failed.push_back(r->name() + " t-equivariance");
  }
  // Cup tables under the seeded lift and two independent random lifts.
  int tables = 0;
  for (const FreeResolution* r : {&rj, &rs}) {
    ComparisonOptions a_opts, b_opts;
    a_opts.closed_form_seeds = b_opts.closed_form_seeds = false;
    a_opts.g_lift = LiftOptions{LiftStrategy::RandomKernel, 1};
    b_opts.g_lift = LiftOptions{LiftStrategy::RandomKernel, 2};
    Comparison seeded(*r), c1(*r, a_opts), c2(*r, b_opts);
    const int top = r->finite_length() ? r->max_level() : 6;
    for (int n = 2; n <= top; ++n) {
      for (int p = 1; p < n; ++p) {
        auto t0 = cup_table(seeded, p, n - p, n + 2);
        auto t1 = cup_table(c1, p, n - p, n + 2);
        auto t2 = cup_table(c2, p, n - p, n + 2);
        for (std::size_t k = 0; k < t0.size(); ++k) {
          ++tables;
          if (!(t0[k].product == t1[k].product && t1[k].product == t2[k].product)) {
            failed.push_back(r->name() + " lift dependence");
            break;
          }
        }
      }
    }
  }
  std::string d = std::to_string(braid_cases) + " braid cases, " + std::to_string(tables) +
                  " table entries under 3 lifts, resolutions through degree 8";
  for (const auto& f : failed) d += "; failed " + f;
  return {failed.empty(), d};
}

// Words over {x, y} avoiding the factors xx and yyx, by direct enumeration.
long brute_force_count(int n) {
  long count = 0;
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::string w;
    for (int i = 0; i < n; ++i) w += (mask >> i) & 1 ? 'y' : 'x';
    if (w.find("xx") == std::string::npos && w.find("yyx") == std::string::npos) ++count;
  }
  return count;
}

Verdict super_jordan_dims() {
  Algebra s(super_jordan_plane());
  std::string dims;
  bool ok = true;
  for (int n = 0; n <= 10; ++n) {
    long got = static_cast<long>(s.graded_basis(n).size());
    ok = ok && got == brute_force_count(n);
    dims += (dims.empty() ? "" : ",") + std::to_string(got);
  }
  return {ok, "dim A_n for n<=10: " + dims};
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, "jordan cup identity on r", 1, jordan_identity);
  all &= run(2, "super jordan braided commutativity, p+q<=6", 60, super_jordan_commutativity);
  all &= run(3, "cohomology dimensions through degree 5", 0, cohomology_dims);
  all &= run(4, "strict dec identities, p+q<=4, degree<=5", 120, dec_identities);
  all &= run(5, "coduoid homotopy", 0, coduoid);
  all &= run(6, "structural property suites", 0, property_suites);
  all &= run(7, "super jordan dimensions against brute force", 0, super_jordan_dims);
  return all ? 0 : 1;
}
