#include "braidcoh/complex.hpp"

#include <algorithm>
#include <random>

#include "braidcoh/errors.hpp"

namespace braidcoh {

Chain BimoduleComplex::t_act(const Chain&) const { throw InvalidComplex("complex carries no t-action"); }

int BimoduleComplex::level(const Slots&) const { throw InvalidComplex("complex does not report levels of keys"); }

Chain BimoduleComplex::t_power_nonneg(int k, const Chain& v) const {
  Chain out = v;
  for (int i = 0; i < k; ++i) out = t_act(out);
  return out;
}

Chain BimoduleComplex::act(const AlgebraElement& left, const Chain& v, const AlgebraElement& right) const {
  Chain out;
  for (const auto& [l, cl] : left) {
    for (const auto& [r, cr] : right) out.add(act(l, v, r), cl * cr);
  }
  return out;
}

std::string FreeBimoduleComplex::describe(const Slots& generator) const {
  const Presentation& p = algebra().presentation();
  std::string out;
  for (const auto& w : generator) out += (out.empty() ? "" : "|") + p.spell(w);
  return out;
}

std::optional<Chain> BoundarySolver::solve_outer(int n, int degree, const Chain& z) {
  if (n < 1) throw InvalidComplex("no differential into level " + std::to_string(n));
  auto key = std::make_pair(n, degree);
  auto it = outer_solvers_.find(key);
  if (it == outer_solvers_.end()) {
    std::vector<int> cols;
    EchelonSolver s;
    const Piece& src = piece(n, degree);
    for (std::size_t i = 0; i < src.basis.size(); ++i) {
      const Slots& b = src.basis[i];
      if (b.front().empty() && b.back().empty()) continue;
      cols.push_back(static_cast<int>(i));
      s.add_column(coordinates(n - 1, degree, c_.differential(n, Chain(b))));
    }
    it = outer_solvers_.emplace(key, std::make_pair(std::move(cols), std::move(s))).first;
  }
  auto x = it->second.second.solve(coordinates(n - 1, degree, z));
  if (!x) return std::nullopt;
  Chain out;
  const Piece& src = piece(n, degree);
  for (const auto& [j, c] : x->entries()) out.add(src.basis[it->second.first[j]], c);
  return out;
}

const BoundarySolver::Piece& BoundarySolver::piece(int n, int degree) {
  auto key = std::make_pair(n, degree);
  if (auto it = pieces_.find(key); it != pieces_.end()) return it->second;
  Piece p;
  if (n >= 0 && degree >= 0) p.basis = c_.basis(n, degree);
  for (std::size_t i = 0; i < p.basis.size(); ++i) p.index.emplace(p.basis[i], static_cast<int>(i));
  return pieces_.emplace(key, std::move(p)).first->second;
}

SparseVec BoundarySolver::coordinates(int n, int degree, const Chain& v) {
  const Piece& p = piece(n, degree);
  std::vector<SparseVec::Entry> entries;
  entries.reserve(v.size());
  for (const auto& [key, c] : v) {
    auto it = p.index.find(key);
    if (it == p.index.end()) {
      throw InvalidComplex("element outside the expected piece (n=" + std::to_string(n) +
                           ", degree=" + std::to_string(degree) + ")");
    }
    entries.emplace_back(it->second, c);
  }
  return SparseVec::from_unsorted(std::move(entries));
}

Chain BoundarySolver::from_coordinates(int n, int degree, const SparseVec& x) {
  const Piece& p = piece(n, degree);
  Chain out;
  for (const auto& [i, c] : x.entries()) out.add(p.basis[i], c);
  return out;
}

EchelonSolver& BoundarySolver::solver(int n, int degree) {
  auto key = std::make_pair(n, degree);
  if (auto it = solvers_.find(key); it != solvers_.end()) return it->second;
  EchelonSolver s;
  const Piece& src = piece(n, degree);
  for (const auto& b : src.basis) s.add_column(coordinates(n - 1, degree, c_.differential(n, Chain(b))));
  return solvers_.emplace(key, std::move(s)).first->second;
}

std::optional<Chain> BoundarySolver::solve(int n, int degree, const Chain& z, std::optional<std::uint64_t> rng_seed) {
  if (n < 1) throw InvalidComplex("no differential into level " + std::to_string(n));
  EchelonSolver& s = solver(n, degree);
  auto x = s.solve(coordinates(n - 1, degree, z));
  if (!x) return std::nullopt;
  if (rng_seed) {
    std::mt19937_64 rng(*rng_seed);
    for (const auto& k : s.kernel()) {
      long r = static_cast<long>(rng() % 7) - 3;
      x->axpy(Scalar(r), k);
    }
  }
  return from_coordinates(n, degree, *x);
}

const Chain& ChainMap::value(int n, const Slots& generator) const {
  auto key = std::make_pair(n, generator);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Chain v = compute(n, generator);
  return memo_.emplace(std::move(key), std::move(v)).first->second;
}

void ChainMap::assign(int n, const Slots& generator, Chain value) {
  memo_[std::make_pair(n, generator)] = std::move(value);
}

bool ChainMap::has_value(int n, const Slots& generator) const {
  return memo_.count(std::make_pair(n, generator)) > 0;
}

Chain ChainMap::apply(int n, const Chain& x) const {
  Chain out;
  for (const auto& [key, c] : x) {
    FreeBimoduleComplex::Split s = src_.split(key);
    const Chain& v = value(n, s.generator);
    if (s.left.empty() && s.right.empty()) {
      out.add(v, c);
    } else {
      out.add(dst_.act(s.left, v, s.right), c);
    }
  }
  return out;
}

Chain FunctionChainMap::compute(int n, const Slots& g) const {
  if (!fn_) throw InvalidComplex("no value assigned for generator " + source().describe(g));
  return fn_(n, g);
}

LiftedChainMap::LiftedChainMap(const FreeBimoduleComplex& s, const BimoduleComplex& t, Base base, LiftOptions opts,
                               std::shared_ptr<BoundarySolver> solver)
    : ChainMap(s, t), base_(std::move(base)), opts_(opts), solver_(std::move(solver)) {
  if (!solver_) solver_ = std::make_shared<BoundarySolver>(t);
}

Chain LiftedChainMap::compute(int n, const Slots& g) const {
  if (n == 0) return base_(g);
  Chain z = apply(n - 1, source().differential(n, Chain(g)));
  if (seeder_) {
    if (auto v = seeder_(n, g)) {
      Chain rest = z - target().differential(n, *v);
      if (rest.empty()) {
        ++accepted_;
        return *v;
      }
      if (auto u = solver_->solve_outer(n, source().degree(g), rest)) {
        ++accepted_;
        ++completed_;
        return *v + *u;
      }
      rejected_.push_back("level " + std::to_string(n) + ", generator " + source().describe(g));
    }
  }
  if (contraction_) return contraction_(n, z);
  std::optional<std::uint64_t> seed;
  if (opts_.strategy == LiftStrategy::RandomKernel) {
    std::uint64_t h = opts_.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n);
    for (const auto& w : g) h = h * 1099511628211ULL ^ std::hash<Word>{}(w);
    seed = h;
  }
  auto y = solver_->solve(n, source().degree(g), z, seed);
  if (!y) {
    throw LiftFailure("target is not exact: no lift for generator " + source().describe(g) + " at level " +
                      std::to_string(n));
  }
  return *y;
}

bool LiftedChainMap::seed(int n, const Slots& generator, const Chain& v) {
  if (n > 0) {
    Chain want = apply(n - 1, source().differential(n, Chain(generator)));
    if (target().differential(n, v) != want) return false;
  }
  assign(n, generator, v);
  return true;
}

namespace {

// All levels and degrees at once: the greedy level-by-level choice can block later levels.
bool lift_equivariant_joint(LiftedChainMap& f, int max_n, int max_degree, std::string* failure) {
  const FreeBimoduleComplex& src = f.source();
  const BimoduleComplex& dst = f.target();
  BoundarySolver coords(dst);
  struct Block {
    int n;
    Slots g;
    int degree;
    int col0;
    int eq1;  // rows of d f(g) - f(d g)
    int eq2;  // rows of t f(g) - f(t g)
  };
  std::vector<Block> blocks;
  std::map<std::pair<int, Slots>, int> block_of;
  int ncols = 0, nrows = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& g : src.generators(n, max_degree)) {
      const int d = src.degree(g);
      Block b{n, g, d, ncols, 0, 0};
      ncols += static_cast<int>(coords.piece(n, d).basis.size());
      b.eq1 = nrows;
      nrows += static_cast<int>(coords.piece(n - 1, d).basis.size());
      b.eq2 = nrows;
      nrows += static_cast<int>(coords.piece(n, d).basis.size());
      block_of.emplace(std::make_pair(n, g), static_cast<int>(blocks.size()));
      blocks.push_back(std::move(b));
    }
  }
  std::vector<std::vector<SparseVec::Entry>> cols(ncols);
  std::vector<SparseVec::Entry> rhs;
  auto put = [&](int col, int row0, int n, int d, const Chain& v, const Scalar& scale) {
    SparseVec x = coords.coordinates(n, d, v);
    for (const auto& [k, c] : x.entries()) cols[col].emplace_back(row0 + k, c * scale);
  };
  for (const auto& b : blocks) {
    const auto& basis = coords.piece(b.n, b.degree).basis;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Chain e(basis[j]);
      put(b.col0 + static_cast<int>(j), b.eq1, b.n - 1, b.degree, dst.differential(b.n, e), Scalar(1));
      put(b.col0 + static_cast<int>(j), b.eq2, b.n, b.degree, dst.t_act(e), Scalar(1));
    }
    for (const auto& [key, c] : src.differential(b.n, Chain(b.g))) {
      auto s = src.split(key);
      if (b.n == 1) {
        SparseVec x = coords.coordinates(0, b.degree, dst.act(s.left, f.value(0, s.generator), s.right));
        for (const auto& [k, v] : x.entries()) rhs.emplace_back(b.eq1 + k, v * c);
        continue;
      }
      const Block& o = blocks.at(block_of.at(std::make_pair(b.n - 1, s.generator)));
      const auto& ob = coords.piece(o.n, o.degree).basis;
      for (std::size_t j = 0; j < ob.size(); ++j) {
        put(o.col0 + static_cast<int>(j), b.eq1, b.n - 1, b.degree, dst.act(s.left, Chain(ob[j]), s.right), -c);
      }
    }
    for (const auto& [key, c] : src.t_act(Chain(b.g))) {
      auto s = src.split(key);
      const Block& o = blocks.at(block_of.at(std::make_pair(b.n, s.generator)));
      const auto& ob = coords.piece(o.n, o.degree).basis;
      for (std::size_t j = 0; j < ob.size(); ++j) {
        put(o.col0 + static_cast<int>(j), b.eq2, b.n, b.degree, dst.act(s.left, Chain(ob[j]), s.right), -c);
      }
    }
  }
  EchelonSolver solver;
  for (auto& col : cols) solver.add_column(SparseVec::from_unsorted(std::move(col)));
  auto x = solver.solve(SparseVec::from_unsorted(std::move(rhs)));
  if (!x) {
    if (failure) {
      *failure = "no equivariant lift through level " + std::to_string(max_n) + " and degree " +
                 std::to_string(max_degree);
    }
    return false;
  }
  std::vector<Chain> vals(blocks.size());
  std::size_t bi = 0;
  for (const auto& [idx, c] : x->entries()) {
    while (bi + 1 < blocks.size() && blocks[bi + 1].col0 <= idx) ++bi;
    const Block& b = blocks[bi];
    vals[bi].add(coords.piece(b.n, b.degree).basis[idx - b.col0], c);
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) f.assign(blocks[i].n, blocks[i].g, vals[i]);
  return true;
}

}  // namespace

bool lift_equivariant(LiftedChainMap& f, int max_n, int max_degree, std::string* failure) {
  const FreeBimoduleComplex& src = f.source();
  const BimoduleComplex& dst = f.target();
  if (!src.has_t_action() || !dst.has_t_action()) throw InvalidComplex("equivariant lift needs t-actions");
  BoundarySolver coords(dst);
  for (int n = 1; n <= max_n; ++n) {
    std::map<int, std::vector<Slots>> by_degree;
    for (auto& g : src.generators(n, max_degree)) by_degree[src.degree(g)].push_back(g);
    for (const auto& [d, gens] : by_degree) {
      const int m = static_cast<int>(gens.size());
      std::map<Slots, int> pos;
      for (int i = 0; i < m; ++i) pos.emplace(gens[i], i);
      const auto& target_basis = coords.piece(n, d).basis;
      const int r1 = static_cast<int>(coords.piece(n - 1, d).basis.size());
      const int r2 = static_cast<int>(target_basis.size());
      // M[i][j]: coefficient of generator j in t·(generator i)
      std::vector<std::map<int, Scalar>> M(m);
      std::vector<SparseVec::Entry> rhs;
      for (int i = 0; i < m; ++i) {
        Chain z = f.apply(n - 1, src.differential(n, Chain(gens[i])));
        SparseVec zc = coords.coordinates(n - 1, d, z);
        for (const auto& [k, c] : zc.entries()) rhs.emplace_back(i * r1 + k, c);
        Chain tg = src.t_act(Chain(gens[i]));
        Chain known_part;
        for (const auto& [key, c] : tg) {
          auto s = src.split(key);
          auto it = pos.find(s.generator);
          if (it != pos.end()) {
            M[i][it->second] += c;
          } else {
            known_part.add(key, c);
          }
        }
        Chain known = f.apply(n, known_part);
        SparseVec kc = coords.coordinates(n, d, known);
        for (const auto& [k, c] : kc.entries()) {
          rhs.emplace_back(m * r1 + i * r2 + k, c);
        }
      }
      EchelonSolver solver;
      for (int j = 0; j < m; ++j) {
        for (int b = 0; b < r2; ++b) {
          Chain e(target_basis[b]);
          std::vector<SparseVec::Entry> col;
          SparseVec dc = coords.coordinates(n - 1, d, dst.differential(n, e));
          for (const auto& [k, c] : dc.entries()) {
            col.emplace_back(j * r1 + k, c);
          }
          SparseVec tc = coords.coordinates(n, d, dst.t_act(e));
          for (const auto& [k, c] : tc.entries()) {
            col.emplace_back(m * r1 + j * r2 + k, c);
          }
          for (int i = 0; i < m; ++i) {
            auto it = M[i].find(j);
            if (it != M[i].end() && !is_zero(it->second)) col.emplace_back(m * r1 + i * r2 + b, -it->second);
          }
          solver.add_column(SparseVec::from_unsorted(std::move(col)));
        }
      }
      auto x = solver.solve(SparseVec::from_unsorted(std::move(rhs)));
      if (!x) return lift_equivariant_joint(f, max_n, max_degree, failure);
      std::vector<Chain> vals(m);
      for (const auto& [idx, c] : x->entries()) vals[idx / r2].add(target_basis[idx % r2], c);
      for (int j = 0; j < m; ++j) f.assign(n, gens[j], vals[j]);
    }
  }
  return true;
}

ChainMapCheck check_chain_map(const ChainMap& f, int max_n, int max_degree) {
  ChainMapCheck rep;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& g : f.source().generators(n, max_degree)) {
      ++rep.generators_checked;
      Chain lhs = f.target().differential(n, f.value(n, g));
      Chain rhs = f.apply(n - 1, f.source().differential(n, Chain(g)));
      if (lhs != rhs && rep.ok) {
        rep.ok = false;
        rep.witness = "level " + std::to_string(n) + ", generator " + f.source().describe(g);
      }
    }
  }
  return rep;
}

HomotopyResult find_homotopy(const ChainMap& f, const ChainMap& g, int max_n, int max_degree,
                             std::shared_ptr<BoundarySolver> solver) {
  if (&f.source() != &g.source() || &f.target() != &g.target()) {
    throw PresentationMismatch("homotopy between maps with different source or target");
  }
  const FreeBimoduleComplex& src = f.source();
  const BimoduleComplex& dst = f.target();
  if (!solver) solver = std::make_shared<BoundarySolver>(dst);
  HomotopyResult res;
  res.max_n = max_n;
  res.max_degree = max_degree;
  auto h_apply = [&](int n, const Chain& x) {
    Chain out;
    for (const auto& [key, c] : x) {
      auto s = src.split(key);
      auto it = res.values.find(std::make_pair(n, s.generator));
      if (it == res.values.end()) continue;
      out.add(dst.act(s.left, it->second, s.right), c);
    }
    return out;
  };
  for (int n = 0; n <= max_n; ++n) {
    auto gens = src.generators(n, max_degree);
    if (src.generators(n, max_degree + 1).size() > gens.size()) res.conclusive = false;
    for (const auto& gen : gens) {
      Chain rhs = f.value(n, gen) - g.value(n, gen);
      if (n > 0) rhs -= h_apply(n - 1, src.differential(n, Chain(gen)));
      auto y = solver->solve(n + 1, src.degree(gen), rhs);
      if (!y) {
        res.found = false;
        res.witness = "level " + std::to_string(n) + ", generator " + src.describe(gen);
        return res;
      }
      res.values.emplace(std::make_pair(n, gen), std::move(*y));
    }
  }
  res.found = true;
  return res;
}

int GradedComplex::dim(int n, int d) const {
  auto it = dims.find({n, d});
  return it == dims.end() ? 0 : it->second;
}

int GradedComplex::rank_out(int n, int d) const {
  auto it = differential.find({n, d});
  return it == differential.end() ? 0 : rank_of(it->second);
}

int GradedComplex::homology(int n, int d) const {
  int in_level = cohomological ? n - 1 : n + 1;
  return dim(n, d) - rank_out(n, d) - rank_out(in_level, d);
}

std::string GradedComplex::check_square_zero() const {
  for (const auto& [key, cols] : differential) {
    auto [n, d] = key;
    int next = cohomological ? n + 1 : n - 1;
    auto it = differential.find({next, d});
    if (it == differential.end()) continue;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      SparseVec out;
      for (const auto& [i, c] : cols[j].entries()) out.axpy(c, it->second.at(i));
      if (!out.empty()) {
        return "d∘d != 0 at level " + std::to_string(n) + ", degree " + std::to_string(d) + ", column " +
               std::to_string(j);
      }
    }
  }
  return {};
}

}  // namespace braidcoh
