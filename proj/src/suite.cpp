#include "wtorus/suite.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "wtorus/heat.hpp"
#include "wtorus/verify.hpp"

namespace wtorus {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  CriterionResult res;
  Clock::time_point t0 = Clock::now();

  explicit Checker(std::string name) {
    res.name = std::move(name);
    res.pass = true;
  }

  void check(bool ok, const std::string& what) {
    ++res.checks;
    if (!ok && res.pass) {
      res.pass = false;
      res.detail = what;
    }
  }

  CriterionResult finish() {
    res.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return res;
  }
};

std::string describe(const IntMat& A, int n) {
  return "A=" + A.str() + " n=" + std::to_string(n);
}

}  // namespace

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den(1, 4);
  const int q = den(rng);
  std::uniform_int_distribution<int> num(-4 * q, 4 * q);
  int p = 0;
  while (p == 0) p = num(rng);
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat random_pos_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den(1, 4);
  const int q = den(rng);
  std::uniform_int_distribution<int> num(1, 4 * q);
  Rat r(num(rng), q);
  r.canonicalize();
  return r;
}

IntMat random_matrix(std::mt19937_64& rng, int d, long long max_det_abs) {
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    IntMat m = IntMat::identity(d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) m.a[i][j] = entry(rng);
    }
    const Int det = abs(m.det());
    if (det >= 1 && det <= static_cast<long>(max_det_abs)) return m;
  }
}

WeightedGraph random_weighted_graph(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(2, max_vertices);
  std::uniform_int_distribution<int> coin(0, 3);
  const int n = nv(rng);
  WeightedGraph g = WeightedGraph::empty(n);
  for (int x = 0; x < n; ++x) {
    g.set_measure(x, random_pos_rat(rng));
    if (coin(rng) == 0) g.set_weight(x, x, random_pos_rat(rng));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (coin(rng) < 2 || y == x + 1) g.set_weight(x, y, random_pos_rat(rng));
    }
  }
  return g;
}

GroupAction covering_action(const WeightedGraph& big_graph, const TorusSpec& big,
                            const IntMat& A, int k) {
  const int d = A.d;
  std::vector<IVec> shifts;
  IVec u(d, 0);
  while (true) {
    shifts.push_back(A.apply(u));
    int i = d - 1;
    while (i >= 0 && u[i] == k - 1) u[i--] = 0;
    if (i < 0) break;
    ++u[i];
  }
  std::vector<std::vector<int>> perms;
  for (const IVec& s : shifts) {
    std::vector<int> p(big_graph.size());
    for (int x = 0; x < big_graph.size(); ++x) {
      IVec z = big.reps()[x];
      for (int i = 0; i < d; ++i) z[i] += s[i];
      p[x] = big.rep_index(z);
    }
    perms.push_back(std::move(p));
  }
  return GroupAction(big_graph, std::move(perms));
}

namespace {

// The shared matrix grid: every d=1 matrix with 1 <= |a| <= 6, then 25
// seeded d=2 and 10 seeded d=3 matrices with entries in [-3,3] and
// 1 <= |det| <= 40.
std::vector<IntMat> matrix_grid(std::uint64_t seed) {
  std::vector<IntMat> grid;
  for (int a = 1; a <= 6; ++a) {
    for (int s : {+1, -1}) {
      IntMat m = IntMat::identity(1);
      m.a[0][0] = s * a;
      grid.push_back(m);
    }
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < 25; ++i) grid.push_back(random_matrix(rng, 2, 40));
  for (int i = 0; i < 10; ++i) grid.push_back(random_matrix(rng, 3, 40));
  return grid;
}

std::vector<Rat> random_rat_vec(std::mt19937_64& rng, int d) {
  std::vector<Rat> w(d);
  for (auto& wi : w) wi = random_rat(rng);
  return w;
}

std::vector<Rat> random_pos_rat_vec(std::mt19937_64& rng, int d) {
  std::vector<Rat> w(d);
  for (auto& wi : w) wi = random_pos_rat(rng);
  return w;
}

CriterionResult criterion_eq1(const std::vector<IntMat>& grid, std::uint64_t seed) {
  Checker c("1 eq1 grid");
  std::mt19937_64 rng(seed + 1);
  for (const IntMat& A : grid) {
    for (int rep = 0; rep < 3; ++rep) {
      const auto w = random_rat_vec(rng, A.d);
      for (int n = 1; n <= 10; ++n) {
        const auto r = verify_eq1(A, w, n, 1e-9);
        c.check(r.pass, r.identity + " " + r.params);
      }
    }
  }
  return c.finish();
}

CriterionResult criterion_eq2(const std::vector<IntMat>& grid, std::uint64_t) {
  Checker c("2 eq2 grid");
  for (const IntMat& A : grid) {
    const int max_total = A.d <= 2 ? 8 : 5;
    for (const IVec& m : [&] {
          std::vector<IVec> ms;
          for (int t = 0; t <= max_total; ++t) {
            for (const IVec& m : compositions(Rat(t), A.d)) ms.push_back(m);
          }
          return ms;
        }()) {
      const auto r = verify_eq2(A, m, 1e-9);
      c.check(r.pass, r.identity + " " + r.params);
    }
  }
  return c.finish();
}

CriterionResult criterion_spectrum(const std::vector<IntMat>& grid, std::uint64_t seed) {
  Checker c("3 spectrum");
  std::mt19937_64 rng(seed + 3);
  for (const IntMat& A : grid) {
    if (abs(A.det()) > 60) continue;
    const TorusSpec spec(A);
    for (int rep = 0; rep < 2; ++rep) {
      const LatticeWeights lw(random_pos_rat_vec(rng, A.d));
      const auto analytic = torus_spectrum(spec, lw);
      const auto numeric = eigensolve_sym(torus_graph(spec, lw));
      bool ok = analytic.size() == numeric.size();
      for (std::size_t i = 0; ok && i < analytic.size(); ++i) {
        ok = std::abs(analytic[i] - numeric[i]) <= 1e-8;
      }
      // Multiplicities after 1e-8 clustering must agree exactly.
      auto clusters = [](const std::vector<double>& v) {
        std::vector<int> sizes;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i == 0 || v[i] - v[i - 1] > 1e-8) sizes.push_back(0);
          ++sizes.back();
        }
        return sizes;
      };
      c.check(ok && clusters(analytic) == clusters(numeric), describe(A, 0) + " spectrum");
    }
  }
  return c.finish();
}

CriterionResult criterion_torus_heat(const std::vector<IntMat>& grid, std::uint64_t seed) {
  Checker c("4 torus heat kernel closed form");
  std::mt19937_64 rng(seed + 4);
  const int max_n = 12;
  for (const IntMat& A : grid) {
    if (abs(A.det()) > 20) continue;
    const TorusSpec spec(A);
    const int nv = static_cast<int>(spec.reps().size());
    for (int rep = 0; rep < 5; ++rep) {
      const LatticeWeights lw(random_pos_rat_vec(rng, A.d));
      const HeatKernelTable table(torus_graph(spec, lw), max_n);
      const IVec zero(A.d, 0);
      for (int n = 1; n <= max_n; ++n) {
        // Closed-form value per difference class, then every entry.
        std::vector<Rat> closed(nv);
        for (int cidx = 0; cidx < nv; ++cidx) {
          closed[cidx] = torus_qn_closed(spec, lw, n, zero, spec.reps()[cidx]);
        }
        bool ok = true;
        for (int x = 0; x < nv && ok; ++x) {
          for (int y = 0; y < nv && ok; ++y) {
            IVec diff(A.d);
            for (int i = 0; i < A.d; ++i) diff[i] = spec.reps()[y][i] - spec.reps()[x][i];
            ok = table.q(n, x, y) == closed[spec.rep_index(diff)];
          }
        }
        // A few entries evaluated at their own (x, y) arguments.
        std::uniform_int_distribution<int> pick(0, nv - 1);
        for (int t = 0; t < 3 && ok; ++t) {
          const int x = pick(rng), y = pick(rng);
          ok = table.q(n, x, y) ==
               torus_qn_closed(spec, lw, n, spec.reps()[x], spec.reps()[y]);
        }
        c.check(ok, describe(A, n) + " closed-form mismatch");
      }
    }
  }
  return c.finish();
}

CriterionResult criterion_lattice(std::uint64_t seed) {
  Checker c("5 lattice closed form");
  std::mt19937_64 rng(seed + 5);
  for (int d = 1; d <= 3; ++d) {
    const LatticeWeights lw(random_pos_rat_vec(rng, d));
    for (int n = 1; n <= 6; ++n) {
      // Independent oracle: walk mass propagated step by step.
      std::map<IVec, Rat> mass{{IVec(d, 0), Rat(1)}};
      for (int k = 0; k < n; ++k) {
        std::map<IVec, Rat> next;
        for (const auto& [v, p] : mass) {
          for (int i = 0; i < d; ++i) {
            for (int s : {+1, -1}) {
              IVec u = v;
              u[i] += s;
              next[u] += p * lw.w[i] / lw.sigma;
            }
          }
        }
        mass = std::move(next);
      }
      bool ok = true;
      IVec v(d, -n);
      while (ok) {
        if (l1_norm(v) <= n) {
          auto it = mass.find(v);
          const Rat expect = it == mass.end() ? Rat(0) : it->second;
          ok = lattice_pn(lw, n, v) == expect;
        }
        int i = d - 1;
        while (i >= 0 && v[i] == n) v[i--] = -n;
        if (i < 0) break;
        ++v[i];
      }
      c.check(ok, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " walk oracle");
    }
    for (int n = 1; n <= 8; ++n) {
      Rat total(0);
      IVec v(d, -n);
      while (true) {
        if (l1_norm(v) <= n) total += lattice_pn(lw, n, v);
        int i = d - 1;
        while (i >= 0 && v[i] == n) v[i--] = -n;
        if (i < 0) break;
        ++v[i];
      }
      c.check(total == 1, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " mass");
    }
  }
  return c.finish();
}

CriterionResult criterion_trace(std::uint64_t seed) {
  Checker c("6 trace formula");
  std::mt19937_64 rng(seed + 6);
  for (int i = 0; i < 50; ++i) {
    const WeightedGraph g = random_weighted_graph(rng, 12);
    for (int n = 0; n <= 10; ++n) {
      const auto r = verify_trace(g, n, 1e-8);
      c.check(r.pass, "graph " + std::to_string(i) + " " + r.params);
    }
  }
  return c.finish();
}

CriterionResult criterion_heat_laws(std::uint64_t seed) {
  Checker c("7 heat kernel laws");
  std::mt19937_64 rng(seed + 6);  // same 50 graphs as the trace criterion
  for (int i = 0; i < 50; ++i) {
    const WeightedGraph g = random_weighted_graph(rng, 12);
    const int nmax = 8;
    const HeatKernelTable t(g, nmax);
    const int nv = g.size();

    bool sym = true;
    for (int n = 0; n <= nmax && sym; ++n) {
      for (int x = 0; x < nv && sym; ++x) {
        for (int y = x + 1; y < nv && sym; ++y) sym = t.q(n, x, y) == t.q(n, y, x);
      }
    }
    c.check(sym, "graph " + std::to_string(i) + " symmetry");

    bool semi = true;
    for (int m = 1; m < nmax && semi; ++m) {
      for (int x = 0; x < nv && semi; ++x) {
        for (int y = 0; y < nv && semi; ++y) {
          Rat s(0);
          for (int z = 0; z < nv; ++z) s += t.q(m, x, z) * t.q(nmax - m, z, y) * g.measure(z);
          semi = s == t.q(nmax, x, y);
        }
      }
    }
    c.check(semi, "graph " + std::to_string(i) + " semigroup");

    // q via the heat-equation recursion, independent of the p route.
    std::vector<RatMat> q(1, RatMat(nv, RatVec(nv, Rat(0))));
    for (int y = 0; y < nv; ++y) q[0][y][y] = Rat(1) / g.measure(y);
    for (int n = 0; n < nmax; ++n) {
      RatMat next(nv, RatVec(nv, Rat(0)));
      for (int y = 0; y < nv; ++y) {
        RatVec col(nv);
        for (int x = 0; x < nv; ++x) col[x] = q[n][x][y];
        const RatVec lap = laplacian_apply(g, col);
        for (int x = 0; x < nv; ++x) next[x][y] = q[n][x][y] + lap[x];
      }
      q.push_back(std::move(next));
    }
    bool rel = true;
    for (int n = 0; n <= nmax && rel; ++n) {
      for (int x = 0; x < nv && rel; ++x) {
        for (int y = 0; y < nv && rel; ++y) {
          rel = q[n][x][y] == t.q(n, x, y) && t.q(n, x, y) == t.p(n, x, y) / g.measure(y);
        }
      }
    }
    c.check(rel, "graph " + std::to_string(i) + " q=p/m");
  }
  return c.finish();
}

CriterionResult criterion_quotient(std::uint64_t seed) {
  Checker c("8 quotient transfer");
  std::mt19937_64 rng(seed + 8);
  for (int k = 2; k <= 6; ++k) {
    const WeightedGraph g = WeightedGraph::cycle(2 * k);
    std::vector<int> rot(2 * k);
    for (int i = 0; i < 2 * k; ++i) rot[i] = (i + k) % (2 * k);
    const auto r = verify_quotient(g, GroupAction::from_generators(g, {rot}), 6);
    c.check(r.pass, "C_" + std::to_string(2 * k) + " " + r.params);
  }
  for (int k = 1; k <= 4; ++k) {
    const int n = 3 * k;
    if (n < 3) continue;
    const WeightedGraph g = WeightedGraph::cycle(n);
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + k) % n;
    const auto r = verify_quotient(g, GroupAction::from_generators(g, {rot}), 6);
    c.check(r.pass, "C_" + std::to_string(n) + " " + r.params);
  }
  std::uniform_int_distribution<int> dim(1, 3);
  for (int i = 0; i < 10; ++i) {
    const int d = dim(rng);
    const IntMat A = random_matrix(rng, d, 10);
    const LatticeWeights lw(random_pos_rat_vec(rng, d));
    const TorusSpec big(A.scaled(2));
    const WeightedGraph g = torus_graph(big, lw);
    const auto r = verify_quotient(g, covering_action(g, big, A, 2), 6);
    c.check(r.pass, "covering A=" + A.str() + " " + r.params);
  }
  return c.finish();
}

CriterionResult criterion_expansion(const std::vector<IntMat>& grid, std::uint64_t seed) {
  Checker c("9 spectral expansion");
  std::mt19937_64 rng(seed + 9);
  for (const IntMat& A : grid) {
    if (abs(A.det()) > 20) continue;
    for (int rep = 0; rep < 2; ++rep) {
      const auto w = random_pos_rat_vec(rng, A.d);
      for (int n = 0; n <= 8; ++n) {
        const auto r = verify_spectral_expansion(A, w, n, 1e-9);
        c.check(r.pass, r.params);
      }
    }
  }
  return c.finish();
}

CriterionResult criterion_special_cases(const std::vector<IntMat>& grid, std::uint64_t seed) {
  Checker c("10 special cases");
  std::mt19937_64 rng(seed + 10);
  // det +-1: the identity collapses to the multinomial theorem, exactly.
  std::vector<IntMat> unimodular;
  for (int s : {+1, -1}) {
    IntMat m = IntMat::identity(1);
    m.a[0][0] = s;
    unimodular.push_back(m);
  }
  unimodular.push_back(IntMat::parse("1,1;0,1"));
  unimodular.push_back(IntMat::parse("2,1;1,1"));
  unimodular.push_back(IntMat::identity(3));
  for (const IntMat& A : unimodular) {
    for (int n = 1; n <= 10; ++n) {
      const auto w = random_rat_vec(rng, A.d);
      Rat sum(0);
      for (const auto& wi : w) sum += wi;
      c.check(rhs_eq1(A, w, n) == rat_pow(sum, static_cast<unsigned long>(n)),
              "multinomial " + describe(A, n));
      c.check(verify_eq1(A, w, n, 1e-9).pass, "multinomial verify " + describe(A, n));
    }
  }
  // w = (1,...,1): the unweighted summation formula.
  for (const IntMat& A : grid) {
    const std::vector<Rat> ones(A.d, Rat(1));
    for (int n = 1; n <= 10; ++n) {
      c.check(verify_eq1(A, ones, n, 1e-9).pass, "unweighted " + describe(A, n));
    }
  }
  return c.finish();
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed) {
  const auto grid = matrix_grid(seed);
  std::vector<CriterionResult> out;
  out.push_back(criterion_eq1(grid, seed));
  out.push_back(criterion_eq2(grid, seed));
  out.push_back(criterion_spectrum(grid, seed));
  out.push_back(criterion_torus_heat(grid, seed));
  out.push_back(criterion_lattice(seed));
  out.push_back(criterion_trace(seed));
  out.push_back(criterion_heat_laws(seed));
  out.push_back(criterion_quotient(seed));
  out.push_back(criterion_expansion(grid, seed));
  out.push_back(criterion_special_cases(grid, seed));
  return out;
}

}  // namespace wtorus
