#include "wtorus/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace wtorus {

std::pair<IntMat, IntMat> hnf(const IntMat& A) {
  if (A.det() == 0) throw std::invalid_argument("matrix is singular");
  const int d = A.d;
  IntMat H = A;
  IntMat U = IntMat::identity(d);

  auto col_addmul = [&](int dst, int src, const Int& q) {
    for (int i = 0; i < d; ++i) {
      H.a[i][dst] += q * H.a[i][src];
      U.a[i][dst] += q * U.a[i][src];
    }
  };
  auto col_swap = [&](int c1, int c2) {
    for (int i = 0; i < d; ++i) {
      std::swap(H.a[i][c1], H.a[i][c2]);
      std::swap(U.a[i][c1], U.a[i][c2]);
    }
  };
  auto col_negate = [&](int c) {
    for (int i = 0; i < d; ++i) {
      H.a[i][c] = -H.a[i][c];
      U.a[i][c] = -U.a[i][c];
    }
  };

  for (int i = 0; i < d; ++i) {
    // Euclidean reduction on row i over columns i..d-1.
    while (true) {
      int piv = -1;
      for (int j = i; j < d; ++j) {
        if (H.a[i][j] != 0 && (piv < 0 || abs(H.a[i][j]) < abs(H.a[i][piv]))) piv = j;
      }
      if (piv < 0) throw std::invalid_argument("matrix is singular");
      if (piv != i) col_swap(i, piv);
      bool done = true;
      for (int j = i + 1; j < d; ++j) {
        if (H.a[i][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), H.a[i][j].get_mpz_t(), H.a[i][i].get_mpz_t());
        col_addmul(j, i, -q);
        if (H.a[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (H.a[i][i] < 0) col_negate(i);
  }
  return {H, U};
}

std::vector<IVec> coset_reps(const IntMat& A) {
  const auto [H, U] = hnf(A);
  const int d = A.d;
  std::vector<IVec> reps;
  IVec v(d, 0);
  while (true) {
    reps.push_back(v);
    int i = d - 1;
    while (i >= 0 && Int(static_cast<long>(v[i] + 1)) == H.a[i][i]) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return reps;
}

std::vector<std::vector<Rat>> dual_points(const IntMat& A) {
  const IntMat At = A.transpose();
  const auto inv = rat_inverse(At);
  const int d = A.d;
  std::vector<std::vector<Rat>> out;
  for (const IVec& k : coset_reps(At)) {
    std::vector<Rat> xi(d, Rat(0));
    for (int i = 0; i < d; ++i) {
      Rat s(0);
      for (int j = 0; j < d; ++j) s += inv[i][j] * Rat(static_cast<long>(k[j]));
      xi[i] = s - rat_floor(s);
    }
    out.push_back(std::move(xi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TorusSpec::TorusSpec(const IntMat& A) : A_(A), H_(IntMat::identity(A.d)), U_(IntMat::identity(A.d)) {
  const Int det = A.det();
  if (det == 0) throw std::invalid_argument("matrix is singular");
  det_abs_ = abs(det);
  std::tie(H_, U_) = hnf(A);
  reps_ = coset_reps(A);
  dual_ = dual_points(A);
  if (Int(static_cast<long>(reps_.size())) != det_abs_ ||
      Int(static_cast<long>(dual_.size())) != det_abs_) {
    throw std::logic_error("coset/dual enumeration size disagrees with |det A|");
  }
}

IVec TorusSpec::canonicalize(IVec z) const {
  const int d = A_.d;
  if (static_cast<int>(z.size()) != d) throw std::invalid_argument("vector dimension mismatch");
  // Column i of H is the only one touching row i among columns >= i, so a
  // single top-down pass lands in the box.
  for (int i = 0; i < d; ++i) {
    Int q;
    Int zi(static_cast<long>(z[i]));
    mpz_fdiv_q(q.get_mpz_t(), zi.get_mpz_t(), H_.a[i][i].get_mpz_t());
    if (q == 0) continue;
    for (int r = i; r < d; ++r) z[r] -= Int(q * H_.a[r][i]).get_si();
  }
  return z;
}

int TorusSpec::rep_index(const IVec& z) const {
  const IVec c = canonicalize(z);
  // Mixed-radix position within the HNF box.
  long long idx = 0;
  for (int i = 0; i < A_.d; ++i) idx = idx * H_.a[i][i].get_si() + c[i];
  return static_cast<int>(idx);
}

WeightedGraph torus_graph(const TorusSpec& spec, const LatticeWeights& lw) {
  const int d = spec.matrix().d;
  if (lw.dim() != d) throw std::invalid_argument("weight dimension mismatch");
  const auto& reps = spec.reps();
  const int n = static_cast<int>(reps.size());
  std::vector<std::string> labels(n);
  std::vector<RatVec> weight(n, RatVec(n, Rat(0)));
  for (int x = 0; x < n; ++x) {
    std::string l;
    for (int i = 0; i < d; ++i) {
      if (i) l += ',';
      l += std::to_string(reps[x][i]);
    }
    labels[x] = l;
    for (int i = 0; i < d; ++i) {
      for (int s : {+1, -1}) {
        IVec t = reps[x];
        t[i] += s;
        weight[x][spec.rep_index(t)] += lw.w[i];
      }
    }
  }
  return WeightedGraph(std::move(labels), RatVec(n, lw.sigma), std::move(weight));
}

Complex character(const std::vector<Rat>& xi, const IVec& x) {
  if (xi.size() != x.size()) throw std::invalid_argument("dimension mismatch");
  Rat phase(0);
  for (std::size_t i = 0; i < xi.size(); ++i) phase += xi[i] * Rat(static_cast<long>(x[i]));
  return unit_exp2pi(phase);
}

double torus_eigenvalue(const std::vector<Rat>& xi, const LatticeWeights& lw) {
  if (static_cast<int>(xi.size()) != lw.dim()) throw std::invalid_argument("dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < lw.dim(); ++i) s += rat_to_double(lw.w[i]) * cos2pi(xi[i]);
  return 1.0 - 2.0 / rat_to_double(lw.sigma) * s;
}

std::vector<double> torus_spectrum(const TorusSpec& spec, const LatticeWeights& lw) {
  std::vector<double> out;
  out.reserve(spec.dual().size());
  for (const auto& xi : spec.dual()) out.push_back(torus_eigenvalue(xi, lw));
  std::sort(out.begin(), out.end());
  return out;
}

Rat torus_qn_closed(const TorusSpec& spec, const LatticeWeights& lw, int n,
                    const IVec& x, const IVec& y) {
  if (n < 1) throw std::invalid_argument("closed form needs n >= 1");
  const int d = spec.matrix().d;
  IVec diff(d);
  for (int i = 0; i < d; ++i) diff[i] = y[i] - x[i];
  // Any g with |y + g - x| <= n satisfies |g| <= n + |y - x|, so this ball
  // covers all contributing translates; the rest vanish by parity/support.
  const int radius = n + static_cast<int>(l1_norm(diff));
  Rat s(0);
  for (const IVec& g : ball_points(spec.matrix(), radius)) {
    IVec v(d);
    for (int i = 0; i < d; ++i) v[i] = diff[i] + g[i];
    if (l1_norm(v) > n) continue;
    s += lattice_qn(lw, n, v);
  }
  return s;
}

}  // namespace wtorus
