#include "wtorus/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace wtorus {

IntMat IntMat::identity(int d) {
  IntMat m;
  m.d = d;
  m.a.assign(d, std::vector<Int>(d, Int(0)));
  for (int i = 0; i < d; ++i) m.a[i][i] = 1;
  return m;
}

IntMat IntMat::parse(const std::string& s) {
  IntMat m;
  std::stringstream rows(s);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<Int> r;
    std::stringstream entries(row);
    std::string e;
    while (std::getline(entries, e, ',')) {
      e.erase(std::remove_if(e.begin(), e.end(), [](char c) { return c == ' '; }), e.end());
      if (e.empty()) throw std::invalid_argument("empty matrix entry");
      r.emplace_back(e);
    }
    m.a.push_back(std::move(r));
  }
  m.d = static_cast<int>(m.a.size());
  if (m.d == 0) throw std::invalid_argument("empty matrix");
  for (const auto& r : m.a) {
    if (static_cast<int>(r.size()) != m.d) throw std::invalid_argument("matrix is not square");
  }
  return m;
}

std::string IntMat::str() const {
  std::string out;
  for (int i = 0; i < d; ++i) {
    if (i) out += ';';
    for (int j = 0; j < d; ++j) {
      if (j) out += ',';
      out += a[i][j].get_str();
    }
  }
  return out;
}

Int IntMat::det() const {
  // Fraction-free Gaussian elimination (Bareiss).
  std::vector<std::vector<Int>> b = a;
  Int sign(1), prev(1);
  for (int k = 0; k < d - 1; ++k) {
    if (b[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < d; ++i) {
        if (b[i][k] != 0) { piv = i; break; }
      }
      if (piv < 0) return Int(0);
      std::swap(b[k], b[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) {
        b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
      }
      b[i][k] = 0;
    }
    prev = b[k][k];
  }
  return sign * b[d - 1][d - 1];
}

IntMat IntMat::transpose() const {
  IntMat m = IntMat::identity(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m.a[j][i] = a[i][j];
  }
  return m;
}

IVec IntMat::apply(const IVec& v) const {
  if (static_cast<int>(v.size()) != d) throw std::invalid_argument("vector dimension mismatch");
  IVec out(d, 0);
  for (int i = 0; i < d; ++i) {
    Int s(0);
    for (int j = 0; j < d; ++j) s += a[i][j] * Int(static_cast<long>(v[j]));
    out[i] = s.get_si();
  }
  return out;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (o.d != d) throw std::invalid_argument("matrix dimension mismatch");
  IntMat m = IntMat::identity(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Int s(0);
      for (int k = 0; k < d; ++k) s += a[i][k] * o.a[k][j];
      m.a[i][j] = s;
    }
  }
  return m;
}

IntMat IntMat::scaled(long long k) const {
  IntMat m = *this;
  for (auto& row : m.a) {
    for (auto& e : row) e *= static_cast<long>(k);
  }
  return m;
}

std::vector<std::vector<Rat>> rat_inverse(const IntMat& m) {
  const int d = m.d;
  std::vector<std::vector<Rat>> aug(d, std::vector<Rat>(2 * d, Rat(0)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) aug[i][j] = Rat(m.a[i][j]);
    aug[i][d + i] = 1;
  }
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int i = col; i < d; ++i) {
      if (aug[i][col] != 0) { piv = i; break; }
    }
    if (piv < 0) throw std::invalid_argument("matrix is singular");
    std::swap(aug[col], aug[piv]);
    const Rat p = aug[col][col];
    for (int j = 0; j < 2 * d; ++j) aug[col][j] /= p;
    for (int i = 0; i < d; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      const Rat f = aug[i][col];
      for (int j = 0; j < 2 * d; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) inv[i][j] = aug[i][d + j];
  }
  return inv;
}

LatticeWeights::LatticeWeights(std::vector<Rat> weights) : w(std::move(weights)), sigma(0) {
  if (w.empty()) throw std::invalid_argument("weights must be nonempty");
  for (const auto& wi : w) {
    if (wi <= 0) throw std::invalid_argument("lattice weights must be positive");
    sigma += wi;
  }
  sigma *= 2;
}

namespace {

void compositions_rec(long long k, int d, IVec& cur, std::vector<IVec>& out) {
  if (d == 1) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long long first = 0; first <= k; ++first) {
    cur.push_back(first);
    compositions_rec(k - first, d - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IVec> compositions(const Rat& k, int d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (k < 0 || k.get_den() != 1) return {};
  std::vector<IVec> out;
  IVec cur;
  compositions_rec(k.get_num().get_si(), d, cur, out);
  return out;
}

Int multinomial_vec(int n, const IVec& a, const IVec& z) {
  if (a.size() != z.size()) throw std::invalid_argument("composition length mismatch");
  long long total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || z[i] < 0) throw std::invalid_argument("compositions must be nonnegative");
    total += a[i] + 2 * z[i];
  }
  if (total != n) throw std::invalid_argument("|a| + 2|z| must equal n");
  Int denom(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    denom *= factorial(static_cast<unsigned long>(a[i] + z[i]));
    denom *= factorial(static_cast<unsigned long>(z[i]));
  }
  return factorial(static_cast<unsigned long>(n)) / denom;
}

long long l1_norm(const IVec& v) {
  long long s = 0;
  for (long long x : v) s += std::llabs(x);
  return s;
}

IVec abs_vec(const IVec& v) {
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::llabs(v[i]);
  return out;
}

Rat lattice_pn(const LatticeWeights& lw, int n, const IVec& v) {
  if (n < 1) throw std::invalid_argument("lattice kernel needs n >= 1");
  const int d = lw.dim();
  if (static_cast<int>(v.size()) != d) throw std::invalid_argument("vector dimension mismatch");
  const IVec av = abs_vec(v);
  const Rat half_gap = Rat(static_cast<long>(n - l1_norm(av))) / 2;
  Rat s(0);
  for (const IVec& z : compositions(half_gap, d)) {
    Rat term(multinomial_vec(n, av, z));
    for (int i = 0; i < d; ++i) {
      term *= rat_pow(lw.w[i], static_cast<unsigned long>(av[i] + 2 * z[i]));
    }
    s += term;
  }
  return s / rat_pow(lw.sigma, static_cast<unsigned long>(n));
}

Rat lattice_qn(const LatticeWeights& lw, int n, const IVec& v) {
  return lattice_pn(lw, n, v) / lw.sigma;
}

namespace {

std::vector<IVec> enumerate_ball(const IntMat& A, int n) {
  const int d = A.d;
  const auto inv = rat_inverse(A);
  // |v_i| <= rowmax(|A^-1|) * n whenever |A v|_1 <= n.
  long long bound = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Rat m = abs(inv[i][j]) * n;
      Int c;
      mpz_cdiv_q(c.get_mpz_t(), m.get_num().get_mpz_t(), m.get_den().get_mpz_t());
      bound = std::max(bound, static_cast<long long>(c.get_si()));
    }
  }
  std::vector<std::vector<long long>> rows(d, std::vector<long long>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) rows[i][j] = A.a[i][j].get_si();
  }
  std::vector<IVec> out;
  IVec v(d, -bound);
  IVec g(d);
  while (true) {
    long long norm = 0;
    for (int i = 0; i < d; ++i) {
      long long s = 0;
      for (int j = 0; j < d; ++j) s += rows[i][j] * v[j];
      g[i] = s;
      norm += std::llabs(s);
    }
    if (norm <= n) out.push_back(g);
    int i = d - 1;
    while (i >= 0 && v[i] == bound) v[i--] = -bound;
    if (i < 0) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<IVec> ball_points(const IntMat& A, int n) {
  if (A.det() == 0) throw std::invalid_argument("matrix is singular");
  if (n < 0) throw std::invalid_argument("radius must be nonnegative");
  // Enumerations recur with identical arguments across the verification
  // grids; memoize per (matrix, radius).
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::vector<IVec>> cache;
  const auto key = std::make_pair(A.str(), n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto pts = enumerate_ball(A, n);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(pts));
  return it->second;
}

}  // namespace wtorus
