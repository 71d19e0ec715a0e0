#include "wtorus/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "wtorus/heat.hpp"

namespace wtorus {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Relative tolerance with an absolute floor of 1e-12.
void finish_report(VerificationReport& r, double abs_err, double scale, double tol,
                   Clock::time_point t0) {
  r.abs_discrepancy = abs_err;
  r.rel_discrepancy = scale > 0 ? abs_err / scale : abs_err;
  r.tolerance = tol;
  r.pass = abs_err <= std::max(tol * scale, 1e-12);
  r.elapsed_ms = ms_since(t0);
}

std::string weights_str(const std::vector<Rat>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += rat_str(w[i]);
  }
  return s;
}

std::string ivec_str(const IVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  return nlohmann::json{{"identity", identity},       {"params", params},
                        {"lhs", lhs},                 {"rhs", rhs},
                        {"abs_err", abs_discrepancy}, {"rel_err", rel_discrepancy},
                        {"tol", tolerance},           {"pass", pass},
                        {"ms", elapsed_ms}};
}

std::vector<double> eigensolve_sym(const WeightedGraph& g) {
  const int n = g.size();
  std::vector<std::vector<double>> s(n, std::vector<double>(n, 0.0));
  for (int x = 0; x < n; ++x) {
    double diag = 0.0;
    const double mx = rat_to_double(g.measure(x));
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      const double w = rat_to_double(g.weight(x, y));
      diag += w;
      s[x][y] = -w / std::sqrt(mx * rat_to_double(g.measure(y)));
    }
    s[x][x] = diag / mx;
  }

  // Cyclic Jacobi until the off-diagonal norm falls below 1e-13.
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += s[p][q] * s[p][q];
    }
    if (std::sqrt(2.0 * off) < 1e-13) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (s[p][q] == 0.0) continue;
        const double theta = (s[q][q] - s[p][p]) / (2.0 * s[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < n; ++k) {
          const double skp = s[k][p], skq = s[k][q];
          s[k][p] = c * skp - sn * skq;
          s[k][q] = sn * skp + c * skq;
        }
        for (int k = 0; k < n; ++k) {
          const double spk = s[p][k], sqk = s[q][k];
          s[p][k] = c * spk - sn * sqk;
          s[q][k] = sn * spk + c * sqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = s[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

double lhs_eq1(const IntMat& A, const std::vector<Rat>& w, int n) {
  if (n < 1) throw std::invalid_argument("identity requires n >= 1");
  if (static_cast<int>(w.size()) != A.d) throw std::invalid_argument("weight dimension mismatch");
  double s = 0.0;
  for (const auto& xi : dual_points(A)) {
    double inner = 0.0;
    for (int i = 0; i < A.d; ++i) inner += rat_to_double(w[i]) * cos2pi(xi[i]);
    s += std::pow(inner, n);
  }
  return s;
}

MultiPoly rhs_eq1_poly(const IntMat& A, int n) {
  if (n < 1) throw std::invalid_argument("identity requires n >= 1");
  const int d = A.d;
  const Rat front = Rat(abs(A.det())) / rat_pow(Rat(2), static_cast<unsigned long>(n));
  MultiPoly p(d);
  for (const IVec& x : ball_points(A, n)) {
    const IVec ax = abs_vec(x);
    const Rat half_gap = Rat(static_cast<long>(n - l1_norm(ax))) / 2;
    for (const IVec& y : compositions(half_gap, d)) {
      MultiPoly::Exponent e(d);
      for (int i = 0; i < d; ++i) e[i] = static_cast<int>(ax[i] + 2 * y[i]);
      p.add_term(e, front * Rat(multinomial_vec(n, ax, y)));
    }
  }
  return p;
}

Rat rhs_eq1(const IntMat& A, const std::vector<Rat>& w, int n) {
  if (static_cast<int>(w.size()) != A.d) throw std::invalid_argument("weight dimension mismatch");
  return rhs_eq1_poly(A, n).eval(w);
}

double lhs_eq2(const IntMat& A, const IVec& m) {
  if (static_cast<int>(m.size()) != A.d) throw std::invalid_argument("moment dimension mismatch");
  double s = 0.0;
  for (const auto& xi : dual_points(A)) {
    double prod = 1.0;
    for (int i = 0; i < A.d; ++i) {
      if (m[i] < 0) throw std::invalid_argument("moments must be nonnegative");
      prod *= std::pow(cos2pi(xi[i]), static_cast<double>(m[i]));
    }
    s += prod;
  }
  return s;
}

Rat rhs_eq2(const IntMat& A, const IVec& m) {
  if (static_cast<int>(m.size()) != A.d) throw std::invalid_argument("moment dimension mismatch");
  const int d = A.d;
  long long mtotal = 0;
  for (long long mi : m) {
    if (mi < 0) throw std::invalid_argument("moments must be nonnegative");
    mtotal += mi;
  }
  // abs(x) <= m componentwise forces |x| <= |m|, so the L1 ball covers
  // every solution of abs(x) + 2y = m.
  Rat s(0);
  for (const IVec& x : ball_points(A, static_cast<int>(mtotal))) {
    IVec y(d);
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      const long gap = static_cast<long>(m[i] - std::llabs(x[i]));
      if (gap < 0 || gap % 2 != 0) { ok = false; break; }
      y[i] = gap / 2;
    }
    if (!ok) continue;
    // m! / ((abs(x)+y)! y!), all factorials taken coordinatewise.
    const IVec a = abs_vec(x);
    Int num(1), den(1);
    for (int i = 0; i < d; ++i) {
      num *= factorial(static_cast<unsigned long>(m[i]));
      den *= factorial(static_cast<unsigned long>(a[i] + y[i])) *
             factorial(static_cast<unsigned long>(y[i]));
    }
    s += Rat(num) / Rat(den);
  }
  return s * Rat(abs(A.det())) / rat_pow(Rat(2), static_cast<unsigned long>(mtotal));
}

VerificationReport verify_eq1(const IntMat& A, const std::vector<Rat>& w, int n, double tol) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = "eq1";
  r.params = "A=" + A.str() + " w=" + weights_str(w) + " n=" + std::to_string(n);
  const double lhs = lhs_eq1(A, w, n);
  const Rat rhs = rhs_eq1(A, w, n);
  r.lhs = fmt_double(lhs);
  r.rhs = rat_str(rhs);
  double wsum = 0.0;
  for (const auto& wi : w) wsum += std::abs(rat_to_double(wi));
  const double scale = std::abs(rat_to_double(Rat(abs(A.det())))) * std::pow(wsum, n);
  finish_report(r, std::abs(lhs - rat_to_double(rhs)), scale, tol, t0);
  return r;
}

VerificationReport verify_eq2(const IntMat& A, const IVec& m, double tol) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = "eq2";
  r.params = "A=" + A.str() + " m=" + ivec_str(m);
  const double lhs = lhs_eq2(A, m);
  const Rat rhs = rhs_eq2(A, m);
  r.lhs = fmt_double(lhs);
  r.rhs = rat_str(rhs);
  const double scale = rat_to_double(Rat(abs(A.det())));
  finish_report(r, std::abs(lhs - rat_to_double(rhs)), scale, tol, t0);
  return r;
}

VerificationReport verify_trace(const WeightedGraph& g, int n, double tol) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = "trace";
  r.params = "|V|=" + std::to_string(g.size()) + " n=" + std::to_string(n);
  double lhs = 0.0;
  double scale = 0.0;
  for (double mu : eigensolve_sym(g)) {
    lhs += std::pow(1.0 - mu, n);
    scale += std::pow(std::abs(1.0 - mu), n);
  }
  const Rat rhs = heat_trace(g, n);
  r.lhs = fmt_double(lhs);
  r.rhs = rat_str(rhs);
  finish_report(r, std::abs(lhs - rat_to_double(rhs)), std::max(scale, 1.0), tol, t0);
  return r;
}

VerificationReport verify_quotient(const WeightedGraph& g, const GroupAction& action, int n) {
  if (!g.normalized() && !action.is_free()) {
    throw std::invalid_argument("transfer requires a normalized graph or a free action");
  }
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = "quotient";
  r.params = "|V|=" + std::to_string(g.size()) + " |Gamma|=" + std::to_string(action.order()) +
             " n=" + std::to_string(n);

  const QuotientResult qr = quotient_graph(g, action);
  const int nq = qr.graph.size();
  std::vector<int> rep(nq, -1);
  for (int x = 0; x < g.size(); ++x) {
    if (rep[qr.projection[x]] < 0) rep[qr.projection[x]] = x;
  }

  const HeatKernelTable tg(g, n);
  const HeatKernelTable tq(qr.graph, n);
  bool ok = true;
  for (int k = 1; k <= n && ok; ++k) {
    for (int a = 0; a < nq && ok; ++a) {
      for (int b = 0; b < nq && ok; ++b) {
        Rat psum(0), qsum(0);
        for (const auto& p : action.perms()) {
          psum += tg.p(k, rep[a], p[rep[b]]);
          qsum += tg.q(k, rep[a], p[rep[b]]);
        }
        if (psum != tq.p(k, a, b) || qsum != tq.q(k, a, b)) ok = false;
      }
    }
  }
  r.lhs = ok ? "exact match" : "mismatch";
  r.rhs = "exact match";
  finish_report(r, ok ? 0.0 : 1.0, 1.0, 0.0, t0);
  r.pass = ok;
  return r;
}

VerificationReport verify_spectral_expansion(const IntMat& A, const std::vector<Rat>& w, int n,
                                             double tol) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = "expansion";
  r.params = "A=" + A.str() + " w=" + weights_str(w) + " n=" + std::to_string(n);

  const TorusSpec spec(A);
  const LatticeWeights lw{w};
  const WeightedGraph tg = torus_graph(spec, lw);
  const HeatKernelTable table(tg, n);
  const int nv = tg.size();
  const double norm = rat_to_double(Rat(spec.det_abs()) * lw.sigma);

  std::vector<ComplexVec> chars;
  std::vector<double> eig;
  for (const auto& xi : spec.dual()) {
    ComplexVec f(nv);
    for (int x = 0; x < nv; ++x) f[x] = character(xi, spec.reps()[x]);
    chars.push_back(std::move(f));
    eig.push_back(torus_eigenvalue(xi, lw));
  }

  double worst = 0.0;
  double worst_lhs = 0.0;
  Rat worst_rhs(0);
  for (int x = 0; x < nv; ++x) {
    for (int y = 0; y < nv; ++y) {
      Complex s(0.0, 0.0);
      for (std::size_t i = 0; i < chars.size(); ++i) {
        s += std::pow(1.0 - eig[i], n) * chars[i][x] * std::conj(chars[i][y]);
      }
      const double approx = s.real() / norm;
      const Rat exact = table.q(n, x, y);
      const double err = std::abs(approx - rat_to_double(exact));
      if (err >= worst) {
        worst = err;
        worst_lhs = approx;
        worst_rhs = exact;
      }
    }
  }
  r.lhs = fmt_double(worst_lhs);
  r.rhs = rat_str(worst_rhs);
  finish_report(r, worst, 1.0, tol, t0);
  return r;
}

}  // namespace wtorus
