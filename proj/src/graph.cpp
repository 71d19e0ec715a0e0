#include "wtorus/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace wtorus {

WeightedGraph::WeightedGraph(std::vector<std::string> labels, RatVec measure,
                             std::vector<RatVec> weight)
    : labels_(std::move(labels)), measure_(std::move(measure)), weight_(std::move(weight)) {
  const std::size_t n = measure_.size();
  if (labels_.size() != n || weight_.size() != n) {
    throw std::invalid_argument("graph field sizes disagree");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (measure_[x] <= 0) throw std::invalid_argument("vertex measure must be positive");
    if (weight_[x].size() != n) throw std::invalid_argument("weight matrix is not square");
    for (std::size_t y = 0; y < n; ++y) {
      if (weight_[x][y] < 0) throw std::invalid_argument("weights must be nonnegative");
      if (weight_[x][y] != weight_[y][x]) throw std::invalid_argument("weights must be symmetric");
    }
  }
}

WeightedGraph WeightedGraph::empty(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return WeightedGraph(std::move(labels), RatVec(n, Rat(1)),
                       std::vector<RatVec>(n, RatVec(n, Rat(0))));
}

void WeightedGraph::set_weight(int x, int y, const Rat& w) {
  if (w < 0) throw std::invalid_argument("weights must be nonnegative");
  weight_[x][y] = w;
  weight_[y][x] = w;
}

void WeightedGraph::set_measure(int x, const Rat& m) {
  if (m <= 0) throw std::invalid_argument("vertex measure must be positive");
  measure_[x] = m;
}

Rat WeightedGraph::degree(int x) const {
  if (x < 0 || x >= size()) throw std::out_of_range("unknown vertex");
  Rat s(0);
  for (int y = 0; y < size(); ++y) s += weight_[x][y];
  return s / measure_[x];
}

bool WeightedGraph::normalized() const {
  for (int x = 0; x < size(); ++x) {
    if (degree(x) != 1) return false;
  }
  return true;
}

WeightedGraph WeightedGraph::from_json(const nlohmann::json& j) {
  std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
  const int n = static_cast<int>(labels.size());
  RatVec measure;
  for (const auto& s : j.at("measures")) measure.push_back(parse_rat(s.get<std::string>()));
  std::vector<RatVec> weight(n, RatVec(n, Rat(0)));
  for (const auto& e : j.at("weights")) {
    int x = e.at(0).get<int>();
    int y = e.at(1).get<int>();
    Rat w = parse_rat(e.at(2).get<std::string>());
    if (x < 0 || y < 0 || x >= n || y >= n) throw std::invalid_argument("weight entry out of range");
    weight[x][y] = w;
    weight[y][x] = w;
  }
  return WeightedGraph(std::move(labels), std::move(measure), std::move(weight));
}

nlohmann::json WeightedGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = labels_;
  nlohmann::json ms = nlohmann::json::array();
  for (const auto& m : measure_) ms.push_back(rat_str(m));
  j["measures"] = ms;
  nlohmann::json ws = nlohmann::json::array();
  for (int x = 0; x < size(); ++x) {
    for (int y = x; y < size(); ++y) {
      if (weight_[x][y] != 0) ws.push_back({x, y, rat_str(weight_[x][y])});
    }
  }
  j["weights"] = ws;
  return j;
}

WeightedGraph WeightedGraph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  WeightedGraph g = WeightedGraph::empty(n);
  for (int i = 0; i < n; ++i) {
    g.set_measure(i, Rat(2));
    g.set_weight(i, (i + 1) % n, Rat(1));
  }
  return g;
}

bool WeightedGraph::operator==(const WeightedGraph& o) const {
  return measure_ == o.measure_ && weight_ == o.weight_;
}

RatVec laplacian_apply(const WeightedGraph& g, const RatVec& f) {
  const int n = g.size();
  if (static_cast<int>(f.size()) != n) throw std::invalid_argument("function not total on V(G)");
  RatVec out(n, Rat(0));
  for (int x = 0; x < n; ++x) {
    Rat s(0);
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;  // self-weight terms vanish
      s += (f[y] - f[x]) * g.weight(x, y);
    }
    out[x] = s / g.measure(x);
  }
  return out;
}

ComplexVec laplacian_apply(const WeightedGraph& g, const ComplexVec& f) {
  const int n = g.size();
  if (static_cast<int>(f.size()) != n) throw std::invalid_argument("function not total on V(G)");
  ComplexVec out(n);
  for (int x = 0; x < n; ++x) {
    Complex s(0.0, 0.0);
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      s += (f[y] - f[x]) * rat_to_double(g.weight(x, y));
    }
    out[x] = s / rat_to_double(g.measure(x));
  }
  return out;
}

Rat inner_product(const WeightedGraph& g, const RatVec& f, const RatVec& h) {
  Rat s(0);
  for (int x = 0; x < g.size(); ++x) s += f[x] * h[x] * g.measure(x);
  return s;
}

Complex inner_product(const WeightedGraph& g, const ComplexVec& f, const ComplexVec& h) {
  Complex s(0.0, 0.0);
  for (int x = 0; x < g.size(); ++x) s += f[x] * std::conj(h[x]) * rat_to_double(g.measure(x));
  return s;
}

namespace {

bool is_identity(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

void check_preserves(const WeightedGraph& g, const std::vector<int>& p) {
  const int n = g.size();
  if (static_cast<int>(p.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int x = 0; x < n; ++x) {
    if (p[x] < 0 || p[x] >= n || seen[p[x]]) throw std::invalid_argument("not a permutation");
    seen[p[x]] = true;
  }
  for (int x = 0; x < n; ++x) {
    if (g.measure(p[x]) != g.measure(x)) {
      throw std::invalid_argument("permutation does not preserve measures");
    }
    for (int y = x; y < n; ++y) {
      if (g.weight(p[x], p[y]) != g.weight(x, y)) {
        throw std::invalid_argument("permutation does not preserve weights");
      }
    }
  }
}

}  // namespace

GroupAction::GroupAction(const WeightedGraph& g, std::vector<std::vector<int>> perms)
    : perms_(std::move(perms)) {
  if (perms_.empty()) throw std::invalid_argument("group must contain the identity");
  std::set<std::vector<int>> members;
  bool has_id = false;
  for (const auto& p : perms_) {
    check_preserves(g, p);
    members.insert(p);
    if (is_identity(p)) has_id = true;
  }
  if (!has_id) throw std::invalid_argument("group must contain the identity");
  if (members.size() != perms_.size()) throw std::invalid_argument("duplicate group elements");
  for (const auto& a : perms_) {
    for (const auto& b : perms_) {
      if (!members.count(compose(a, b))) throw std::invalid_argument("group not closed under composition");
    }
  }
}

GroupAction GroupAction::from_generators(const WeightedGraph& g,
                                         const std::vector<std::vector<int>>& gens) {
  std::vector<int> id(g.size());
  for (int i = 0; i < g.size(); ++i) id[i] = i;
  std::set<std::vector<int>> members{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : frontier) {
      for (const auto& gen : gens) {
        auto c = compose(gen, a);
        if (members.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return GroupAction(g, std::vector<std::vector<int>>(members.begin(), members.end()));
}

bool GroupAction::is_free() const {
  for (const auto& p : perms_) {
    if (is_identity(p)) continue;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (p[x] == static_cast<int>(x)) return false;
    }
  }
  return true;
}

QuotientResult quotient_graph(const WeightedGraph& g, const GroupAction& action) {
  const int n = g.size();
  std::vector<int> orbit(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (orbit[x] >= 0) continue;
    int q = static_cast<int>(reps.size());
    for (const auto& p : action.perms()) orbit[p[x]] = q;
    reps.push_back(x);
  }

  const int nq = static_cast<int>(reps.size());
  std::vector<std::string> labels(nq);
  RatVec measure(nq);
  std::vector<RatVec> weight(nq, RatVec(nq, Rat(0)));
  for (int a = 0; a < nq; ++a) {
    labels[a] = "[" + g.label(reps[a]) + "]";
    measure[a] = g.measure(reps[a]);
  }
  for (int a = 0; a < nq; ++a) {
    const int x = reps[a];
    for (int b = 0; b < nq; ++b) {
      const int y = reps[b];
      Rat s(0);
      if (a == b) {
        // Orbit self-weight: the original loop mass plus the edge mass
        // to the distinct orbit-mates of x.
        s = g.weight(x, x);
        for (const auto& p : action.perms()) {
          if (p[x] != x) s += g.weight(x, p[x]);
        }
      } else {
        for (const auto& p : action.perms()) s += g.weight(x, p[y]);
      }
      weight[a][b] = s;
    }
  }
  // w_Q is independent of orbit representatives; symmetry follows.
  for (int a = 0; a < nq; ++a) {
    for (int b = a + 1; b < nq; ++b) {
      if (weight[a][b] != weight[b][a]) throw std::logic_error("quotient weight asymmetry");
    }
  }
  return QuotientResult{WeightedGraph(std::move(labels), std::move(measure), std::move(weight)),
                        std::move(orbit)};
}

}  // namespace wtorus
