#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wtorus/heat.hpp"
#include "wtorus/suite.hpp"
#include "wtorus/verify.hpp"

namespace {

using nlohmann::json;
using namespace wtorus;

struct Options {
  std::string matrix;
  std::string weights;
  std::string graph_file;
  std::string moment;
  std::string format = "json";
  std::string out;
  int n = 1;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  int cyclic = 0;
  int rot = 1;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(opt.out);
    f << text << "\n";
  }
}

IntMat need_matrix(const Options& opt) {
  if (opt.matrix.empty()) throw CLI::ValidationError("-A is required");
  return IntMat::parse(opt.matrix);
}

std::vector<Rat> need_weights(const Options& opt, int d) {
  if (opt.weights.empty()) throw CLI::ValidationError("-w is required");
  auto w = parse_rat_vec(opt.weights);
  if (static_cast<int>(w.size()) != d) throw CLI::ValidationError("weight dimension mismatch");
  return w;
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open graph file: " + path);
  json j;
  f >> j;
  return WeightedGraph::from_json(j);
}

std::string render_report(const Options& opt, const VerificationReport& r) {
  if (opt.format == "pretty") {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " " << r.identity << " [" << r.params << "]\n"
       << "  lhs = " << r.lhs << "\n  rhs = " << r.rhs << "\n  abs_err = " << r.abs_discrepancy
       << "  rel_err = " << r.rel_discrepancy << "  tol = " << r.tolerance << "  ("
       << r.elapsed_ms << " ms)";
    return os.str();
  }
  return r.to_json().dump(2);
}

json dual_json(const IntMat& A) {
  json out = json::array();
  for (const auto& xi : dual_points(A)) {
    std::string s;
    for (std::size_t i = 0; i < xi.size(); ++i) {
      if (i) s += ',';
      s += rat_str(xi[i]);
    }
    out.push_back(s);
  }
  return out;
}

int run_reports(const Options& opt, const std::vector<VerificationReport>& reports) {
  if (opt.format == "pretty") {
    std::string text;
    for (const auto& r : reports) text += render_report(opt, r) + "\n";
    emit(opt, text);
  } else if (reports.size() == 1) {
    emit(opt, render_report(opt, reports[0]));
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    emit(opt, arr.dump(2));
  }
  for (const auto& r : reports) {
    if (!r.pass) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted discrete tori: heat kernels, spectra, and identity verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-A,--matrix", opt.matrix, "integer matrix, rows ';'-separated: \"1,1;-1,1\"");
    sub->add_option("-w,--weights", opt.weights, "rational weights, comma-separated: \"1,1/2\"");
    sub->add_option("-n", opt.n, "step count / exponent");
    sub->add_option("--tol", opt.tol, "verification tolerance");
    sub->add_option("--format", opt.format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--out", opt.out, "write output to file");
  };

  auto* dual = app.add_subcommand("dual", "list the dual torus points T_A*");
  auto* cosets = app.add_subcommand("cosets", "list coset representatives of Z^d/AZ^d");
  auto* spectrum = app.add_subcommand("spectrum", "torus Laplacian spectrum with witnesses");
  auto* heat = app.add_subcommand("heat", "heat kernel table q_0..q_n (CSV)");
  auto* lattice_cmd = app.add_subcommand("lattice-pn", "closed-form lattice kernel value");
  auto* verify = app.add_subcommand("verify", "verify one of the identities");
  auto* suite = app.add_subcommand("suite", "run the full seeded acceptance grid");
  for (auto* s : {dual, cosets, spectrum, heat, lattice_cmd, suite}) add_common(s);

  std::string vec_arg;
  lattice_cmd->add_option("-v,--vector", vec_arg, "lattice vector, comma-separated");
  heat->add_option("--graph", opt.graph_file, "graph JSON file instead of -A/-w");
  suite->add_option("--seed", opt.seed, "RNG seed for the grid");

  verify->require_subcommand(1);
  std::vector<CLI::App*> verify_subs;
  for (const char* name : {"eq1", "eq2", "trace", "quotient", "expansion"}) {
    auto* s = verify->add_subcommand(name);
    add_common(s);
    verify_subs.push_back(s);
  }
  verify_subs[1]->add_option("-m,--moment", opt.moment, "moment vector, comma-separated");
  verify_subs[2]->add_option("--graph", opt.graph_file, "graph JSON file instead of -A/-w");
  verify_subs[3]->add_option("--cyclic", opt.cyclic, "cycle size N for a C_N rotation quotient");
  verify_subs[3]->add_option("--rot", opt.rot, "rotation step for --cyclic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (*dual) {
      emit(opt, dual_json(need_matrix(opt)).dump());
      return 0;
    }
    if (*cosets) {
      json out = json::array();
      for (const auto& r : coset_reps(need_matrix(opt))) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (i) s += ',';
          s += std::to_string(r[i]);
        }
        out.push_back(s);
      }
      emit(opt, out.dump());
      return 0;
    }
    if (*spectrum) {
      const IntMat A = need_matrix(opt);
      const TorusSpec spec(A);
      const LatticeWeights lw(need_weights(opt, A.d));
      json j;
      json vals = json::array();
      for (double v : torus_spectrum(spec, lw)) {
        std::ostringstream os;
        os.precision(17);
        os << v;
        vals.push_back(os.str());
      }
      j["spectrum"] = vals;
      json wit = json::array();
      for (const auto& xi : spec.dual()) {
        json e;
        json xs = json::array();
        for (const auto& x : xi) xs.push_back(rat_str(x));
        e["xi"] = xs;
        e["eigenvalue"] = torus_eigenvalue(xi, lw);
        wit.push_back(e);
      }
      j["witnesses"] = wit;
      emit(opt, j.dump(2));
      return 0;
    }
    if (*heat) {
      WeightedGraph g = opt.graph_file.empty()
                            ? [&] {
                                const IntMat A = need_matrix(opt);
                                return torus_graph(TorusSpec(A), LatticeWeights(need_weights(opt, A.d)));
                              }()
                            : load_graph(opt.graph_file);
      const HeatKernelTable t(g, opt.n);
      std::ostringstream os;
      os << "step,x_label,y_label,value\n";
      for (int k = 0; k <= t.steps(); ++k) {
        for (int x = 0; x < g.size(); ++x) {
          for (int y = 0; y < g.size(); ++y) {
            os << k << ",\"" << g.label(x) << "\",\"" << g.label(y) << "\"," << rat_str(t.q(k, x, y))
               << "\n";
          }
        }
      }
      emit(opt, os.str());
      return 0;
    }
    if (*lattice_cmd) {
      const LatticeWeights lw(parse_rat_vec(opt.weights));
      const IVec v = parse_int_vec(vec_arg);
      json j;
      j["pn"] = rat_str(lattice_pn(lw, opt.n, v));
      j["qn"] = rat_str(lattice_qn(lw, opt.n, v));
      emit(opt, j.dump());
      return 0;
    }
    if (*verify) {
      std::vector<VerificationReport> reports;
      if (*verify_subs[0]) {
        const IntMat A = need_matrix(opt);
        reports.push_back(verify_eq1(A, need_weights(opt, A.d), opt.n, opt.tol));
      } else if (*verify_subs[1]) {
        const IntMat A = need_matrix(opt);
        if (opt.moment.empty()) throw CLI::ValidationError("-m is required");
        reports.push_back(verify_eq2(A, parse_int_vec(opt.moment), opt.tol));
      } else if (*verify_subs[2]) {
        WeightedGraph g = opt.graph_file.empty()
                              ? [&] {
                                  const IntMat A = need_matrix(opt);
                                  return torus_graph(TorusSpec(A), LatticeWeights(need_weights(opt, A.d)));
                                }()
                              : load_graph(opt.graph_file);
        reports.push_back(verify_trace(g, opt.n, opt.tol));
      } else if (*verify_subs[3]) {
        if (opt.cyclic > 0) {
          const WeightedGraph g = WeightedGraph::cycle(opt.cyclic);
          std::vector<int> rot(opt.cyclic);
          for (int i = 0; i < opt.cyclic; ++i) rot[i] = (i + opt.rot) % opt.cyclic;
          reports.push_back(verify_quotient(g, GroupAction::from_generators(g, {rot}), opt.n));
        } else {
          // Covering T_{2A} -> T_A.
          const IntMat A = need_matrix(opt);
          const LatticeWeights lw(need_weights(opt, A.d));
          const TorusSpec big(A.scaled(2));
          const WeightedGraph g = torus_graph(big, lw);
          reports.push_back(verify_quotient(g, covering_action(g, big, A, 2), opt.n));
        }
      } else {
        const IntMat A = need_matrix(opt);
        reports.push_back(verify_spectral_expansion(A, need_weights(opt, A.d), opt.n, opt.tol));
      }
      return run_reports(opt, reports);
    }
    if (*suite) {
      const auto results = run_acceptance_suite(opt.seed);
      json arr = json::array();
      int passed = 0;
      for (const auto& r : results) {
        arr.push_back({{"criterion", r.name},
                       {"pass", r.pass},
                       {"checks", r.checks},
                       {"ms", r.elapsed_ms},
                       {"detail", r.detail}});
        if (r.pass) ++passed;
      }
      emit(opt, arr.dump(2));
      std::cout << "PASS " << passed << "/" << results.size() << "\n";
      return passed == static_cast<int>(results.size()) ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
