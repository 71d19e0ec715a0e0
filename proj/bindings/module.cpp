#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wtorus/heat.hpp"
#include "wtorus/suite.hpp"
#include "wtorus/verify.hpp"

namespace py = pybind11;
using namespace wtorus;

namespace {

std::vector<Rat> to_rats(const std::vector<std::string>& v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(parse_rat(s));
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["identity"] = r.identity;
  d["params"] = r.params;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["abs_err"] = r.abs_discrepancy;
  d["rel_err"] = r.rel_discrepancy;
  d["tol"] = r.tolerance;
  d["pass"] = r.pass;
  d["ms"] = r.elapsed_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(pywtorus, m) {
  m.doc() = "discrete-time heat kernels on weighted tori and exact identity verification";

  m.def("cos2pi", [](const std::string& t) { return cos2pi(parse_rat(t)); }, py::arg("t"));

  m.def("compositions", [](long k, int d) { return compositions(Rat(k), d); },
        py::arg("k"), py::arg("d"));

  m.def("multinomial_vec",
        [](int n, const IVec& a, const IVec& z) { return multinomial_vec(n, a, z).get_str(); },
        py::arg("n"), py::arg("a"), py::arg("z"));

  m.def("lattice_pn",
        [](const std::vector<std::string>& w, int n, const IVec& v) {
          return rat_str(lattice_pn(LatticeWeights(to_rats(w)), n, v));
        },
        py::arg("w"), py::arg("n"), py::arg("v"));

  m.def("lattice_qn",
        [](const std::vector<std::string>& w, int n, const IVec& v) {
          return rat_str(lattice_qn(LatticeWeights(to_rats(w)), n, v));
        },
        py::arg("w"), py::arg("n"), py::arg("v"));

  m.def("ball_points",
        [](const std::string& A, int n) { return ball_points(IntMat::parse(A), n); },
        py::arg("A"), py::arg("n"));

  m.def("hnf", [](const std::string& A) {
    const auto [H, U] = hnf(IntMat::parse(A));
    return py::make_tuple(H.str(), U.str());
  });

  m.def("coset_reps", [](const std::string& A) { return coset_reps(IntMat::parse(A)); });

  m.def("dual_points", [](const std::string& A) {
    std::vector<std::vector<std::string>> out;
    for (const auto& xi : dual_points(IntMat::parse(A))) {
      std::vector<std::string> row;
      for (const auto& x : xi) row.push_back(rat_str(x));
      out.push_back(std::move(row));
    }
    return out;
  });

  m.def("torus_spectrum", [](const std::string& A, const std::vector<std::string>& w) {
    const IntMat mat = IntMat::parse(A);
    return torus_spectrum(TorusSpec(mat), LatticeWeights(to_rats(w)));
  });

  m.def("torus_qn", [](const std::string& A, const std::vector<std::string>& w, int n,
                       const IVec& x, const IVec& y) {
    const IntMat mat = IntMat::parse(A);
    return rat_str(torus_qn_closed(TorusSpec(mat), LatticeWeights(to_rats(w)), n, x, y));
  });

  m.def("heat_trace", [](const std::string& A, const std::vector<std::string>& w, int n) {
    const IntMat mat = IntMat::parse(A);
    return rat_str(heat_trace(torus_graph(TorusSpec(mat), LatticeWeights(to_rats(w))), n));
  });

  m.def("verify_eq1",
        [](const std::string& A, const std::vector<std::string>& w, int n, double tol) {
          return report_dict(verify_eq1(IntMat::parse(A), to_rats(w), n, tol));
        },
        py::arg("A"), py::arg("w"), py::arg("n"), py::arg("tol") = 1e-9);

  m.def("verify_eq2",
        [](const std::string& A, const IVec& mvec, double tol) {
          return report_dict(verify_eq2(IntMat::parse(A), mvec, tol));
        },
        py::arg("A"), py::arg("m"), py::arg("tol") = 1e-9);

  m.def("verify_spectral_expansion",
        [](const std::string& A, const std::vector<std::string>& w, int n, double tol) {
          return report_dict(verify_spectral_expansion(IntMat::parse(A), to_rats(w), n, tol));
        },
        py::arg("A"), py::arg("w"), py::arg("n"), py::arg("tol") = 1e-9);

  m.def("run_acceptance_suite", [](std::uint64_t seed) {
    py::list out;
    for (const auto& r : run_acceptance_suite(seed)) {
      py::dict d;
      d["criterion"] = r.name;
      d["pass"] = r.pass;
      d["checks"] = r.checks;
      d["ms"] = r.elapsed_ms;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("seed") = 1);
}
