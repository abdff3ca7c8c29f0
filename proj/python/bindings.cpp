#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eisw/eisenstein.hpp"
#include "eisw/homology.hpp"
#include "eisw/json_io.hpp"
#include "eisw/numeric.hpp"

namespace py = pybind11;
using namespace eisw;

namespace {

// rationals cross the boundary as exact "p/q" strings
std::string rs(const Rat& r) { return rat_to_string(r); }

Mat22 mat_from(const std::array<std::string, 4>& e) {
  return Mat22{Int(e[0]), Int(e[1]), Int(e[2]), Int(e[3])};
}

py::dict chain_to_dict(const FormalChain& chain) {
  py::dict out;
  for (const auto& [g, c] : chain.terms()) out[py::make_tuple(g.c, g.d)] = rs(c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Eisenstein and winding elements of modular symbols for Gamma_0(N)";

  m.def("bbar1", [](const std::string& x) { return rs(bbar1(rat_from_string(x))); },
        py::arg("x"), "periodized first Bernoulli polynomial of a rational 'p/q'");
  m.def("dedekind_sum",
        [](long u, long v) { return rs(dedekind_sum(u, v)); }, py::arg("u"), py::arg("v"));
  m.def("dedekind_sum_fast",
        [](long u, long v) { return rs(dedekind_sum_fast(u, v)); }, py::arg("u"), py::arg("v"));
  m.def("xgcd", [](long a, long b) {
    auto e = xgcd(a, b);
    return py::make_tuple(e.g.get_si(), e.x.get_si(), e.y.get_si());
  });

  m.def("p1_list", [](long N) {
    py::list out;
    for (const auto& g : p1_list(N)) out.append(py::make_tuple(g.c, g.d));
    return out;
  });
  m.def("p1_normalize", [](long N, long c, long d) {
    P1Class g = p1_normalize(N, c, d);
    return py::make_tuple(g.c, g.d);
  });
  m.def("twist_map", &twist_map, py::arg("N"), py::arg("m"), py::arg("k"));

  m.def("cusp_classify", [](long N, long a, long c) { return cusp_classify(N, a, c).key; });
  m.def("ramification_index", [](long N, long key) { return ramification_index(N, CuspClass{key}); });
  m.def("eisenstein_a0", [](long N, long m, long key) { return rs(eisenstein_a0(N, m, CuspClass{key})); });
  m.def("eisenstein_divisor", [](long N, long m) {
    py::dict out;
    for (const auto& [key, c] : eisenstein_divisor(N, m)) out[py::cast(key)] = rs(c);
    return out;
  });

  m.def("q_expansion", [](long N, long m, long n_max) {
    py::list out;
    for (const auto& a : q_expansion(N, m, n_max)) out.append(py::cast(a.get_str()));
    return out;
  });
  m.def("period", [](long N, long m, const std::array<std::string, 4>& gamma) {
    return rs(period(N, m, mat_from(gamma)));
  });
  m.def("f_values", [](long N, long m) {
    py::dict out;
    for (const auto& [g, F] : f_values(N, m).values) out[py::make_tuple(g.c, g.d)] = rs(F);
    return out;
  });
  m.def("eisenstein_element", [](long N, long m) { return chain_to_dict(eisenstein_element(N, m)); });
  m.def("winding_element", [](long N) {
    WindingElement w = winding_element(N);
    py::dict out;
    out["N"] = w.N;
    out["n"] = py::cast(w.n.get_str());
    py::dict coeffs;
    for (const auto& [v, c] : w.coeffs) coeffs[py::cast(v)] = rs(c);
    out["coeffs"] = coeffs;
    out["chain"] = chain_to_dict(w.chain);
    return out;
  });
  m.def("genus_x0", &genus_x0);
  m.def("presentation_rank", [](long N) { return HomologyPresentation(N).rank(); });

  m.def("verify_eisenstein", [](long N, long m) {
    VerifyReport r = verify_eisenstein(N, m);
    py::list checks;
    for (const auto& c : r.checks) {
      py::dict d;
      d["name"] = c.name;
      d["pass"] = c.pass;
      d["detail"] = c.detail;
      checks.append(d);
    }
    py::dict out;
    out["N"] = r.N;
    out["m"] = r.m;
    out["checks"] = checks;
    out["pass"] = r.all_pass();
    return out;
  });
  m.def("verify_period", [](long N, long m, const std::array<std::string, 4>& gamma, double tol) {
    auto chk = verify_period(N, m, mat_from(gamma), tol);
    return py::make_tuple(chk.pass, chk.residual);
  }, py::arg("N"), py::arg("m"), py::arg("gamma"), py::arg("tol") = 1e-6);

  m.attr("__version__") = "0.1.0";
}
