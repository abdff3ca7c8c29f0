#include "eisw/json_io.hpp"

namespace eisw {

using nlohmann::json;

json p1_to_json(long N) {
  json j;
  j["N"] = N;
  json classes = json::array();
  for (const auto& g : p1_list(N)) classes.push_back(json::array({g.c, g.d}));
  j["classes"] = classes;
  j["count"] = classes.size();
  return j;
}

json cusps_to_json(long N) {
  require_level(N);
  json j;
  j["N"] = N;
  json cusps = json::array();
  for (long key : divisors(N)) {
    json c;
    c["key"] = key;
    c["ramification"] = ramification_index(N, CuspClass{key});
    c["cusp"] = (key == N) ? std::string("oo") : (key == 1 ? std::string("0") : "1/" + std::to_string(key));
    cusps.push_back(c);
  }
  j["cusps"] = cusps;
  return j;
}

json divisor_to_json(long N, long m) {
  json j;
  j["N"] = N;
  j["m"] = m;
  json d;
  for (const auto& [key, c] : eisenstein_divisor(N, m)) d[std::to_string(key)] = rat_to_string(c);
  j["divisor"] = d;
  return j;
}

json period_to_json(long N, long m, const Mat22& gamma) {
  json j;
  j["N"] = N;
  j["m"] = m;
  j["gamma"] = json::array(
      {gamma.a.get_str(), gamma.b.get_str(), gamma.c.get_str(), gamma.d.get_str()});
  j["value"] = rat_to_string(period(N, m, gamma));
  return j;
}

json element_to_json(long N, long m) {
  FValues fv = f_values(N, m);
  json j;
  j["N"] = N;
  j["m"] = m;
  j["scale"] = 6;
  json values = json::array();
  for (const auto& [g, F] : fv.values) {
    json entry;
    entry["g"] = json::array({g.c, g.d});
    entry["F"] = rat_to_string(F / 6);
    values.push_back(entry);
  }
  j["values"] = values;
  return j;
}

json winding_to_json(long N) {
  WindingElement w = winding_element(N);
  json j;
  j["N"] = N;
  j["n"] = w.n.get_str();
  json terms = json::array();
  for (const auto& [v, c] : w.coeffs) {
    json t;
    t["v"] = v;
    t["coeff"] = rat_to_string(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  CuspDivisor bd = boundary(N, w.chain);
  j["boundary"] = bd.empty() ? "0" : "nonzero";
  const HomologyPresentation& pres = presentation_cached(N);
  json reduced = json::array();
  FormalChain scaled = w.chain * Rat(w.n);
  for (const auto& c : pres.reduce(scaled)) reduced.push_back(rat_to_string(c));
  j["reduced_n_e"] = reduced;
  j["n_e_integral"] = pres.is_integral(scaled);
  return j;
}

json report_to_json(const VerifyReport& report) {
  json j;
  j["N"] = report.N;
  j["m"] = report.m;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["pass"] = report.all_pass();
  return j;
}

std::string dump_deterministic(const json& j) { return j.dump(2) + "\n"; }

}  // namespace eisw
