#include "ffd/report.hpp"

#include "ffd/error.hpp"

namespace ffd {

json to_json(const Representation& rep) {
  json g = json::array();
  for (const auto& p : rep.generators) g.push_back(p.to_string());
  return {{"kind", to_string(rep.kind)}, {"m", rep.m}, {"n_sites", rep.n_sites}, {"generators", g}};
}

Representation representation_from_json(const json& j) {
  try {
    Representation rep;
    rep.kind = parse_rep_kind(j.at("kind").get<std::string>());
    rep.m = j.at("m").get<int>();
    rep.n_sites = j.at("n_sites").get<int>();
    for (const auto& g : j.at("generators")) rep.generators.push_back(PauliString::parse(g.get<std::string>(), rep.n_sites));
    if (static_cast<int>(rep.generators.size()) != rep.m) throw ParseError("generator count does not match m");
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad representation record: ") + e.what());
  }
}

json to_json(const AlgebraWord& w) {
  return {{"indices", w.indices}, {"coefficient", {w.coefficient.real(), w.coefficient.imag()}}};
}

json to_json(const CircuitGeometry& geo) {
  json gates = json::array();
  for (const Gate& g : geo.gates()) gates.push_back({{"index", g.index}, {"angle", g.angle}});
  return {{"label", geo.label()},
          {"product", geo.to_string()},
          {"application_order", gates},
          {"constrained", geo.constrained()},
          {"cyclically_shifted", geo.cyclically_shifted()}};
}

json to_json(const SpectralSignature& sig) {
  json j = {{"phases", sig.phases},
            {"distinct", sig.distinct},
            {"multiplicities", sig.multiplicities},
            {"n_distinct", sig.n_distinct},
            {"n_distinct_diffs", sig.n_distinct_diffs},
            {"degeneracy", nullptr},
            {"conjugation_symmetric", sig.conjugation_symmetric},
            {"verdict", to_string(sig.verdict)},
            {"modes", sig.modes},
            {"tol", sig.tol}};
  if (sig.uniform_degeneracy) j["degeneracy"] = *sig.uniform_degeneracy;
  return j;
}

json to_json(const QuasiEnergySet& q) {
  return {{"v_tilde", q.v_tilde}, {"eps", q.eps}, {"eps_angle", q.eps_angle}};
}

json to_json(const GenAngles& a) {
  return {{"regime", a.regime == Regime::HermitianRealV ? "HermitianRealV" : "UnitaryImaginaryY"},
          {"phiA", a.phiA},
          {"phiB", a.phiB},
          {"phiC", a.phiC}};
}

json versioned(json body) {
  json out = {{"spec_version", kSchemaVersion}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

json judged(double value, double tol) { return {{"value", value}, {"tol", tol}, {"ok", value <= tol}}; }

}  // namespace ffd
