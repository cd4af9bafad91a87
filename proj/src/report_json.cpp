#include "gpfield/report_json.hpp"

#include <cmath>

namespace gpf {

Json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

namespace {

Json numbers(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(json_number(x));
  return out;
}

}  // namespace

Json to_json(const HypothesisReport& rep) {
  Json j;
  j["hypothesis"] = to_string(rep.hypothesis);
  j["passed"] = rep.passed;
  j["fitted_C0"] = json_number(rep.fitted_C0);
  j["alpha1"] = json_number(rep.alpha1);
  j["alpha2"] = rep.alpha2 ? json_number(*rep.alpha2) : Json(nullptr);
  j["A"] = rep.A ? json_number(*rep.A) : Json(nullptr);
  j["V_min"] = rep.V_min ? json_number(*rep.V_min) : Json(nullptr);
  j["samples"] = rep.samples;
  j["max_violation"] = json_number(rep.max_violation);
  return j;
}

Json to_json(const HphiReport& rep) {
  Json j;
  j["grad_h2_norm"] = json_number(rep.grad_h2_norm);
  j["density_defect_l2"] = json_number(rep.density_defect_l2);
  j["tail_fraction"] = json_number(rep.tail_fraction);
  j["tail_threshold"] = kHphiTailThreshold;
  j["passed"] = rep.passed;
  return j;
}

Json to_json(const AdmissiblePair& pair) {
  return Json{{"p", json_number(pair.p)}, {"q", json_number(pair.q)}, {"n", pair.n}};
}

Json to_json(const StrichartzReport& rep) {
  Json j;
  j["pair"] = to_json(rep.pair);
  j["T"] = json_number(rep.T);
  j["steps"] = rep.steps;
  j["ratio"] = json_number(rep.ratio);
  j["max_ratio"] = json_number(rep.max_ratio);
  j["num_fields"] = rep.num_fields;
  j["ratios"] = numbers(rep.ratios);
  j["spectrum"] = to_string(rep.spectrum);
  j["seed"] = rep.seed;
  j["grid"] = rep.grid_desc;
  return j;
}

Json to_json(const EnergyReport& rep, bool with_series) {
  Json j;
  j["e0"] = json_number(rep.e0);
  j["max_rel_drift"] = json_number(rep.max_rel_drift);
  j["max_abs_drift"] = json_number(rep.max_abs_drift);
  j["max_mass_drift"] = json_number(rep.max_mass_drift);
  j["floor"] = rep.floor;
  j["bookkeeping_mismatch"] = json_number(rep.bookkeeping_mismatch);
  if (with_series) {
    j["times"] = numbers(rep.times);
    j["series"] = numbers(rep.series);
    j["mass_series"] = numbers(rep.mass_series);
  }
  return j;
}

Json to_json(const ConvergenceResult& res) {
  Json j;
  j["dts"] = numbers(res.dts);
  j["errors"] = numbers(res.errors);
  j["order"] = json_number(res.order);
  j["exact"] = res.exact;
  return j;
}

Json trajectory_summary(const Trajectory& traj) {
  Json j;
  j["dt"] = traj.dt;
  j["steps"] = traj.steps;
  j["T"] = traj.final_time();
  j["snapshots"] = traj.w_fields.size();
  j["pair"] = to_json(traj.pair);
  j["xt_norm"] = json_number(traj.xt_norm);
  double sup_h1 = 0.0;
  for (double v : traj.h1_series) sup_h1 = std::max(sup_h1, v);
  j["sup_h1"] = json_number(sup_h1);
  if (traj.picard_iterations > 0) {
    j["picard_iterations"] = traj.picard_iterations;
    j["picard_differences"] = numbers(traj.picard_differences);
    j["picard_factors"] = numbers(traj.picard_history);
  }
  return j;
}

Json to_json(const RunConfig& c) {
  Json j;
  j["seed"] = c.seed;
  j["grid"] = {{"dim", c.grid.dim}, {"N", c.grid.N}, {"L", c.grid.L}};
  j["background"] = {{"type", to_string(c.background.type)}, {"rho0", c.background.rho0}};
  j["nonlinearity"] = {{"kind", to_string(c.nonlinearity.kind)},
                       {"rho0", c.nonlinearity.rho0},
                       {"alpha1", c.nonlinearity.alpha1},
                       {"alpha2", c.nonlinearity.alpha2}};
  j["solver"] = {{"scheme", to_string(c.solver.scheme)}, {"dt", c.solver.dt}, {"T", c.solver.T}};
  return j;
}

}  // namespace gpf
