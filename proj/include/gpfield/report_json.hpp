#pragma once

#include <json.hpp>

#include "gpfield/background.hpp"
#include "gpfield/config.hpp"
#include "gpfield/conservation.hpp"
#include "gpfield/nonlinearity.hpp"
#include "gpfield/propagator.hpp"
#include "gpfield/solver.hpp"
#include "gpfield/trajectory.hpp"

namespace gpf {

using Json = nlohmann::ordered_json;

/// Finite values stay numbers; infinities become the strings "inf" / "-inf"
/// and NaN becomes null, since JSON has no literal for them.
Json json_number(double v);

Json to_json(const HypothesisReport& rep);
Json to_json(const HphiReport& rep);
Json to_json(const AdmissiblePair& pair);
Json to_json(const StrichartzReport& rep);
/// `with_series` adds the per-snapshot energy and mass arrays.
Json to_json(const EnergyReport& rep, bool with_series = true);
Json to_json(const ConvergenceResult& res);
/// Scalar summary of a run (no fields).
Json trajectory_summary(const Trajectory& traj);
Json to_json(const RunConfig& cfg);

}  // namespace gpf
