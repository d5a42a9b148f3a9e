#pragma once

#include <json.hpp>

#include "hn/bundle.hpp"
#include "hn/moduli.hpp"
#include "hn/polygon.hpp"
#include "hn/sequences.hpp"

namespace hn {

// JSON forms for CLI output. Keys come out sorted (nlohmann::json object
// ordering), so serialized output is byte-stable for identical inputs.
// Rational values serialize as strings "s/r", integer slopes as "s"; integer
// quantities (ranks, degrees, dimensions) stay JSON numbers.

nlohmann::json slope_json(const Slope& s);
nlohmann::json bundle_json(const Bundle& v);
nlohmann::json polygon_json(const HNPolygon& p);
nlohmann::json decision_json(const Decision& d);
nlohmann::json stratum_json(const StratumDims& dims);
nlohmann::json verify_report_json(const VerifyReport& rep);
nlohmann::json kernel_lemma_json(const KernelLemmaReport& rep);
nlohmann::json sweep_json(const SweepStats& stats);

}  // namespace hn
