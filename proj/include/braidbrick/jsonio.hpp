#pragma once

#include <json.hpp>

#include "braidbrick/braid.hpp"
#include "braidbrick/brick.hpp"
#include "braidbrick/classify.hpp"
#include "braidbrick/cluster.hpp"
#include "braidbrick/derive.hpp"
#include "braidbrick/links.hpp"
#include "braidbrick/quiver.hpp"

// JSON views of the core structures. All adapters are lossless where a
// round trip exists (braid, matrix); the rest are one-way report shapes
// consumed by the CLI. Rationals are rendered "num/den" with the
// denominator always explicit so consumers never branch on integrality.
namespace braidbrick {

nlohmann::json braid_json(const Braid& w);
Braid braid_from_json(const nlohmann::json& j);

// Vertices carry 1-based word positions, matching Brick.
nlohmann::json quiver_json(const BrickQuiver& q);

nlohmann::json matrix_json(const ExchangeMatrix& m);
ExchangeMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json types_json(const std::vector<DynkinType>& ts);
nlohmann::json verdict_json(const TypeVerdict& v);

nlohmann::json orbit_json(const OrbitReport& r);
nlohmann::json fillings_json(const FillingSeeds& f);

// Steps serialize as {"move","piece"} plus "pos" for single-argument
// moves and "positions" for delete.
nlohmann::json trace_json(const std::vector<TraceStep>& steps);
nlohmann::json decomposition_json(const LinkDecomposition& d);
nlohmann::json classify_json(const ClassifyVerdict& v);

nlohmann::json derivation_check_json(const Derivation& d, const CheckResult& r);
nlohmann::json endpoint_report_json(const EndpointReport& r);
nlohmann::json component_report_json(const ComponentReport& r);

}  // namespace braidbrick
