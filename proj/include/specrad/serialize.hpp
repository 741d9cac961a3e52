#pragma once

#include <nlohmann/json.hpp>

#include "specrad/convexity.hpp"
#include "specrad/matrix.hpp"
#include "specrad/oracle.hpp"
#include "specrad/structure.hpp"

namespace specrad {

nlohmann::json matrix_to_json(const NonnegMatrix& m);
NonnegMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const StructureReport& r);
nlohmann::json witness_to_json(const EqualityWitness& w);
nlohmann::json certificate_to_json(const ConvexityCertificate& c);
nlohmann::json sweep_to_json(const SweepReport& r);

}  // namespace specrad
