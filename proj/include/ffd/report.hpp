#pragma once

#include <json.hpp>

#include "ffd/algebras.hpp"
#include "ffd/circuits.hpp"
#include "ffd/genmodel.hpp"
#include "ffd/spectral.hpp"
#include "ffd/transfer.hpp"

namespace ffd {

/// Schema version stamped on every JSON document as "spec_version".
inline constexpr const char* kSchemaVersion = "1.0";

using json = nlohmann::ordered_json;

json to_json(const Representation& rep);
json to_json(const AlgebraWord& w);
json to_json(const CircuitGeometry& geo);
json to_json(const SpectralSignature& sig);
json to_json(const QuasiEnergySet& q);
json to_json(const GenAngles& a);

/// Parses the record written by to_json(Representation).
Representation representation_from_json(const json& j);

/// Adds "spec_version" as the first key.
json versioned(json body);

/// Value with the tolerance it was judged against.
json judged(double value, double tol);

}  // namespace ffd
