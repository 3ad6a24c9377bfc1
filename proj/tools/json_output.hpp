#pragma once

#include "json.hpp"
#include "poisson_ore/spectra.hpp"

namespace poisson_ore::cli {

using Json = nlohmann::ordered_json;

/// {"side", "completeness", "entries": [{"kind", "generators", "parameters",
/// "certificates"}]} with the field order fixed.
Json to_json(const SpectrumDescription& s);
Json to_json(const DarbouxSearch& s);

}  // namespace poisson_ore::cli
