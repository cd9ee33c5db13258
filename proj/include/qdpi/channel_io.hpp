#pragma once

// JSON file formats.
//
//   Kraus set: {"dimIn": n, "dimOut": m,
//               "ops": [ [ [ [re, im], ... ], ... ], ... ]}
//              each operator is a list of dimOut rows of dimIn entries.
//   State:     {"dim": d, "matrix": [ [ [re, im], ... ], ... ]}
//   Ensemble:  {"probs": [p, ...], "states": [ [ [re, im], ... ], ... ]}

#include <filesystem>
#include <string>

#include "qdpi/channel.hpp"
#include "qdpi/state.hpp"

namespace qdpi {

/// Parse errors raise ValidationError; messages name the operator index.
KrausChannel kraus_from_json(const std::string& text);
std::string kraus_to_json(const KrausChannel& s);
/// Raises IoError when the file cannot be read, ValidationError otherwise.
KrausChannel load_kraus_file(const std::filesystem::path& path);

DensityMatrix state_from_json(const std::string& text);
std::string state_to_json(const DensityMatrix& rho);
DensityMatrix load_state_file(const std::filesystem::path& path);

Ensemble ensemble_from_json(const std::string& text);
Ensemble load_ensemble_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace qdpi
