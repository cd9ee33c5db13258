#pragma once

namespace qdpi {

/// Serial is the reference path; Parallel must reproduce it exactly.
enum class Execution { Serial, Parallel };

}  // namespace qdpi
