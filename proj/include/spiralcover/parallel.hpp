#pragma once

namespace spiralcover {

/// Selects between the OpenMP kernel and the serial reference loop.
/// Both paths produce identical results; the serial one exists for
/// testing and for callers that already parallelize at a coarser level.
enum class Execution { serial, parallel };

}  // namespace spiralcover
