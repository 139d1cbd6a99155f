#pragma once

namespace typlab {

// Execution mode for the search kernels. Serial is the reference
// implementation; Parallel must produce byte-identical results.
enum class ExecMode { Serial, Parallel };

int hardware_threads();

}  // namespace typlab
