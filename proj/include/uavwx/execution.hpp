#pragma once

namespace uavwx {

/// Selects the serial reference loop or the OpenMP loop of a sweep kernel.
/// Both produce identical results; the serial path is the test reference.
enum class Execution { serial, parallel };

/// True when the library was built with OpenMP.
bool openmp_enabled();

}  // namespace uavwx
