#pragma once

namespace penta {

// Selects between the OpenMP kernel and its serial reference. Both produce identical results.
enum class Exec { serial, parallel };

}  // namespace penta
