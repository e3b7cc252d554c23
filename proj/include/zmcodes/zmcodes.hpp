#pragma once

/// Umbrella header for the whole library.

#include "ring.hpp"        // IWYU pragma: export
#include "matrix.hpp"      // IWYU pragma: export
#include "howell.hpp"      // IWYU pragma: export
#include "linalg.hpp"      // IWYU pragma: export
#include "linear_code.hpp" // IWYU pragma: export
#include "matrix_product.hpp"  // IWYU pragma: export
#include "torsion.hpp"     // IWYU pragma: export
#include "oracle.hpp"      // IWYU pragma: export
#include "suites.hpp"      // IWYU pragma: export
#include "spec_io.hpp"     // IWYU pragma: export
