#pragma once

#include "ecogen/params.hpp"
#include "ecogen/types.hpp"

namespace ecogen {

// Vector field of the rescaled system
//   X' = r (1 - X) X - c BX/(X+A) Y - BX/(X+A) Z
//   Y' = w (cY + Z) BX/(X+A) - s Y
//   Z' = v (cY + Z) BX/(X+A) - d Z
// Throws std::domain_error when X + A <= 0.
StateVector rhs_scaled(const ScaledParameters& p, const StateVector& u);

// Vector field of the dimensional system; `u` carries (x, y, z).
// Throws std::domain_error when x + mu <= 0.
StateVector rhs_raw(const RawParameters& raw, const StateVector& u);

// Jacobian of the rescaled vector field. Throws when X + A <= 0.
Matrix3 jacobian(const ScaledParameters& p, const StateVector& u);

} // namespace ecogen
