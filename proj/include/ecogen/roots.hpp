#pragma once

#include <array>
#include <complex>

namespace ecogen {

// Roots of x^2 + b x + c = 0.
std::array<std::complex<double>, 2> solve_quadratic(double b, double c);

// Roots of the monic cubic x^3 + a x^2 + b x + c = 0, closed form
// (trigonometric / Cardano split on the discriminant) followed by a few
// Newton polish steps in complex arithmetic.
std::array<std::complex<double>, 3> solve_cubic(double a, double b, double c);

} // namespace ecogen
