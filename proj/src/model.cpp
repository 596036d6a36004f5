#include "ecogen/model.hpp"

#include <stdexcept>

namespace ecogen {

StateVector rhs_scaled(const ScaledParameters& p, const StateVector& u) {
    const double den = u.X + p.A;
    if (!(den > 0.0))
        throw std::domain_error("rhs_scaled: X + A must be positive");
    const double response = p.B * u.X / den; // Holling type II term BX/(X+A)
    const double predators = p.c * u.Y + u.Z;
    return {p.r * (1.0 - u.X) * u.X - response * predators,
            p.w * predators * response - p.s * u.Y,
            p.v * predators * response - p.d * u.Z};
}

StateVector rhs_raw(const RawParameters& rp, const StateVector& u) {
    const double den = u.X + rp.mu;
    if (!(den > 0.0))
        throw std::domain_error("rhs_raw: x + mu must be positive");
    const double response = rp.xi * u.X / den;
    const double recruitment = rp.e * (rp.h * u.Y + rp.g * u.Z) * response;
    return {rp.R * (1.0 - u.X / rp.Ktilde) * u.X - rp.h * response * u.Y - rp.g * response * u.Z,
            rp.p * recruitment - rp.m * u.Y,
            rp.q * recruitment - rp.n * u.Z};
}

Matrix3 jacobian(const ScaledParameters& p, const StateVector& u) {
    const double den = u.X + p.A;
    if (!(den > 0.0))
        throw std::domain_error("jacobian: X + A must be positive");
    const double response = p.B * u.X / den;
    const double dresponse = p.B * p.A / (den * den); // d/dX of BX/(X+A)
    const double predators = p.c * u.Y + u.Z;

    Matrix3 J;
    J(0, 0) = p.r * (1.0 - 2.0 * u.X) - predators * dresponse;
    J(0, 1) = -p.c * response;
    J(0, 2) = -response;
    J(1, 0) = p.w * predators * dresponse;
    J(1, 1) = p.w * p.c * response - p.s;
    J(1, 2) = p.w * response;
    J(2, 0) = p.v * predators * dresponse;
    J(2, 1) = p.v * p.c * response;
    J(2, 2) = p.v * response - p.d;
    return J;
}

} // namespace ecogen
