#include "ecogen/equilibria.hpp"

#include <cmath>

#include "ecogen/errors.hpp"

namespace ecogen {

DerivedQuantities derived(const ScaledParameters& p) {
    DerivedQuantities dq;
    dq.Q = p.s * p.v + p.c * p.d * p.w;
    dq.V = p.B * dq.Q - p.d * p.s;
    dq.W = p.B * dq.Q - p.d * p.s * (p.A + 1.0);
    return dq;
}

Equilibrium origin() {
    return {EquilibriumKind::Origin, {0.0, 0.0, 0.0}, true, false};
}

Equilibrium prey_only() {
    return {EquilibriumKind::PreyOnly, {1.0, 0.0, 0.0}, true, false};
}

Equilibrium coexistence(const ScaledParameters& p) {
    const DerivedQuantities dq = derived(p);
    if (std::abs(dq.V) <= kZeroTol)
        throw degenerate_error("coexistence: V = 0, closed forms are singular");

    Equilibrium eq;
    eq.kind = EquilibriumKind::Coexistence;
    eq.boundary = std::abs(dq.W) <= kZeroTol;
    eq.feasible = dq.V > 0.0 && dq.W >= -kZeroTol;

    const double v2 = dq.V * dq.V;
    eq.state.X = p.A * p.d * p.s / dq.V;
    if (eq.boundary) {
        // W multiplies both predator components; on the boundary the state
        // coincides with (X*, 0, 0).
        eq.state.Y = 0.0;
        eq.state.Z = 0.0;
    } else {
        eq.state.Y = p.w * p.A * p.d * p.r * dq.W / v2;
        eq.state.Z = p.v * p.A * p.s * p.r * dq.W / v2;
    }
    return eq;
}

double transcritical_B(const ScaledParameters& p) {
    const double Q = p.s * p.v + p.c * p.d * p.w;
    if (std::abs(Q) <= kZeroTol)
        throw degenerate_error("transcritical_B: Q = 0, threshold undefined");
    return p.d * p.s * (p.A + 1.0) / Q;
}

} // namespace ecogen
