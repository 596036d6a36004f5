#pragma once

#include "ecogen/params.hpp"
#include "ecogen/types.hpp"

namespace ecogen {

// Q = sv + cdw, V = BQ - ds, W = BQ - ds(A+1), so W = V - dsA identically.
struct DerivedQuantities {
    double Q = 0.0;
    double V = 0.0;
    double W = 0.0;

    bool operator==(const DerivedQuantities&) const = default;
};

enum class EquilibriumKind { Origin, PreyOnly, Coexistence };

struct Equilibrium {
    EquilibriumKind kind = EquilibriumKind::Origin;
    StateVector state;
    bool feasible = false;
    // true iff W = 0 within tolerance: the coexistence state has merged
    // with the prey-only branch.
    bool boundary = false;

    bool operator==(const Equilibrium&) const = default;
};

DerivedQuantities derived(const ScaledParameters& p);

Equilibrium origin();
Equilibrium prey_only();

// Closed-form coexistence state
//   X* = A d s / V,  Y* = w A d r W / V^2,  Z* = v A s r W / V^2.
// Feasible iff V > 0 and W >= 0. When infeasible but V != 0 the formal
// (possibly negative) state is still reported, because parameter sweeps
// track the branch through infeasibility. Throws degenerate_error if V = 0.
Equilibrium coexistence(const ScaledParameters& p);

// Critical predation level B† = ds(A+1)/(sv+cdw); at B = B† we have W = 0
// and the coexistence branch crosses the prey-only one. Ignores p.B.
// Throws degenerate_error if Q = 0.
double transcritical_B(const ScaledParameters& p);

} // namespace ecogen
