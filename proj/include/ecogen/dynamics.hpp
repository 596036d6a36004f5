#pragma once

#include <cstddef>
#include <vector>

#include "ecogen/params.hpp"
#include "ecogen/types.hpp"

namespace ecogen {

struct Trajectory {
    std::vector<double> times;        // strictly increasing
    std::vector<StateVector> states;  // one per time, clamped nonnegative
    ScaledParameters params;
    double rel_tol = 0.0;
    double abs_tol = 0.0;
    std::size_t clamp_count = 0;      // roundoff negatives zeroed

    bool operator==(const Trajectory&) const = default;
};

enum class AsymptoticKind { SteadyState, LimitCycle, Undecided };

struct AsymptoticVerdict {
    AsymptoticKind kind = AsymptoticKind::Undecided;
    StateVector state;       // terminal state (SteadyState) or mean over the tail (LimitCycle)
    StateVector amplitude;   // per-component peak-to-peak over the tail (LimitCycle)
    double period = 0.0;     // mean of the last inter-peak intervals (LimitCycle)
    double transient_fraction = 0.5;

    bool operator==(const AsymptoticVerdict&) const = default;
};

// Dormand-Prince 5(4) with PI step control. Every accepted step is an
// output point; the step size is capped at max(t_end/4096, minimum step)
// so the output is dense enough for peak detection. Components driven
// slightly negative by roundoff are clamped to zero (counted in the
// trajectory) before the next right-hand-side evaluation.
// Throws step_failure_error when the step size underflows below
// 1e-14 * t_end.
Trajectory integrate(const ScaledParameters& p, const StateVector& u0, double t_end,
                     double rel_tol = 1e-8, double abs_tol = 1e-10);

// Coexistence state scaled by 1.01 when feasible, (0.5, 0.1, 0.1) otherwise.
StateVector default_initial_state(const ScaledParameters& p);

// Discards the leading transient fraction, then:
//   SteadyState  if the terminal ||rhs||_inf < 1e-8,
//   LimitCycle   if the X peak-to-peak amplitude exceeds 1e-3 and the last
//                five inter-peak intervals agree within 5%,
//   Undecided    otherwise.
// Throws insufficient_span_error when the tail is too short to judge.
AsymptoticVerdict classify_asymptotics(const Trajectory& tr, double transient_fraction = 0.5);

} // namespace ecogen
