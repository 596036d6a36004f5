#pragma once

#include <array>
#include <string>
#include <vector>

#include "ecogen/params.hpp"

namespace ecogen {

enum class SweepParam { A, B };

struct SweepPoint {
    double value = 0.0;
    bool feasible = false;       // F2 feasibility at this parameter value
    double max_re_lambda = 0.0;  // largest eigenvalue real part at F2 (NaN if infeasible)
    double a1 = 0.0;             // Routh-Hurwitz margins (NaN if infeasible)
    double a3 = 0.0;
    double hurwitz = 0.0;
    bool f1_stable = false;

    bool operator==(const SweepPoint&) const = default;
};

enum class CriticalKind { Transcritical, Hopf };

struct CriticalPoint {
    CriticalKind kind = CriticalKind::Transcritical;
    std::string parameter;          // "A" or "B"
    double value = 0.0;
    std::array<double, 2> bracket{}; // search bracket (degenerate for analytic points)
    double residual = 0.0;          // |W| (transcritical) or |a1 a2 - a3| (Hopf)

    bool operator==(const CriticalPoint&) const = default;
};

// n uniformly spaced evaluations of `param` over [lo, hi], base parameters
// otherwise unchanged. Points where F2 is infeasible are marked, not errors.
// Requires 0 < lo < hi and n >= 2.
std::vector<SweepPoint> sweep(const ScaledParameters& base, SweepParam param, double lo,
                              double hi, int n);

// Analytic transcritical location: B† = ds(A+1)/Q for param B, A = V/ds for
// param A. Throws degenerate_error when Q = 0 (or V <= 0 for param A).
CriticalPoint find_transcritical(const ScaledParameters& p, SweepParam param);

// Bisection on the Hurwitz margin a1 a2 - a3 over A, refined by false
// position once the bracket is below 1e-8. The bracket is intersected with
// the open feasibility interval (0, V/ds) so candidate-interval endpoints
// are usable as-is. Requires F2 feasible with a1 > 0 and a3 > 0 across the
// clipped bracket and a sign change at its endpoints (no_sign_change_error
// otherwise); the crossing must carry a conjugate pair (degenerate_error
// if it is real).
CriticalPoint find_hopf(const ScaledParameters& p, double bracket_lo, double bracket_hi);

std::string to_string(SweepParam param);
std::string to_string(CriticalKind kind);

} // namespace ecogen
