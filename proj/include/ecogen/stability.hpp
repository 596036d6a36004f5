#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ecogen/equilibria.hpp"
#include "ecogen/params.hpp"
#include "ecogen/types.hpp"

namespace ecogen {

// Characteristic polynomial of the Jacobian at the coexistence equilibrium,
// lambda^3 + a1 lambda^2 + a2 lambda + a3 (a0 = 1 implicit).
struct CharPolyCoeffs {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    bool operator==(const CharPolyCoeffs&) const = default;
};

// Routh-Hurwitz verdict for a monic cubic: stable iff a1 > 0, a3 > 0 and
// a1 a2 - a3 > 0. Margins are the signed quantities themselves.
struct RouthHurwitz {
    double a1 = 0.0;
    double a3 = 0.0;
    double hurwitz = 0.0; // a1 a2 - a3
    bool a1_pos = false;
    bool a3_pos = false;
    bool hurwitz_pos = false;
    bool stable = false;

    bool operator==(const RouthHurwitz&) const = default;
};

// BQ >= 3ds (Case1) admits the guaranteed-positive window [1, (BQ-2ds)/ds]
// for a2; BQ < 3ds (Case2) does not.
enum class Regime { Case1, Case2 };

// Knot arrangement for the sign of a1: A/B have K <= 0 (a1 > 0 on the whole
// feasibility interval), C/D have K > 0; A/C have V/ds < 1, B/D have
// V/ds >= 1 (equivalently BQ >= 2ds).
enum class A1Case { A, B, C, D };

// Sign pattern of (M, H), suffixed by regime. Degenerate marks H = M = 0,
// where H/M is undefined.
enum class A2Case {
    OnePlus,    // M > 0, H > 0
    TwoPlus,    // M > 0, H = 0
    ThreePlus,  // M < 0, H < 0
    FourPlus,   // M >= 0, H < 0
    OneMinus,
    TwoMinus,
    ThreeMinus,
    FourMinus,
    FiveMinus,  // M < 0, H = 0
    SixMinus,   // M < 0, H > 0
    SevenMinus, // M = 0, H > 0
    Degenerate,
};

struct Knot {
    std::string label;
    double value = 0.0;

    bool operator==(const Knot&) const = default;
};

// Quantities steering the sign classification of a1 and a2 as functions of
// the half-saturation parameter A:
//   K = V/(BQ+ds) * (rds - B(s^2 v + c d^2 w)) / (rds)   (a1 = 0 at A = K)
//   M = B(s^2 v + c d^2 w) + ds[(s+d) - B(wc+v)]
//   H = B(s^2 v + c d^2 w) + B(wc+v)(2ds - BQ) - (s+d)ds  (a2 = 0 at A = H/M)
struct ClassifierQuantities {
    double K = 0.0;
    double M = 0.0;
    double H = 0.0;
    double v_over_ds = 0.0; // feasibility cap: F2 exists for 0 < A <= V/ds
    Regime regime = Regime::Case1;
    A1Case a1_case = A1Case::A;
    A2Case a2_case = A2Case::Degenerate;
    std::vector<Knot> knots; // labelled, sorted by value

    bool operator==(const ClassifierQuantities&) const = default;
};

// Quadratic lambda^2 + m1 lambda + m0 carrying the non-explicit eigenvalues
// at the prey-only equilibrium; m0 = -W/(A+1).
struct QuadCoeffs {
    double m1 = 0.0;
    double m0 = 0.0;

    bool operator==(const QuadCoeffs&) const = default;
};

struct StabilityReport {
    EquilibriumKind kind = EquilibriumKind::Origin;
    std::array<std::complex<double>, 3> eigenvalues{};
    bool stable = false;
    std::optional<CharPolyCoeffs> coeffs;              // coexistence only
    std::optional<RouthHurwitz> rh;                    // coexistence only
    std::optional<ClassifierQuantities> classifier;    // coexistence only
    std::vector<AInterval> candidate_intervals;        // coexistence only
    std::optional<QuadCoeffs> prey_only_quad;          // prey-only only

    bool operator==(const StabilityReport&) const = default;
};

// Eigenvalues of a 3x3 real matrix via its characteristic cubic.
std::array<std::complex<double>, 3> eigenvalues(const Matrix3& J);

// Closed-form coefficients evaluated from the parameters; requires V > 0
// (degenerate_error otherwise, also when Q = 0).
CharPolyCoeffs char_poly(const ScaledParameters& p);

RouthHurwitz routh_hurwitz(const CharPolyCoeffs& c);

// Sign routing of (M, H), split by regime; tolerances per the caller.
A2Case classify_a2_case(Regime regime, double M, double H, double tol_M, double tol_H);

// K, M, H together with the knot list and case labels. V and Q do not
// depend on A, so neither does anything here. Throws degenerate_error
// when V <= 0.
ClassifierQuantities classifier_quantities(const ScaledParameters& p);

// Open A-intervals inside (0, V/ds) where a1 > 0 and a2 > 0 jointly hold;
// the third Routh-Hurwitz condition is evaluated pointwise per A, never
// symbolically. At most one interval arises from the case tables.
std::vector<AInterval> assemble_candidate_intervals(const ClassifierQuantities& q);

// Convenience wrapper; ignores p.A. Returns an empty list (not an error)
// when V <= 0, where no A yields a feasible coexistence state.
std::vector<AInterval> candidate_intervals(const ScaledParameters& p);

// "Case1/B/1+" style label.
std::string case_label(const ClassifierQuantities& q);
std::string to_string(Regime regime);
std::string to_string(A1Case a1_case);
std::string to_string(A2Case a2_case);

StabilityReport f0_stability(const ScaledParameters& p);
StabilityReport f1_stability(const ScaledParameters& p);

// Full coexistence report; throws infeasible_error when F2 is infeasible.
StabilityReport coexistence_stability(const ScaledParameters& p);

} // namespace ecogen
