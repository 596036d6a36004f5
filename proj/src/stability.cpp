#include "ecogen/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ecogen/errors.hpp"
#include "ecogen/model.hpp"
#include "ecogen/roots.hpp"

namespace ecogen {

namespace {

// Shared intermediates of the coexistence analysis. T = ds, S = s + d,
// G = B(s^2 v + c d^2 w), P = B(wc + v).
struct CoexistenceTerms {
    double Q, T, S, BQ, V, W, G, P;
};

CoexistenceTerms terms(const ScaledParameters& p) {
    CoexistenceTerms t{};
    t.Q = p.s * p.v + p.c * p.d * p.w;
    t.T = p.d * p.s;
    t.S = p.s + p.d;
    t.BQ = p.B * t.Q;
    t.V = t.BQ - t.T;
    t.W = t.BQ - t.T * (p.A + 1.0);
    t.G = p.B * (p.s * p.s * p.v + p.c * p.d * p.d * p.w);
    t.P = p.B * (p.w * p.c + p.v);
    return t;
}

double sign_tol(double s1, double s2 = 0.0, double s3 = 0.0) {
    return 1e-12 * std::max({1.0, std::abs(s1), std::abs(s2), std::abs(s3)});
}

int signum(double x, double tol) {
    if (x > tol) return 1;
    if (x < -tol) return -1;
    return 0;
}

} // namespace

std::array<std::complex<double>, 3> eigenvalues(const Matrix3& J) {
    return solve_cubic(-J.trace(), J.principal_minor_sum(), -J.determinant());
}

CharPolyCoeffs char_poly(const ScaledParameters& p) {
    const CoexistenceTerms t = terms(p);
    if (t.Q <= kZeroTol)
        throw degenerate_error("char_poly: Q = 0");
    if (t.V <= kZeroTol)
        throw degenerate_error("char_poly: requires V > 0");

    CharPolyCoeffs c;
    c.a1 = (t.V * t.G + p.r * t.T * (p.A * t.BQ - t.W)) / (t.V * t.BQ);
    c.a2 = p.r * t.T * ((p.A - 1.0) * t.G + (p.A + 1.0) * t.T * t.S + t.P * (t.W - t.T))
         / (t.V * t.BQ);
    c.a3 = p.r * t.T * t.W / t.BQ;
    return c;
}

RouthHurwitz routh_hurwitz(const CharPolyCoeffs& c) {
    RouthHurwitz rh;
    rh.a1 = c.a1;
    rh.a3 = c.a3;
    rh.hurwitz = c.a1 * c.a2 - c.a3;
    rh.a1_pos = rh.a1 > 0.0;
    rh.a3_pos = rh.a3 > 0.0;
    rh.hurwitz_pos = rh.hurwitz > 0.0;
    rh.stable = rh.a1_pos && rh.a3_pos && rh.hurwitz_pos;
    return rh;
}

A2Case classify_a2_case(Regime regime, double M, double H, double tol_M, double tol_H) {
    const int sm = signum(M, tol_M);
    const int sh = signum(H, tol_H);
    if (sm == 0 && sh == 0) return A2Case::Degenerate;

    if (regime == Regime::Case1) {
        if (sm > 0 && sh > 0) return A2Case::OnePlus;
        if (sm > 0 && sh == 0) return A2Case::TwoPlus;
        if (sm < 0 && sh < 0) return A2Case::ThreePlus;
        if (sm >= 0 && sh < 0) return A2Case::FourPlus;
        // H < M holds strictly whenever BQ >= 3ds, which rules out the
        // remaining patterns.
        throw std::logic_error("classify_a2_case: sign pattern excluded for BQ >= 3ds");
    }
    if (sm > 0 && sh > 0) return A2Case::OneMinus;
    if (sm > 0 && sh == 0) return A2Case::TwoMinus;
    if (sm < 0 && sh < 0) return A2Case::ThreeMinus;
    if (sm >= 0 && sh < 0) return A2Case::FourMinus;
    if (sm < 0 && sh == 0) return A2Case::FiveMinus;
    if (sm < 0 && sh > 0) return A2Case::SixMinus;
    return A2Case::SevenMinus; // M = 0, H > 0
}

ClassifierQuantities classifier_quantities(const ScaledParameters& p) {
    const CoexistenceTerms t = terms(p);
    if (t.V <= kZeroTol)
        throw degenerate_error("classifier_quantities: requires V > 0");

    ClassifierQuantities q;
    q.K = t.V / (t.BQ + t.T) * (p.r * t.T - t.G) / (p.r * t.T);
    q.M = t.G + t.T * (t.S - t.P);
    q.H = t.G + t.P * (2.0 * t.T - t.BQ) - t.S * t.T;
    q.v_over_ds = t.V / t.T;

    q.regime = (t.BQ >= 3.0 * t.T - sign_tol(t.BQ, 3.0 * t.T)) ? Regime::Case1 : Regime::Case2;

    const double tol_K = sign_tol(t.V / (t.BQ + t.T));
    const bool k_positive = q.K > tol_K;
    // V/ds >= 1 iff BQ >= 2ds
    const bool wide = t.BQ - 2.0 * t.T >= -sign_tol(t.BQ, 2.0 * t.T);
    q.a1_case = k_positive ? (wide ? A1Case::D : A1Case::C)
                           : (wide ? A1Case::B : A1Case::A);

    const double tol_M = sign_tol(t.G, t.T * t.S, t.T * t.P);
    const double tol_H = sign_tol(t.G, t.P * std::abs(2.0 * t.T - t.BQ), t.S * t.T);
    q.a2_case = classify_a2_case(q.regime, q.M, q.H, tol_M, tol_H);

    q.knots = {
        {"K", q.K},
        {"0", 0.0},
        {"V/(BQ+ds)", t.V / (t.BQ + t.T)},
        {"(BQ-2ds)/ds", (t.BQ - 2.0 * t.T) / t.T},
        {"1", 1.0},
        {"V/ds", q.v_over_ds},
    };
    if (std::abs(q.M) > tol_M)
        q.knots.push_back({"H/M", q.H / q.M});
    std::stable_sort(q.knots.begin(), q.knots.end(),
                     [](const Knot& a, const Knot& b) { return a.value < b.value; });
    return q;
}

std::vector<AInterval> assemble_candidate_intervals(const ClassifierQuantities& q) {
    if (q.v_over_ds <= 0.0) return {};

    double lo = std::max(0.0, q.K);
    double hi = q.v_over_ds;
    switch (q.a2_case) {
    case A2Case::OnePlus:
    case A2Case::OneMinus:
    case A2Case::TwoPlus:
    case A2Case::TwoMinus:
        lo = std::max(lo, q.H / q.M); // a2 > 0 iff A > H/M
        break;
    case A2Case::ThreePlus:
    case A2Case::ThreeMinus:
        hi = std::min(hi, q.H / q.M); // a2 > 0 iff A < H/M, which exceeds V/ds
        break;
    case A2Case::FourPlus:
    case A2Case::FourMinus:
        break; // a2 > 0 throughout
    case A2Case::FiveMinus:
    case A2Case::SixMinus:
    case A2Case::SevenMinus:
        return {}; // a2 <= 0 for every A > 0
    case A2Case::Degenerate:
        return {};
    }
    if (lo < hi) return {AInterval{lo, hi}};
    return {};
}

std::vector<AInterval> candidate_intervals(const ScaledParameters& p) {
    if (derived(p).V <= kZeroTol) return {};
    return assemble_candidate_intervals(classifier_quantities(p));
}

std::string to_string(Regime regime) {
    return regime == Regime::Case1 ? "Case1" : "Case2";
}

std::string to_string(A1Case a1_case) {
    switch (a1_case) {
    case A1Case::A: return "A";
    case A1Case::B: return "B";
    case A1Case::C: return "C";
    case A1Case::D: return "D";
    }
    return "?";
}

std::string to_string(A2Case a2_case) {
    switch (a2_case) {
    case A2Case::OnePlus: return "1+";
    case A2Case::TwoPlus: return "2+";
    case A2Case::ThreePlus: return "3+";
    case A2Case::FourPlus: return "4+";
    case A2Case::OneMinus: return "1-";
    case A2Case::TwoMinus: return "2-";
    case A2Case::ThreeMinus: return "3-";
    case A2Case::FourMinus: return "4-";
    case A2Case::FiveMinus: return "5-";
    case A2Case::SixMinus: return "6-";
    case A2Case::SevenMinus: return "7-";
    case A2Case::Degenerate: return "Degenerate";
    }
    return "?";
}

std::string case_label(const ClassifierQuantities& q) {
    return to_string(q.regime) + "/" + to_string(q.a1_case) + "/" + to_string(q.a2_case);
}

StabilityReport f0_stability(const ScaledParameters& p) {
    StabilityReport rep;
    rep.kind = EquilibriumKind::Origin;
    rep.eigenvalues = {std::complex<double>(p.r), std::complex<double>(-p.s),
                       std::complex<double>(-p.d)};
    rep.stable = false; // r > 0: the origin is unconditionally unstable
    return rep;
}

StabilityReport f1_stability(const ScaledParameters& p) {
    const DerivedQuantities dq = derived(p);
    const double a1p = p.A + 1.0;

    StabilityReport rep;
    rep.kind = EquilibriumKind::PreyOnly;
    QuadCoeffs quad;
    quad.m1 = ((p.s + p.d) * a1p - p.B * (p.w * p.c + p.v)) / a1p;
    quad.m0 = -dq.W / a1p;
    rep.prey_only_quad = quad;

    const auto qroots = solve_quadratic(quad.m1, quad.m0);
    rep.eigenvalues = {std::complex<double>(-p.r), qroots[0], qroots[1]};
    // stable iff A + 1 > BQ/(ds); the m1 > 0 condition is implied
    rep.stable = a1p * p.d * p.s > p.B * dq.Q;
    return rep;
}

StabilityReport coexistence_stability(const ScaledParameters& p) {
    if (!(p.A > 0.0))
        throw std::domain_error("coexistence_stability: requires A > 0");
    const Equilibrium f2 = coexistence(p);
    if (!f2.feasible)
        throw infeasible_error("coexistence_stability: F2 is infeasible");

    StabilityReport rep;
    rep.kind = EquilibriumKind::Coexistence;
    rep.coeffs = char_poly(p);
    rep.rh = routh_hurwitz(*rep.coeffs);
    rep.classifier = classifier_quantities(p);
    rep.candidate_intervals = assemble_candidate_intervals(*rep.classifier);
    rep.eigenvalues = eigenvalues(jacobian(p, f2.state));
    rep.stable = rep.rh->stable;
    return rep;
}

} // namespace ecogen
