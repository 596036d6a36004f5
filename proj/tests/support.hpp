#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here stays independent of the implementation paths it cross-checks:
// roots come from Durand-Kerner iteration, derivatives from central
// differences, and the parameter sets are the published ones.

#include <array>
#include <complex>
#include <random>

#include "ecogen/model.hpp"
#include "ecogen/params.hpp"
#include "ecogen/types.hpp"

namespace support {

inline ecogen::ScaledParameters fig1_params(double A = 0.20716) {
    return {0.6, 0.38, 0.47, 0.4, 0.5, 0.2, 0.48, A};
}

inline ecogen::ScaledParameters example1_params(double A = 0.6) {
    return {0.6, 0.74, 0.38, 0.48, 0.05, 0.008, 0.85, A};
}

inline ecogen::ScaledParameters example2_params(double A = 0.85) {
    return {0.95, 0.066, 0.083, 0.075, 0.8, 0.15, 0.84, A};
}

inline ecogen::ScaledParameters example3_params(double A = 0.4964791610) {
    return {0.56, 0.44, 0.3, 0.01, 0.7, 0.08, 0.23, A};
}

// Published Hopf locations (half-saturation parameter A).
inline constexpr double kHopfExample1 = 0.4331191029;
inline constexpr double kHopfExample2 = 0.6376318460;
inline constexpr double kHopfExample3 = 0.4964791610;

// Durand-Kerner (Weierstrass) iteration for the monic cubic
// x^3 + a x^2 + b x + c; an all-roots method with no overlap with the
// closed-form solver under test.
inline std::array<std::complex<double>, 3> dk_roots(double a, double b, double c) {
    using Cplx = std::complex<double>;
    const Cplx seed(0.4, 0.9);
    std::array<Cplx, 3> r{seed, seed * seed, seed * seed * seed};
    auto f = [&](Cplx x) { return ((x + a) * x + b) * x + c; };
    for (int it = 0; it < 600; ++it) {
        double moved = 0.0;
        for (int i = 0; i < 3; ++i) {
            Cplx denom(1.0, 0.0);
            for (int j = 0; j < 3; ++j)
                if (j != i) denom *= r[i] - r[j];
            if (std::abs(denom) == 0.0) continue;
            const Cplx step = f(r[i]) / denom;
            r[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-15) break;
    }
    return r;
}

inline double max_real_part(const std::array<std::complex<double>, 3>& roots) {
    double m = roots[0].real();
    for (const auto& x : roots) m = std::max(m, x.real());
    return m;
}

// Central-difference Jacobian of the scaled vector field, step 1e-6.
inline ecogen::Matrix3 fd_jacobian(const ecogen::ScaledParameters& p,
                                   const ecogen::StateVector& u, double step = 1e-6) {
    ecogen::Matrix3 J;
    for (int j = 0; j < 3; ++j) {
        ecogen::StateVector up = u, dn = u;
        double* up_c = j == 0 ? &up.X : j == 1 ? &up.Y : &up.Z;
        double* dn_c = j == 0 ? &dn.X : j == 1 ? &dn.Y : &dn.Z;
        *up_c += step;
        *dn_c -= step;
        const ecogen::StateVector fp = ecogen::rhs_scaled(p, up);
        const ecogen::StateVector fm = ecogen::rhs_scaled(p, dn);
        J(0, j) = (fp.X - fm.X) / (2.0 * step);
        J(1, j) = (fp.Y - fm.Y) / (2.0 * step);
        J(2, j) = (fp.Z - fm.Z) / (2.0 * step);
    }
    return J;
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

// Random parameter set with a feasible coexistence state: B is chosen so
// that BQ = kappa * ds with kappa > 1, then A is placed inside (0, V/ds).
// kappa spans both classifier regimes (BQ >= 3ds and below).
inline ecogen::ScaledParameters random_feasible(std::mt19937_64& rng,
                                                double frac_lo = 0.05,
                                                double frac_hi = 0.95) {
    ecogen::ScaledParameters p;
    p.r = log_uniform(rng, 0.05, 2.5);
    p.c = log_uniform(rng, 0.05, 2.5);
    p.w = log_uniform(rng, 0.05, 2.5);
    p.s = log_uniform(rng, 0.05, 2.5);
    p.v = log_uniform(rng, 0.05, 2.5);
    p.d = log_uniform(rng, 0.05, 2.5);
    const double Q = p.s * p.v + p.c * p.d * p.w;
    const double ds = p.d * p.s;
    std::uniform_real_distribution<double> kappa(1.05, 6.0);
    p.B = kappa(rng) * ds / Q;
    const double v_over_ds = (p.B * Q - ds) / ds;
    std::uniform_real_distribution<double> frac(frac_lo, frac_hi);
    p.A = frac(rng) * v_over_ds;
    return p;
}

// Unconstrained positive draw (feasibility not enforced).
inline ecogen::ScaledParameters random_positive(std::mt19937_64& rng) {
    ecogen::ScaledParameters p;
    p.r = log_uniform(rng, 0.05, 2.5);
    p.c = log_uniform(rng, 0.05, 2.5);
    p.w = log_uniform(rng, 0.05, 2.5);
    p.s = log_uniform(rng, 0.05, 2.5);
    p.v = log_uniform(rng, 0.05, 2.5);
    p.d = log_uniform(rng, 0.05, 2.5);
    p.B = log_uniform(rng, 0.05, 2.5);
    p.A = log_uniform(rng, 0.05, 2.5);
    return p;
}

} // namespace support
