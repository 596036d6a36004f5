#include "ecogen/roots.hpp"

#include <algorithm>
#include <cmath>

namespace ecogen {

namespace {

using Cplx = std::complex<double>;

// One Newton step per iteration; skipped when the derivative is too small
// (multiple roots), where the closed form already carries the answer.
void polish(std::array<Cplx, 3>& roots, double a, double b, double c) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
    for (auto& x : roots) {
        for (int it = 0; it < 3; ++it) {
            const Cplx f = ((x + a) * x + b) * x + c;
            const Cplx df = (3.0 * x + 2.0 * a) * x + b;
            if (std::abs(df) < 1e-300) break;
            const Cplx step = f / df;
            if (std::abs(step) > 0.1 * (1.0 + std::abs(x))) break;
            x -= step;
            if (std::abs(f) < 1e-30 * scale) break;
        }
    }
}

} // namespace

std::array<Cplx, 2> solve_quadratic(double b, double c) {
    const double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        // avoid cancellation: compute the larger-magnitude root first
        const double q = -0.5 * (b + std::copysign(sq, b));
        const double r0 = q;
        const double r1 = (q != 0.0) ? c / q : -b - q;
        return {Cplx(r0, 0.0), Cplx(r1, 0.0)};
    }
    const double re = -0.5 * b;
    const double im = 0.5 * std::sqrt(-disc);
    return {Cplx(re, im), Cplx(re, -im)};
}

std::array<Cplx, 3> solve_cubic(double a, double b, double c) {
    // depressed form t^3 + p t + q with x = t - a/3
    const double shift = a / 3.0;
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double half_q = 0.5 * q;
    const double third_p = p / 3.0;
    const double disc = half_q * half_q + third_p * third_p * third_p;

    std::array<Cplx, 3> roots;
    if (disc <= 0.0) {
        // three real roots, projected from equidistant points on a circle
        const double rho = std::sqrt(std::max(0.0, -third_p));
        if (rho == 0.0) {
            roots = {Cplx(-shift), Cplx(-shift), Cplx(-shift)};
        } else {
            double cosphi = -half_q / (rho * rho * rho);
            cosphi = std::clamp(cosphi, -1.0, 1.0);
            const double phi = std::acos(cosphi);
            constexpr double two_pi = 6.283185307179586;
            for (int k = 0; k < 3; ++k)
                roots[k] = Cplx(2.0 * rho * std::cos((phi + two_pi * k) / 3.0) - shift, 0.0);
        }
    } else {
        // one real root, one conjugate pair
        const double sq = std::sqrt(disc);
        const double u3 = (-half_q >= 0.0) ? -half_q + sq : -half_q - sq;
        const double u = std::cbrt(u3);
        const double v = (u != 0.0) ? -third_p / u : 0.0;
        const double t_real = u + v;
        const double re = -0.5 * t_real;
        const double im = 0.5 * std::sqrt(3.0) * std::abs(u - v);
        roots = {Cplx(t_real - shift, 0.0), Cplx(re - shift, im), Cplx(re - shift, -im)};
    }

    polish(roots, a, b, c);
    return roots;
}

} // namespace ecogen
