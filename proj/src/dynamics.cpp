#include "ecogen/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ecogen/equilibria.hpp"
#include "ecogen/errors.hpp"
#include "ecogen/model.hpp"

namespace ecogen {

namespace {

// Dormand-Prince 5(4) tableau; e-row is b - bhat (5th order propagated).
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kSafety = 0.9;
constexpr double kAlpha = 0.17; // PI controller exponents for order 5
constexpr double kBeta = 0.04;

StateVector clamp_nonnegative(StateVector u, std::size_t& clamps) {
    if (u.X < 0.0) { u.X = 0.0; ++clamps; }
    if (u.Y < 0.0) { u.Y = 0.0; ++clamps; }
    if (u.Z < 0.0) { u.Z = 0.0; ++clamps; }
    return u;
}

double error_norm(const StateVector& err, const StateVector& y0, const StateVector& y1,
                  double rel_tol, double abs_tol) {
    auto component = [&](double e, double a, double b) {
        const double sk = abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
        return e / sk;
    };
    const double ex = component(err.X, y0.X, y1.X);
    const double ey = component(err.Y, y0.Y, y1.Y);
    const double ez = component(err.Z, y0.Z, y1.Z);
    return std::sqrt((ex * ex + ey * ey + ez * ez) / 3.0);
}

} // namespace

Trajectory integrate(const ScaledParameters& p, const StateVector& u0, double t_end,
                     double rel_tol, double abs_tol) {
    p.validate();
    if (!(t_end > 0.0))
        throw std::invalid_argument("integrate: t_end must be positive");
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("integrate: tolerances must be positive");
    if (u0.X < 0.0 || u0.Y < 0.0 || u0.Z < 0.0)
        throw std::domain_error("integrate: initial state must be nonnegative");

    const double h_min = 1e-14 * t_end;
    const double spacing = std::max(t_end / 4096.0, h_min);

    Trajectory traj;
    traj.params = p;
    traj.rel_tol = rel_tol;
    traj.abs_tol = abs_tol;

    double t = 0.0;
    StateVector y = u0;
    traj.times.push_back(t);
    traj.states.push_back(y);

    StateVector k1 = rhs_scaled(p, y);
    double h = spacing;
    double err_old = 1e-4;

    while (t < t_end) {
        bool last = false;
        if (t + h >= t_end) {
            h = t_end - t;
            last = true;
        }
        // the final clamp may legitimately shrink below the floor
        if (!last && h < h_min)
            throw step_failure_error("integrate: step size underflow");

        const StateVector k2 = rhs_scaled(p, y + h * a21 * k1);
        const StateVector k3 = rhs_scaled(p, y + h * (a31 * k1 + a32 * k2));
        const StateVector k4 = rhs_scaled(p, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const StateVector k5 =
            rhs_scaled(p, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const StateVector k6 = rhs_scaled(
            p, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const StateVector y_new =
            y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const StateVector k7 = rhs_scaled(p, y_new);
        const StateVector err =
            h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double err_n = error_norm(err, y, y_new, rel_tol, abs_tol);
        if (std::isfinite(err_n) && err_n <= 1.0) {
            t = last ? t_end : t + h;
            const std::size_t clamps_before = traj.clamp_count;
            y = clamp_nonnegative(y_new, traj.clamp_count);
            traj.times.push_back(t);
            traj.states.push_back(y);
            // FSAL, unless clamping moved the state
            k1 = (traj.clamp_count == clamps_before) ? k7 : rhs_scaled(p, y);

            double fac = (err_n == 0.0)
                             ? 10.0
                             : kSafety * std::pow(err_n, -kAlpha) * std::pow(err_old, kBeta);
            fac = std::clamp(fac, 0.2, 10.0);
            h = std::min(h * fac, spacing);
            err_old = std::max(err_n, 1e-4);
        } else {
            // a non-finite estimate (overflowing stage values) also lands
            // here; keep shrinking until the underflow guard fires
            const double fac = std::isfinite(err_n)
                                   ? std::clamp(kSafety * std::pow(err_n, -0.2), 0.1, 0.9)
                                   : 0.1;
            h *= fac;
        }
    }
    return traj;
}

StateVector default_initial_state(const ScaledParameters& p) {
    try {
        const Equilibrium f2 = coexistence(p);
        if (f2.feasible)
            return {1.01 * f2.state.X, 1.01 * f2.state.Y, 1.01 * f2.state.Z};
    } catch (const degenerate_error&) {
    }
    return {0.5, 0.1, 0.1};
}

namespace {

// Vertex of the parabola through three samples around a local maximum;
// spacing may be nonuniform.
double refine_peak_time(double t0, double x0, double t1, double x1, double t2, double x2) {
    const double h1 = t1 - t0;
    const double h2 = t2 - t1;
    if (h1 <= 0.0 || h2 <= 0.0) return t1;
    const double d1 = (x1 - x0) / h1;
    const double d2 = (x2 - x1) / h2;
    const double cura = (d2 - d1) / (h1 + h2); // curvature/1, negative at a maximum
    const double slope = d2 - cura * h2;       // derivative at t1 of the fitted parabola
    if (!(cura < 0.0)) return t1;
    return t1 - slope / (2.0 * cura);
}

} // namespace

AsymptoticVerdict classify_asymptotics(const Trajectory& tr, double transient_fraction) {
    const std::size_t n = tr.times.size();
    if (n < 2 || tr.states.size() != n)
        throw insufficient_span_error("classify_asymptotics: trajectory has fewer than 2 points");
    if (!(transient_fraction >= 0.0 && transient_fraction < 1.0))
        throw std::invalid_argument("classify_asymptotics: transient fraction must be in [0, 1)");

    const double t_cut = tr.times.front()
                       + transient_fraction * (tr.times.back() - tr.times.front());
    std::size_t begin = 0;
    while (begin < n && tr.times[begin] < t_cut) ++begin;
    const std::size_t count = n - begin;
    // needs room for roughly ten oscillation candidates after the transient
    if (count < 32)
        throw insufficient_span_error("classify_asymptotics: too few points after the transient");

    AsymptoticVerdict verdict;
    verdict.transient_fraction = transient_fraction;

    const StateVector terminal = tr.states.back();
    if (inf_norm(rhs_scaled(tr.params, terminal)) < 1e-8) {
        verdict.kind = AsymptoticKind::SteadyState;
        verdict.state = terminal;
        return verdict;
    }

    StateVector lo = tr.states[begin];
    StateVector hi = tr.states[begin];
    for (std::size_t i = begin; i < n; ++i) {
        const StateVector& u = tr.states[i];
        lo = {std::min(lo.X, u.X), std::min(lo.Y, u.Y), std::min(lo.Z, u.Z)};
        hi = {std::max(hi.X, u.X), std::max(hi.Y, u.Y), std::max(hi.Z, u.Z)};
    }
    verdict.amplitude = hi - lo;

    // three-point local maxima of X, vertex-refined
    std::vector<double> peak_times;
    for (std::size_t i = begin + 1; i + 1 < n; ++i) {
        const double x0 = tr.states[i - 1].X;
        const double x1 = tr.states[i].X;
        const double x2 = tr.states[i + 1].X;
        if (x1 > x0 && x1 > x2)
            peak_times.push_back(refine_peak_time(tr.times[i - 1], x0, tr.times[i], x1,
                                                  tr.times[i + 1], x2));
    }

    if (verdict.amplitude.X > 1e-3 && peak_times.size() >= 6) {
        double intervals[5];
        double mean = 0.0;
        const std::size_t m = peak_times.size();
        for (int k = 0; k < 5; ++k) {
            intervals[k] = peak_times[m - 5 + k] - peak_times[m - 6 + k];
            mean += intervals[k];
        }
        mean /= 5.0;
        bool regular = mean > 0.0;
        for (double dt : intervals)
            regular = regular && std::abs(dt - mean) <= 0.05 * mean;
        if (regular) {
            verdict.kind = AsymptoticKind::LimitCycle;
            verdict.period = mean;
            // time-weighted mean over the tail
            StateVector acc{};
            double span = 0.0;
            for (std::size_t i = begin; i + 1 < n; ++i) {
                const double dt = tr.times[i + 1] - tr.times[i];
                acc = acc + (0.5 * dt) * (tr.states[i] + tr.states[i + 1]);
                span += dt;
            }
            verdict.state = (span > 0.0) ? (1.0 / span) * acc : terminal;
            return verdict;
        }
    }

    verdict.kind = AsymptoticKind::Undecided;
    verdict.state = terminal;
    return verdict;
}

} // namespace ecogen
