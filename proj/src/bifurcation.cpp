#include "ecogen/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ecogen/equilibria.hpp"
#include "ecogen/errors.hpp"
#include "ecogen/model.hpp"
#include "ecogen/stability.hpp"

namespace ecogen {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ScaledParameters with_param(const ScaledParameters& base, SweepParam param, double x) {
    return param == SweepParam::A ? base.with_A(x) : base.with_B(x);
}

SweepPoint eval_point(const ScaledParameters& p, SweepParam param) {
    SweepPoint pt;
    pt.value = param == SweepParam::A ? p.A : p.B;
    const DerivedQuantities dq = derived(p);
    pt.f1_stable = (p.A + 1.0) * p.d * p.s > p.B * dq.Q;

    pt.max_re_lambda = pt.a1 = pt.a3 = pt.hurwitz = kNaN;
    if (std::abs(dq.V) <= kZeroTol) return pt; // branch formulas singular
    const Equilibrium f2 = coexistence(p);
    pt.feasible = f2.feasible;
    if (!pt.feasible) return pt;

    const CharPolyCoeffs c = char_poly(p);
    pt.a1 = c.a1;
    pt.a3 = c.a3;
    pt.hurwitz = c.a1 * c.a2 - c.a3;
    double max_re = -std::numeric_limits<double>::infinity();
    for (const auto& lambda : eigenvalues(jacobian(p, f2.state)))
        max_re = std::max(max_re, lambda.real());
    pt.max_re_lambda = max_re;
    return pt;
}

} // namespace

std::vector<SweepPoint> sweep(const ScaledParameters& base, SweepParam param, double lo,
                              double hi, int n) {
    if (!(0.0 < lo && lo < hi))
        throw std::invalid_argument("sweep: requires 0 < lo < hi");
    if (n < 2)
        throw std::invalid_argument("sweep: requires n >= 2");

    std::vector<SweepPoint> points;
    points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
        points.push_back(eval_point(with_param(base, param, x), param));
    }
    return points;
}

CriticalPoint find_transcritical(const ScaledParameters& p, SweepParam param) {
    CriticalPoint cp;
    cp.kind = CriticalKind::Transcritical;
    cp.parameter = to_string(param);

    if (param == SweepParam::B) {
        cp.value = transcritical_B(p); // throws on Q = 0
        cp.residual = std::abs(derived(p.with_B(cp.value)).W);
    } else {
        const DerivedQuantities dq = derived(p);
        if (dq.V <= kZeroTol)
            throw degenerate_error("find_transcritical: requires V > 0 for an A crossing");
        cp.value = dq.V / (p.d * p.s);
        cp.residual = std::abs(derived(p.with_A(cp.value)).W);
    }
    cp.bracket = {cp.value, cp.value};
    return cp;
}

CriticalPoint find_hopf(const ScaledParameters& p, double bracket_lo, double bracket_hi) {
    if (!(0.0 < bracket_lo && bracket_lo < bracket_hi))
        throw std::invalid_argument("find_hopf: requires 0 < bracket_lo < bracket_hi");

    // Brackets typically come from candidate-interval endpoints, where the
    // feasibility edge A = V/ds itself has a3 = 0; work strictly inside it.
    double lo = bracket_lo, hi = bracket_hi;
    const DerivedQuantities dq = derived(p);
    if (dq.V > kZeroTol) {
        const double v_over_ds = dq.V / (p.d * p.s);
        hi = std::min(hi, v_over_ds * (1.0 - 1e-9));
    }
    if (!(lo < hi))
        throw std::domain_error("find_hopf: bracket lies outside the feasibility interval");

    auto margin = [&p](double A) {
        const ScaledParameters q = p.with_A(A);
        if (!coexistence(q).feasible)
            throw std::domain_error("find_hopf: F2 infeasible inside the bracket");
        const CharPolyCoeffs c = char_poly(q);
        if (!(c.a1 > 0.0) || !(c.a3 > 0.0))
            throw std::domain_error("find_hopf: a1 > 0 and a3 > 0 must hold across the bracket");
        return c.a1 * c.a2 - c.a3;
    };

    double f_lo = margin(lo), f_hi = margin(hi);
    if (f_lo * f_hi >= 0.0)
        throw no_sign_change_error("find_hopf: Hurwitz margin does not change sign over the bracket");

    constexpr double kParamTol = 1e-8;
    while (hi - lo > kParamTol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = margin(mid);
        if (f_lo * f_mid <= 0.0) {
            hi = mid;
            f_hi = f_mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }

    // false-position refinement inside the terminal bracket
    double a_star = 0.5 * (lo + hi);
    for (int it = 0; it < 8 && f_hi != f_lo; ++it) {
        const double x = hi - f_hi * (hi - lo) / (f_hi - f_lo);
        if (!(x >= lo && x <= hi)) break;
        const double fx = margin(x);
        a_star = x;
        if (fx == 0.0) break;
        if (f_lo * fx <= 0.0) {
            hi = x;
            f_hi = fx;
        } else {
            lo = x;
            f_lo = fx;
        }
    }

    const ScaledParameters q = p.with_A(a_star);
    const double residual = std::abs(margin(a_star));

    // certificate: the crossing must carry a conjugate pair on the axis
    const auto ev = eigenvalues(jacobian(q, coexistence(q).state));
    double best_im = 0.0, best_re = 0.0;
    for (const auto& lambda : ev) {
        if (std::abs(lambda.imag()) > std::abs(best_im)) {
            best_im = lambda.imag();
            best_re = lambda.real();
        }
    }
    if (std::abs(best_im) <= 1e-6)
        throw degenerate_error("find_hopf: eigenvalue pair is real at the crossing");
    if (std::abs(best_re) > 1e-7)
        throw degenerate_error("find_hopf: crossing pair is not on the imaginary axis");

    CriticalPoint cp;
    cp.kind = CriticalKind::Hopf;
    cp.parameter = "A";
    cp.value = a_star;
    cp.bracket = {bracket_lo, bracket_hi};
    cp.residual = residual;
    return cp;
}

std::string to_string(SweepParam param) {
    return param == SweepParam::A ? "A" : "B";
}

std::string to_string(CriticalKind kind) {
    return kind == CriticalKind::Transcritical ? "transcritical" : "hopf";
}

} // namespace ecogen
