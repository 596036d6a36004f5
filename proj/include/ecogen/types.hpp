#pragma once

#include <algorithm>
#include <cmath>

namespace ecogen {

// Absolute tolerance for comparisons against zero. Coefficients in typical
// parameter sets span roughly 1e-4 to 1e1.
inline constexpr double kZeroTol = 1e-12;

// Nondimensional population triple (prey, genotype-y predators, genotype-z
// predators). Also reused as a plain dimensional triple by the raw-form RHS.
struct StateVector {
    double X = 0.0;
    double Y = 0.0;
    double Z = 0.0;

    bool operator==(const StateVector&) const = default;
};

inline StateVector operator+(const StateVector& a, const StateVector& b) {
    return {a.X + b.X, a.Y + b.Y, a.Z + b.Z};
}

inline StateVector operator-(const StateVector& a, const StateVector& b) {
    return {a.X - b.X, a.Y - b.Y, a.Z - b.Z};
}

inline StateVector operator*(double k, const StateVector& u) {
    return {k * u.X, k * u.Y, k * u.Z};
}

inline double inf_norm(const StateVector& u) {
    return std::max({std::abs(u.X), std::abs(u.Y), std::abs(u.Z)});
}

struct Matrix3 {
    double a[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

    double& operator()(int i, int j) { return a[i][j]; }
    double operator()(int i, int j) const { return a[i][j]; }

    double trace() const { return a[0][0] + a[1][1] + a[2][2]; }

    double determinant() const {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
             - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
             + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    }

    // Sum of the three principal 2x2 minors.
    double principal_minor_sum() const {
        return (a[1][1] * a[2][2] - a[1][2] * a[2][1])
             + (a[0][0] * a[2][2] - a[0][2] * a[2][0])
             + (a[0][0] * a[1][1] - a[0][1] * a[1][0]);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& row : a)
            for (double x : row) m = std::max(m, std::abs(x));
        return m;
    }
};

// Open interval of half-saturation values A.
struct AInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return x > lo && x < hi; }
    double width() const { return hi - lo; }

    bool operator==(const AInterval&) const = default;
};

} // namespace ecogen
