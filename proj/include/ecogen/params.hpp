#pragma once

namespace ecogen {

// Dimensional model constants.
//   R      prey growth rate (1/time)
//   Ktilde carrying capacity (biomass)
//   h, g   hunting coefficients of genotypes y and z
//   xi     max resource per prey per unit time
//   mu     half-saturation constant (biomass)
//   p, q   newborn genotype fractions, p + q = 1
//   e      conversion factor, 0 < e < 1
//   m, n   genotype mortalities (1/time)
struct RawParameters {
    double R = 0.0;
    double Ktilde = 0.0;
    double h = 0.0;
    double g = 0.0;
    double xi = 0.0;
    double mu = 0.0;
    double p = 0.0;
    double q = 0.0;
    double e = 0.0;
    double m = 0.0;
    double n = 0.0;

    // Throws std::domain_error on violated invariants (negative fields,
    // Ktilde/g/e zero, e >= 1, p + q != 1 within 1e-12).
    void validate() const;

    bool operator==(const RawParameters&) const = default;
};

// Nondimensional constants of the rescaled system:
//   r = R/e, c = h/g, w = p g Ktilde, s = m/e, v = q g Ktilde, d = n/e,
//   B = xi/Ktilde, A = mu/Ktilde.
struct ScaledParameters {
    double r = 0.0;
    double c = 0.0;
    double w = 0.0;
    double s = 0.0;
    double v = 0.0;
    double d = 0.0;
    double B = 0.0;
    double A = 0.0;

    // Strict positivity of every field, as required by the dynamical
    // analysis entry points (A = 0 in particular is rejected).
    void validate() const;

    ScaledParameters with_A(double A_new) const {
        ScaledParameters out = *this;
        out.A = A_new;
        return out;
    }

    ScaledParameters with_B(double B_new) const {
        ScaledParameters out = *this;
        out.B = B_new;
        return out;
    }

    bool operator==(const ScaledParameters&) const = default;
};

// Nondimensionalization map. Throws std::domain_error when the map is
// undefined (g = 0, e = 0 or Ktilde = 0) or other raw invariants fail.
ScaledParameters rescale(const RawParameters& raw);

} // namespace ecogen
