#include "ecogen/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ecogen/types.hpp"

namespace ecogen {

namespace {

void require_finite(double x, const char* name) {
    if (!std::isfinite(x))
        throw std::domain_error(std::string("parameter ") + name + " is not finite");
}

} // namespace

void RawParameters::validate() const {
    const struct { double value; const char* name; } fields[] = {
        {R, "R"}, {Ktilde, "Ktilde"}, {h, "h"}, {g, "g"}, {xi, "xi"}, {mu, "mu"},
        {p, "p"}, {q, "q"}, {e, "e"}, {m, "m"}, {n, "n"},
    };
    for (const auto& f : fields) {
        require_finite(f.value, f.name);
        if (f.value < 0.0)
            throw std::domain_error(std::string("parameter ") + f.name + " must be nonnegative");
    }
    if (Ktilde == 0.0) throw std::domain_error("Ktilde must be positive");
    if (g == 0.0) throw std::domain_error("g must be positive");
    if (e == 0.0) throw std::domain_error("e must be positive");
    if (e >= 1.0) throw std::domain_error("conversion factor e must satisfy e < 1");
    if (std::abs(p + q - 1.0) > kZeroTol)
        throw std::domain_error("newborn fractions must satisfy p + q = 1");
}

void ScaledParameters::validate() const {
    const struct { double value; const char* name; } fields[] = {
        {r, "r"}, {c, "c"}, {w, "w"}, {s, "s"}, {v, "v"}, {d, "d"}, {B, "B"}, {A, "A"},
    };
    for (const auto& f : fields) {
        require_finite(f.value, f.name);
        if (!(f.value > 0.0))
            throw std::domain_error(std::string("scaled parameter ") + f.name + " must be positive");
    }
}

ScaledParameters rescale(const RawParameters& raw) {
    raw.validate();
    ScaledParameters out;
    out.r = raw.R / raw.e;
    out.c = raw.h / raw.g;
    out.w = raw.p * raw.g * raw.Ktilde;
    out.s = raw.m / raw.e;
    out.v = raw.q * raw.g * raw.Ktilde;
    out.d = raw.n / raw.e;
    out.B = raw.xi / raw.Ktilde;
    out.A = raw.mu / raw.Ktilde;
    return out;
}

} // namespace ecogen
