#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ecogen/bifurcation.hpp"
#include "ecogen/dynamics.hpp"
#include "ecogen/equilibria.hpp"
#include "ecogen/params.hpp"
#include "ecogen/stability.hpp"
#include "ecogen/types.hpp"

namespace ecogen {

// 17 significant digits, locale-independent; doubles survive a round trip.
std::string fmt17(double x);

std::string to_string(EquilibriumKind kind);
std::string to_string(AsymptoticKind kind);

void to_json(nlohmann::json& j, const StateVector& u);
void from_json(const nlohmann::json& j, StateVector& u);

void to_json(nlohmann::json& j, const RawParameters& p);
void from_json(const nlohmann::json& j, RawParameters& p);

void to_json(nlohmann::json& j, const ScaledParameters& p);
void from_json(const nlohmann::json& j, ScaledParameters& p);

void to_json(nlohmann::json& j, const DerivedQuantities& dq);
void from_json(const nlohmann::json& j, DerivedQuantities& dq);

void to_json(nlohmann::json& j, const Equilibrium& eq);
void from_json(const nlohmann::json& j, Equilibrium& eq);

void to_json(nlohmann::json& j, const CharPolyCoeffs& c);
void from_json(const nlohmann::json& j, CharPolyCoeffs& c);

void to_json(nlohmann::json& j, const RouthHurwitz& rh);
void from_json(const nlohmann::json& j, RouthHurwitz& rh);

void to_json(nlohmann::json& j, const Knot& k);
void from_json(const nlohmann::json& j, Knot& k);

void to_json(nlohmann::json& j, const ClassifierQuantities& q);
void from_json(const nlohmann::json& j, ClassifierQuantities& q);

void to_json(nlohmann::json& j, const QuadCoeffs& q);
void from_json(const nlohmann::json& j, QuadCoeffs& q);

void to_json(nlohmann::json& j, const AInterval& iv);
void from_json(const nlohmann::json& j, AInterval& iv);

// eigenvalues serialize as [re, im] pairs
void to_json(nlohmann::json& j, const StabilityReport& rep);
void from_json(const nlohmann::json& j, StabilityReport& rep);

void to_json(nlohmann::json& j, const AsymptoticVerdict& v);
void from_json(const nlohmann::json& j, AsymptoticVerdict& v);

void to_json(nlohmann::json& j, const CriticalPoint& cp);
void from_json(const nlohmann::json& j, CriticalPoint& cp);

void to_json(nlohmann::json& j, const SweepPoint& pt);
void from_json(const nlohmann::json& j, SweepPoint& pt);

// header `t,X,Y,Z`, one row per output point
void write_trajectory_csv(std::ostream& os, const Trajectory& tr);

// header `param,value,feasible,max_re_lambda,a1,a3,hurwitz_margin,f1_stable`
void write_sweep_csv(std::ostream& os, SweepParam param, const std::vector<SweepPoint>& points);

struct SimulateOptions {
    double t_end = 2000.0;
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    std::optional<StateVector> u0; // defaulted from the parameters when absent
};

struct SweepOptions {
    SweepParam param = SweepParam::A;
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
};

struct HopfOptions {
    double lo = 0.0;
    double hi = 0.0;
};

// Parameter file carrying exactly one of a "raw" or a "scaled" block, plus
// optional per-command blocks. A may be omitted from the scaled block for
// A-independent analyses.
struct Config {
    ScaledParameters scaled;
    bool has_A = false;
    std::optional<RawParameters> raw;
    std::optional<SimulateOptions> simulate;
    std::optional<SweepOptions> sweep;
    std::optional<HopfOptions> hopf;
};

Config parse_config(const nlohmann::json& j);
Config load_config(const std::filesystem::path& path);

} // namespace ecogen
