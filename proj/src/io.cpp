#include "ecogen/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "ecogen/errors.hpp"

namespace ecogen {

using nlohmann::json;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_string(EquilibriumKind kind) {
    switch (kind) {
    case EquilibriumKind::Origin: return "origin";
    case EquilibriumKind::PreyOnly: return "prey_only";
    case EquilibriumKind::Coexistence: return "coexistence";
    }
    return "?";
}

std::string to_string(AsymptoticKind kind) {
    switch (kind) {
    case AsymptoticKind::SteadyState: return "steady_state";
    case AsymptoticKind::LimitCycle: return "limit_cycle";
    case AsymptoticKind::Undecided: return "undecided";
    }
    return "?";
}

namespace {

EquilibriumKind equilibrium_kind_from(const std::string& s) {
    if (s == "origin") return EquilibriumKind::Origin;
    if (s == "prey_only") return EquilibriumKind::PreyOnly;
    if (s == "coexistence") return EquilibriumKind::Coexistence;
    throw config_error("unknown equilibrium kind: " + s);
}

AsymptoticKind asymptotic_kind_from(const std::string& s) {
    if (s == "steady_state") return AsymptoticKind::SteadyState;
    if (s == "limit_cycle") return AsymptoticKind::LimitCycle;
    if (s == "undecided") return AsymptoticKind::Undecided;
    throw config_error("unknown verdict kind: " + s);
}

Regime regime_from(const std::string& s) {
    if (s == "Case1") return Regime::Case1;
    if (s == "Case2") return Regime::Case2;
    throw config_error("unknown regime: " + s);
}

A1Case a1_case_from(const std::string& s) {
    if (s == "A") return A1Case::A;
    if (s == "B") return A1Case::B;
    if (s == "C") return A1Case::C;
    if (s == "D") return A1Case::D;
    throw config_error("unknown a1 case: " + s);
}

A2Case a2_case_from(const std::string& s) {
    for (A2Case c : {A2Case::OnePlus, A2Case::TwoPlus, A2Case::ThreePlus, A2Case::FourPlus,
                     A2Case::OneMinus, A2Case::TwoMinus, A2Case::ThreeMinus, A2Case::FourMinus,
                     A2Case::FiveMinus, A2Case::SixMinus, A2Case::SevenMinus, A2Case::Degenerate})
        if (to_string(c) == s) return c;
    throw config_error("unknown a2 case: " + s);
}

CriticalKind critical_kind_from(const std::string& s) {
    if (s == "transcritical") return CriticalKind::Transcritical;
    if (s == "hopf") return CriticalKind::Hopf;
    throw config_error("unknown critical point kind: " + s);
}

} // namespace

void to_json(json& j, const StateVector& u) { j = json::array({u.X, u.Y, u.Z}); }

void from_json(const json& j, StateVector& u) {
    if (!j.is_array() || j.size() != 3)
        throw config_error("state must be a 3-element array");
    u = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

void to_json(json& j, const RawParameters& p) {
    j = json{{"R", p.R}, {"Ktilde", p.Ktilde}, {"h", p.h}, {"g", p.g}, {"xi", p.xi},
             {"mu", p.mu}, {"p", p.p}, {"q", p.q}, {"e", p.e}, {"m", p.m}, {"n", p.n}};
}

void from_json(const json& j, RawParameters& p) {
    p.R = j.at("R").get<double>();
    p.Ktilde = j.at("Ktilde").get<double>();
    p.h = j.at("h").get<double>();
    p.g = j.at("g").get<double>();
    p.xi = j.at("xi").get<double>();
    p.mu = j.at("mu").get<double>();
    p.p = j.at("p").get<double>();
    p.q = j.at("q").get<double>();
    p.e = j.at("e").get<double>();
    p.m = j.at("m").get<double>();
    p.n = j.at("n").get<double>();
}

void to_json(json& j, const ScaledParameters& p) {
    j = json{{"r", p.r}, {"c", p.c}, {"w", p.w}, {"s", p.s},
             {"v", p.v}, {"d", p.d}, {"B", p.B}, {"A", p.A}};
}

void from_json(const json& j, ScaledParameters& p) {
    p.r = j.at("r").get<double>();
    p.c = j.at("c").get<double>();
    p.w = j.at("w").get<double>();
    p.s = j.at("s").get<double>();
    p.v = j.at("v").get<double>();
    p.d = j.at("d").get<double>();
    p.B = j.at("B").get<double>();
    p.A = j.at("A").get<double>();
}

void to_json(json& j, const DerivedQuantities& dq) {
    j = json{{"Q", dq.Q}, {"V", dq.V}, {"W", dq.W}};
}

void from_json(const json& j, DerivedQuantities& dq) {
    dq.Q = j.at("Q").get<double>();
    dq.V = j.at("V").get<double>();
    dq.W = j.at("W").get<double>();
}

void to_json(json& j, const Equilibrium& eq) {
    j = json{{"kind", to_string(eq.kind)},
             {"state", eq.state},
             {"feasible", eq.feasible},
             {"boundary", eq.boundary}};
}

void from_json(const json& j, Equilibrium& eq) {
    eq.kind = equilibrium_kind_from(j.at("kind").get<std::string>());
    eq.state = j.at("state").get<StateVector>();
    eq.feasible = j.at("feasible").get<bool>();
    eq.boundary = j.at("boundary").get<bool>();
}

void to_json(json& j, const CharPolyCoeffs& c) {
    j = json{{"a1", c.a1}, {"a2", c.a2}, {"a3", c.a3}};
}

void from_json(const json& j, CharPolyCoeffs& c) {
    c.a1 = j.at("a1").get<double>();
    c.a2 = j.at("a2").get<double>();
    c.a3 = j.at("a3").get<double>();
}

void to_json(json& j, const RouthHurwitz& rh) {
    j = json{{"a1", rh.a1},         {"a3", rh.a3},           {"hurwitz", rh.hurwitz},
             {"a1_pos", rh.a1_pos}, {"a3_pos", rh.a3_pos},   {"hurwitz_pos", rh.hurwitz_pos},
             {"stable", rh.stable}};
}

void from_json(const json& j, RouthHurwitz& rh) {
    rh.a1 = j.at("a1").get<double>();
    rh.a3 = j.at("a3").get<double>();
    rh.hurwitz = j.at("hurwitz").get<double>();
    rh.a1_pos = j.at("a1_pos").get<bool>();
    rh.a3_pos = j.at("a3_pos").get<bool>();
    rh.hurwitz_pos = j.at("hurwitz_pos").get<bool>();
    rh.stable = j.at("stable").get<bool>();
}

void to_json(json& j, const Knot& k) {
    j = json{{"label", k.label}, {"value", k.value}};
}

void from_json(const json& j, Knot& k) {
    k.label = j.at("label").get<std::string>();
    k.value = j.at("value").get<double>();
}

void to_json(json& j, const ClassifierQuantities& q) {
    j = json{{"K", q.K},
             {"M", q.M},
             {"H", q.H},
             {"v_over_ds", q.v_over_ds},
             {"regime", to_string(q.regime)},
             {"a1_case", to_string(q.a1_case)},
             {"a2_case", to_string(q.a2_case)},
             {"label", case_label(q)},
             {"knots", q.knots}};
}

void from_json(const json& j, ClassifierQuantities& q) {
    q.K = j.at("K").get<double>();
    q.M = j.at("M").get<double>();
    q.H = j.at("H").get<double>();
    q.v_over_ds = j.at("v_over_ds").get<double>();
    q.regime = regime_from(j.at("regime").get<std::string>());
    q.a1_case = a1_case_from(j.at("a1_case").get<std::string>());
    q.a2_case = a2_case_from(j.at("a2_case").get<std::string>());
    q.knots = j.at("knots").get<std::vector<Knot>>();
}

void to_json(json& j, const QuadCoeffs& q) {
    j = json{{"m1", q.m1}, {"m0", q.m0}};
}

void from_json(const json& j, QuadCoeffs& q) {
    q.m1 = j.at("m1").get<double>();
    q.m0 = j.at("m0").get<double>();
}

void to_json(json& j, const AInterval& iv) { j = json::array({iv.lo, iv.hi}); }

void from_json(const json& j, AInterval& iv) {
    if (!j.is_array() || j.size() != 2)
        throw config_error("interval must be a 2-element array");
    iv = {j[0].get<double>(), j[1].get<double>()};
}

void to_json(json& j, const StabilityReport& rep) {
    json eig = json::array();
    for (const auto& lambda : rep.eigenvalues)
        eig.push_back(json::array({lambda.real(), lambda.imag()}));
    j = json{{"kind", to_string(rep.kind)},
             {"eigenvalues", eig},
             {"stable", rep.stable},
             {"coeffs", rep.coeffs ? json(*rep.coeffs) : json(nullptr)},
             {"rh", rep.rh ? json(*rep.rh) : json(nullptr)},
             {"classifier", rep.classifier ? json(*rep.classifier) : json(nullptr)},
             {"candidate_intervals", rep.candidate_intervals},
             {"prey_only_quad", rep.prey_only_quad ? json(*rep.prey_only_quad) : json(nullptr)}};
}

void from_json(const json& j, StabilityReport& rep) {
    rep.kind = equilibrium_kind_from(j.at("kind").get<std::string>());
    const auto& eig = j.at("eigenvalues");
    if (!eig.is_array() || eig.size() != 3)
        throw config_error("eigenvalues must be a 3-element array of [re, im] pairs");
    for (int i = 0; i < 3; ++i)
        rep.eigenvalues[i] = {eig[i][0].get<double>(), eig[i][1].get<double>()};
    rep.stable = j.at("stable").get<bool>();
    rep.coeffs = j.at("coeffs").is_null()
                     ? std::nullopt
                     : std::optional<CharPolyCoeffs>(j.at("coeffs").get<CharPolyCoeffs>());
    rep.rh = j.at("rh").is_null() ? std::nullopt
                                  : std::optional<RouthHurwitz>(j.at("rh").get<RouthHurwitz>());
    rep.classifier = j.at("classifier").is_null()
                         ? std::nullopt
                         : std::optional<ClassifierQuantities>(
                               j.at("classifier").get<ClassifierQuantities>());
    rep.candidate_intervals = j.at("candidate_intervals").get<std::vector<AInterval>>();
    rep.prey_only_quad = j.at("prey_only_quad").is_null()
                             ? std::nullopt
                             : std::optional<QuadCoeffs>(j.at("prey_only_quad").get<QuadCoeffs>());
}

void to_json(json& j, const AsymptoticVerdict& v) {
    j = json{{"kind", to_string(v.kind)},
             {"state", v.state},
             {"amplitude", v.amplitude},
             {"period", v.period},
             {"transient_fraction", v.transient_fraction}};
}

void from_json(const json& j, AsymptoticVerdict& v) {
    v.kind = asymptotic_kind_from(j.at("kind").get<std::string>());
    v.state = j.at("state").get<StateVector>();
    v.amplitude = j.at("amplitude").get<StateVector>();
    v.period = j.at("period").get<double>();
    v.transient_fraction = j.at("transient_fraction").get<double>();
}

void to_json(json& j, const CriticalPoint& cp) {
    j = json{{"kind", to_string(cp.kind)},
             {"parameter", cp.parameter},
             {"value", cp.value},
             {"bracket", json::array({cp.bracket[0], cp.bracket[1]})},
             {"residual", cp.residual}};
}

void from_json(const json& j, CriticalPoint& cp) {
    cp.kind = critical_kind_from(j.at("kind").get<std::string>());
    cp.parameter = j.at("parameter").get<std::string>();
    cp.value = j.at("value").get<double>();
    cp.bracket = {j.at("bracket")[0].get<double>(), j.at("bracket")[1].get<double>()};
    cp.residual = j.at("residual").get<double>();
}

void to_json(json& j, const SweepPoint& pt) {
    j = json{{"value", pt.value},
             {"feasible", pt.feasible},
             {"max_re_lambda", pt.max_re_lambda},
             {"a1", pt.a1},
             {"a3", pt.a3},
             {"hurwitz_margin", pt.hurwitz},
             {"f1_stable", pt.f1_stable}};
}

void from_json(const json& j, SweepPoint& pt) {
    auto num = [&](const char* key) {
        const auto& x = j.at(key);
        return x.is_null() ? std::numeric_limits<double>::quiet_NaN() : x.get<double>();
    };
    pt.value = j.at("value").get<double>();
    pt.feasible = j.at("feasible").get<bool>();
    pt.max_re_lambda = num("max_re_lambda");
    pt.a1 = num("a1");
    pt.a3 = num("a3");
    pt.hurwitz = num("hurwitz_margin");
    pt.f1_stable = j.at("f1_stable").get<bool>();
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
    os << "t,X,Y,Z\n";
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        const StateVector& u = tr.states[i];
        os << fmt17(tr.times[i]) << ',' << fmt17(u.X) << ',' << fmt17(u.Y) << ','
           << fmt17(u.Z) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, SweepParam param, const std::vector<SweepPoint>& points) {
    os << "param,value,feasible,max_re_lambda,a1,a3,hurwitz_margin,f1_stable\n";
    const std::string name = to_string(param);
    for (const SweepPoint& pt : points) {
        os << name << ',' << fmt17(pt.value) << ',' << (pt.feasible ? 1 : 0) << ','
           << fmt17(pt.max_re_lambda) << ',' << fmt17(pt.a1) << ',' << fmt17(pt.a3) << ','
           << fmt17(pt.hurwitz) << ',' << (pt.f1_stable ? 1 : 0) << '\n';
    }
}

namespace {

void reject_unknown_keys(const json& block, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : block.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) { known = true; break; }
        if (!known)
            throw config_error("unknown key \"" + key + "\" in " + where + " block");
    }
}

double require_number(const json& block, const char* key, const std::string& where) {
    if (!block.contains(key))
        throw config_error("missing \"" + std::string(key) + "\" in " + where + " block");
    if (!block.at(key).is_number())
        throw config_error("\"" + std::string(key) + "\" in " + where + " block must be a number");
    return block.at(key).get<double>();
}

} // namespace

Config parse_config(const json& j) {
    if (!j.is_object())
        throw config_error("config root must be a JSON object");
    reject_unknown_keys(j, {"raw", "scaled", "simulate", "sweep", "hopf", "description"},
                        "config");

    const bool has_raw = j.contains("raw");
    const bool has_scaled = j.contains("scaled");
    if (has_raw == has_scaled)
        throw config_error("config must contain exactly one of \"raw\" or \"scaled\"");

    Config cfg;
    if (has_raw) {
        const json& block = j.at("raw");
        reject_unknown_keys(block, {"R", "Ktilde", "h", "g", "xi", "mu", "p", "q", "e", "m", "n"},
                            "raw");
        RawParameters raw;
        raw.R = require_number(block, "R", "raw");
        raw.Ktilde = require_number(block, "Ktilde", "raw");
        raw.h = require_number(block, "h", "raw");
        raw.g = require_number(block, "g", "raw");
        raw.xi = require_number(block, "xi", "raw");
        raw.mu = require_number(block, "mu", "raw");
        raw.p = require_number(block, "p", "raw");
        raw.q = require_number(block, "q", "raw");
        raw.e = require_number(block, "e", "raw");
        raw.m = require_number(block, "m", "raw");
        raw.n = require_number(block, "n", "raw");
        cfg.raw = raw;
        cfg.scaled = rescale(raw);
        cfg.has_A = true;
    } else {
        const json& block = j.at("scaled");
        reject_unknown_keys(block, {"r", "c", "w", "s", "v", "d", "B", "A"}, "scaled");
        cfg.scaled.r = require_number(block, "r", "scaled");
        cfg.scaled.c = require_number(block, "c", "scaled");
        cfg.scaled.w = require_number(block, "w", "scaled");
        cfg.scaled.s = require_number(block, "s", "scaled");
        cfg.scaled.v = require_number(block, "v", "scaled");
        cfg.scaled.d = require_number(block, "d", "scaled");
        cfg.scaled.B = require_number(block, "B", "scaled");
        cfg.has_A = block.contains("A");
        cfg.scaled.A = cfg.has_A ? require_number(block, "A", "scaled")
                                 : std::numeric_limits<double>::quiet_NaN();
    }

    if (j.contains("simulate")) {
        const json& block = j.at("simulate");
        reject_unknown_keys(block, {"t_end", "rel_tol", "abs_tol", "u0"}, "simulate");
        SimulateOptions opt;
        if (block.contains("t_end")) opt.t_end = require_number(block, "t_end", "simulate");
        if (block.contains("rel_tol")) opt.rel_tol = require_number(block, "rel_tol", "simulate");
        if (block.contains("abs_tol")) opt.abs_tol = require_number(block, "abs_tol", "simulate");
        if (block.contains("u0")) opt.u0 = block.at("u0").get<StateVector>();
        cfg.simulate = opt;
    }

    if (j.contains("sweep")) {
        const json& block = j.at("sweep");
        reject_unknown_keys(block, {"param", "lo", "hi", "n"}, "sweep");
        SweepOptions opt;
        if (!block.contains("param") || !block.at("param").is_string())
            throw config_error("sweep block needs \"param\": \"A\" or \"B\"");
        const std::string name = block.at("param").get<std::string>();
        if (name == "A") opt.param = SweepParam::A;
        else if (name == "B") opt.param = SweepParam::B;
        else throw config_error("sweep param must be \"A\" or \"B\"");
        opt.lo = require_number(block, "lo", "sweep");
        opt.hi = require_number(block, "hi", "sweep");
        const double n = require_number(block, "n", "sweep");
        opt.n = static_cast<int>(n);
        if (opt.n != n || opt.n < 2)
            throw config_error("sweep n must be an integer >= 2");
        if (!(0.0 < opt.lo && opt.lo < opt.hi))
            throw config_error("sweep range must satisfy 0 < lo < hi");
        cfg.sweep = opt;
    }

    if (j.contains("hopf")) {
        const json& block = j.at("hopf");
        reject_unknown_keys(block, {"bracket"}, "hopf");
        if (!block.contains("bracket") || !block.at("bracket").is_array()
            || block.at("bracket").size() != 2)
            throw config_error("hopf block needs \"bracket\": [lo, hi]");
        HopfOptions opt;
        opt.lo = block.at("bracket")[0].get<double>();
        opt.hi = block.at("bracket")[1].get<double>();
        if (!(0.0 < opt.lo && opt.lo < opt.hi))
            throw config_error("hopf bracket must satisfy 0 < lo < hi");
        cfg.hopf = opt;
    }

    return cfg;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open config file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw config_error("config is not valid JSON: " + std::string(e.what()));
    }
    return parse_config(j);
}

} // namespace ecogen
