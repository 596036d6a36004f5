#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecogen/bifurcation.hpp"
#include "ecogen/dynamics.hpp"
#include "ecogen/equilibria.hpp"
#include "ecogen/errors.hpp"
#include "ecogen/io.hpp"
#include "ecogen/stability.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitIntegrator = 4;
constexpr int kExitNoSignChange = 5;

struct CliOptions {
    std::string config_path;
    std::string out_path;
    std::string format; // empty = command default
};

void write_text(const CliOptions& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out)
        throw ecogen::config_error("cannot open output path: " + opt.out_path);
    out << text;
}

json parameters_block(const ecogen::Config& cfg) {
    json j = cfg.scaled;
    if (!cfg.has_A) j.erase("A");
    return j;
}

void require_A(const ecogen::Config& cfg, const char* command) {
    if (!cfg.has_A)
        throw ecogen::config_error(std::string(command) + " requires A in the parameter block");
}

void require_json_format(const CliOptions& opt, const char* command) {
    if (!opt.format.empty() && opt.format != "json")
        throw ecogen::config_error(std::string(command) + " only emits json");
}

int run_equilibria(const ecogen::Config& cfg, const CliOptions& opt) {
    require_A(cfg, "equilibria");
    require_json_format(opt, "equilibria");
    const auto& p = cfg.scaled;

    json out;
    out["parameters"] = parameters_block(cfg);
    out["derived"] = ecogen::derived(p);
    out["transcritical_B"] = ecogen::transcritical_B(p);
    out["equilibria"] =
        json::array({ecogen::origin(), ecogen::prey_only(), ecogen::coexistence(p)});
    write_text(opt, out.dump(2) + "\n");
    return kExitOk;
}

int run_classify(const ecogen::Config& cfg, const CliOptions& opt) {
    require_json_format(opt, "classify");
    const auto& p = cfg.scaled;

    json out;
    out["parameters"] = parameters_block(cfg);
    const ecogen::ClassifierQuantities q = ecogen::classifier_quantities(p);
    out["classifier"] = q;
    out["candidate_intervals"] = ecogen::assemble_candidate_intervals(q);
    if (cfg.has_A) {
        try {
            out["report"] = ecogen::coexistence_stability(p);
        } catch (const ecogen::infeasible_error&) {
            out["report"] = nullptr; // F2 infeasible at this A
        }
    } else {
        out["report"] = nullptr;
    }
    write_text(opt, out.dump(2) + "\n");
    return kExitOk;
}

int run_simulate(const ecogen::Config& cfg, const CliOptions& opt) {
    require_A(cfg, "simulate");
    if (opt.out_path.empty())
        throw ecogen::config_error("simulate requires --out for the trajectory CSV");
    const ecogen::SimulateOptions sim = cfg.simulate.value_or(ecogen::SimulateOptions{});
    const auto& p = cfg.scaled;

    const ecogen::StateVector u0 =
        sim.u0 ? *sim.u0 : ecogen::default_initial_state(p);
    const ecogen::Trajectory tr =
        ecogen::integrate(p, u0, sim.t_end, sim.rel_tol, sim.abs_tol);
    const ecogen::AsymptoticVerdict verdict = ecogen::classify_asymptotics(tr);

    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out)
        throw ecogen::config_error("cannot open output path: " + opt.out_path);
    ecogen::write_trajectory_csv(out, tr);

    std::cout << json(verdict).dump(2) << "\n";
    return kExitOk;
}

int run_sweep(const ecogen::Config& cfg, const CliOptions& opt) {
    if (!cfg.sweep)
        throw ecogen::config_error("sweep requires a \"sweep\" block in the config");
    const ecogen::SweepOptions& sw = *cfg.sweep;
    if (sw.param == ecogen::SweepParam::B) require_A(cfg, "sweep over B");

    const auto points = ecogen::sweep(cfg.scaled, sw.param, sw.lo, sw.hi, sw.n);
    if (opt.format == "json") {
        json out;
        out["param"] = ecogen::to_string(sw.param);
        out["points"] = points;
        write_text(opt, out.dump(2) + "\n");
    } else {
        std::ostringstream os;
        ecogen::write_sweep_csv(os, sw.param, points);
        write_text(opt, os.str());
    }
    return kExitOk;
}

int run_hopf(const ecogen::Config& cfg, const CliOptions& opt) {
    require_json_format(opt, "hopf");
    if (!cfg.hopf)
        throw ecogen::config_error("hopf requires a \"hopf\" block with a bracket");
    const ecogen::CriticalPoint cp =
        ecogen::find_hopf(cfg.scaled, cfg.hopf->lo, cfg.hopf->hi);
    write_text(opt, json(cp).dump(2) + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equilibrium, stability and bifurcation analysis of a predator-prey "
                 "system with two predator genotypes and saturating predation"};
    app.require_subcommand(1);
    app.fallthrough();

    CliOptions opt;
    app.add_option("--config", opt.config_path, "parameter/config JSON file")->required();
    app.add_option("--out", opt.out_path, "output path (stdout when omitted)");
    app.add_option("--format", opt.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* cmd_equilibria =
        app.add_subcommand("equilibria", "equilibria, feasibility and derived quantities");
    auto* cmd_classify =
        app.add_subcommand("classify", "Routh-Hurwitz case classification and candidate intervals");
    auto* cmd_simulate = app.add_subcommand("simulate", "integrate and classify the long run");
    auto* cmd_sweep = app.add_subcommand("sweep", "one-parameter stability sweep (CSV)");
    auto* cmd_hopf = app.add_subcommand("hopf", "locate the Hopf point by bisection");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        const ecogen::Config cfg = ecogen::load_config(opt.config_path);
        if (cmd_equilibria->parsed()) return run_equilibria(cfg, opt);
        if (cmd_classify->parsed()) return run_classify(cfg, opt);
        if (cmd_simulate->parsed()) return run_simulate(cfg, opt);
        if (cmd_sweep->parsed()) return run_sweep(cfg, opt);
        if (cmd_hopf->parsed()) return run_hopf(cfg, opt);
        return kExitConfig;
    } catch (const ecogen::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ecogen::no_sign_change_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoSignChange;
    } catch (const ecogen::step_failure_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIntegrator;
    } catch (const ecogen::insufficient_span_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIntegrator;
    } catch (const std::domain_error& e) {
        // degenerate/infeasible parameter combinations
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
