// dmo — command-line front end for the Dirac–Moshinsky / Jaynes–Cummings simulator

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dmo/dmo.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

int emit(const dmo::TimeSeries& ts, const std::string& out, bool json) {
    const auto write = [&](std::ostream& os) {
        if (json)
            dmo::io::write_json(os, ts);
        else
            dmo::io::write_csv(os, ts);
    };
    if (out.empty() || out == "-") {
        write(std::cout);
        return kOk;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << out << "\n";
        return kFailure;
    }
    write(f);
    std::cerr << "wrote " << ts.rows.size() << " rows to " << out << "\n";
    return kOk;
}

int run_and_emit(const dmo::Scenario& s, const std::string& out, bool json) {
    try {
        return emit(dmo::run_scenario(s), out, json);
    } catch (const dmo::TruncationError& e) {
        std::cerr << "truncation error: " << e.what() << " (rerun with --nmax " << e.required_n_max() << " or more)\n";
        return kFailure;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac–Moshinsky oscillator + isospin field as a two-spin Jaynes–Cummings model"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Evolve a custom scenario and write its time series");
    dmo::Scenario scenario;
    std::string case_name = "number";
    std::string mode_name = "exact";
    std::string nmax_text = "auto";
    std::string out;
    bool json = false;
    run->add_option("--case", case_name, "Initial state: number | coherent")
        ->check(CLI::IsMember({"number", "coherent"}));
    run->add_option("--theta", scenario.theta, "Coherence angle theta (rad)");
    run->add_option("--phi", scenario.phi, "Second angle phi (rad), coherent case only");
    run->add_option("--alpha", scenario.alpha, "Coherent amplitude (real)");
    run->add_option("--gamma", scenario.gamma, "Isospin detuning, units of eta");
    run->add_option("--mc2", scenario.mc2, "Rest energy / spin detuning, units of eta");
    run->add_option("--chi", scenario.chi, "Isospin coupling, units of eta");
    run->add_option("--tmax", scenario.t_max, "Final scaled time eta*t");
    run->add_option("--dt", scenario.dt, "Sampling step in eta*t");
    run->add_option("--mode", mode_name, "Coherent evolution mode: exact | reduced")
        ->check(CLI::IsMember({"exact", "reduced"}));
    run->add_option("--nmax", nmax_text, "Fock truncation, integer or 'auto'");
    run->add_option("--out", out, "Output path (default: stdout)");
    run->add_flag("--json", json, "Write JSON instead of CSV");

    // figure
    auto* figure = app.add_subcommand("figure", "Run a figure preset (fig1a ... fig8c)");
    std::string figure_id;
    bool list = false;
    figure->add_option("id", figure_id, "Preset id");
    figure->add_option("--out", out, "Output path (default: stdout)");
    figure->add_flag("--json", json, "Write JSON instead of CSV");
    figure->add_flag("--list", list, "List available presets");

    // verify
    auto* verify = app.add_subcommand("verify", "Check position-form DMO == JCM form on a truncated basis");
    dmo::mapping::PhysicalParams phys;
    int n_cut = 12;
    verify->add_option("--ncut", n_cut, "2D Fock truncation n_x + n_y <= ncut");
    verify->add_option("--m", phys.m, "Rest mass");
    verify->add_option("--omega", phys.omega, "Oscillator frequency");
    verify->add_option("--c", phys.c, "Speed of light");
    verify->add_option("--hbar", phys.hbar, "Reduced Planck constant");

    // selftest
    auto* selftest = app.add_subcommand("selftest", "Sector solver vs. dense oracle and closed form");
    dmo::selftest::Config cfg;
    bool inject_zeta_flip = false;
    selftest->add_option("--oracle-draws", cfg.oracle_draws, "Random oracle-equivalence scenarios");
    selftest->add_option("--closed-form-draws", cfg.closed_form_draws, "Random closed-form scenarios");
    selftest->add_option("--seed", cfg.seed, "RNG seed");
    selftest->add_flag("--inject-zeta-flip", inject_zeta_flip, "Mutation check: flip the sign of zeta in the solver");

    // validate
    auto* validate = app.add_subcommand("validate", "Check the observable invariants of a written file");
    std::string validate_path;
    validate->add_option("file", validate_path, "CSV or JSON time series")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (*run) {
        scenario.initial = case_name == "number" ? dmo::InitialCase::number : dmo::InitialCase::coherent;
        scenario.mode = mode_name == "exact" ? dmo::CoherentMode::exact : dmo::CoherentMode::reduced;
        if (nmax_text != "auto") {
            try {
                std::size_t used = 0;
                scenario.n_max = std::stoi(nmax_text, &used);
                if (used != nmax_text.size()) throw std::invalid_argument(nmax_text);
            } catch (const std::exception&) {
                std::cerr << "error: --nmax expects an integer or 'auto'\n";
                return kUsage;
            }
        }
        scenario.label = "custom";
        return run_and_emit(scenario, out, json);
    }

    if (*figure) {
        if (list) {
            for (const auto& [id, s] : dmo::figure_presets())
                std::cout << id << "  case=" << dmo::to_string(s.initial) << " theta=" << s.theta
                          << " gamma=mc2=" << s.gamma << " mode=" << dmo::to_string(s.mode) << "\n";
            return kOk;
        }
        if (figure_id.empty()) {
            std::cerr << "error: figure needs a preset id (see --list)\n";
            return kUsage;
        }
        dmo::Scenario s;
        try {
            s = dmo::figure_preset(figure_id);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kUsage;
        }
        return run_and_emit(s, out, json);
    }

    if (*verify) {
        try {
            phys.validate();
        } catch (const std::domain_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kUsage;
        }
        if (n_cut < 4) {
            std::cout << "interior too small: ncut=" << n_cut << " (need ncut >= 4)\n"
                      << "interior_dim=0\n";
            return kFailure;
        }
        const auto rep = dmo::mapping::verify_mapping(phys, n_cut);
        std::printf("m=%g omega=%g c=%g hbar=%g ncut=%d\n", phys.m, phys.omega, phys.c, phys.hbar, n_cut);
        std::printf("eta=%.12g interior_dim=%ld max_interior_diff=%.3e\n", rep.eta,
                    static_cast<long>(rep.interior_dim), rep.max_interior_diff);
        std::printf("%s\n", rep.ok() ? "PASS" : "FAIL");
        return rep.ok() ? kOk : kFailure;
    }

    if (*selftest) {
        if (inject_zeta_flip) cfg.sector_override = dmo::selftest::flip_zeta_sign;
        const auto rep = dmo::selftest::run(cfg);
        if (rep.checks.empty()) {
            std::cout << "FAIL: no checks executed\n";
            return kFailure;
        }
        for (const auto& c : rep.checks)
            std::printf("%s %-20s err=%.3e tol=%.0e  %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.error,
                        c.tolerance, c.params.c_str());
        std::printf("%zu checks, %s\n", rep.checks.size(), rep.ok() ? "all passed" : "FAILURES");
        return rep.ok() ? kOk : kFailure;
    }

    if (*validate) {
        dmo::io::ValidationReport rep;
        try {
            rep = dmo::io::validate_rows(dmo::io::read_time_series(validate_path));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kFailure;
        }
        for (const auto& f : rep.failures) std::cout << f << "\n";
        std::cout << rep.rows << " rows, " << rep.failures.size() << " violations\n";
        return rep.ok() ? kOk : kFailure;
    }

    return kUsage;
}
