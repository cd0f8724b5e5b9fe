// selftest.hpp — sector solver vs. dense oracle and vs. the closed-form I = 0 solution

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dmo/dynamics.hpp"
#include "dmo/oracle.hpp"

namespace dmo::selftest {

/// Replaces the sector generator under test; the oracle side is never affected.
using SectorOverride = std::function<Matrix(int excitation, int n_max, const ModelParams&)>;

struct Config {
    int oracle_draws{10};
    int closed_form_draws{5};
    int oracle_n_max{40};
    std::uint64_t seed{20240611};
    double oracle_tolerance{1e-8};
    double closed_form_tolerance{1e-10};
    SectorOverride sector_override;
};

struct CheckResult {
    std::string name;
    std::string params;
    double error{0.0};
    double tolerance{0.0};
    bool passed{false};
};

struct Report {
    std::vector<CheckResult> checks;

    bool ok() const {
        if (checks.empty()) return false;
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Sector generator for the selftest, honouring Config::sector_override.
struct TestedSectors {
    ModelParams params;
    SectorOverride override_fn;

    Matrix operator()(int excitation, int n_max) const {
        if (override_fn) return override_fn(excitation, n_max, params);
        return truncated_sector_hamiltonian(excitation, params, n_max).matrix;
    }
};

/// Test-only mutation: negates ζ on the sector diagonals.
inline Matrix flip_zeta_sign(int excitation, int n_max, const ModelParams& p) {
    Matrix h = truncated_sector_hamiltonian(excitation, p, n_max).matrix;
    const auto full = canonical_sector(excitation);
    Eigen::Index row = 0;
    for (std::size_t k = 0; k < full.size(); ++k) {
        if (full.states[k].n > n_max) continue;
        if (full.states[k].spin == full.states[k].isospin) h(row, row) = -h(row, row);
        ++row;
    }
    return h;
}

inline std::string describe(const std::vector<std::pair<std::string, double>>& kv) {
    std::ostringstream os;
    os.precision(6);
    for (std::size_t i = 0; i < kv.size(); ++i) os << (i ? " " : "") << kv[i].first << '=' << kv[i].second;
    return os.str();
}

/// Random coherent scenarios evolved both by sectors and by the dense oracle.
inline void run_oracle_suite(const Config& cfg, Report& rep) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> amp(0.0, std::sqrt(2.0));
    std::uniform_real_distribution<double> detuning(0.0, 4.0);
    std::uniform_real_distribution<double> coupling(0.0, 2.0);
    const double times[] = {1.0, 5.0, 20.0, 50.0};

    for (int d = 0; d < cfg.oracle_draws; ++d) {
        InitialSpecCoherent spec{angle(rng), angle(rng), cplx{amp(rng), 0.0}};
        ModelParams p{1.0, coupling(rng), detuning(rng), detuning(rng)};
        const auto psi0 = initial_state_coherent(spec, cfg.oracle_n_max);
        const SectorPropagator<TestedSectors> prop(psi0, TestedSectors{p, cfg.sector_override});
        const auto dense0 = oracle::embed(psi0);

        double worst = 0.0;
        for (double t : times)
            worst = std::max(worst, oracle::compare(oracle::embed(prop.at(t)), oracle::dense_evolve(dense0, p, t)));

        rep.checks.push_back({"oracle-equivalence",
                              describe({{"theta", spec.theta},
                                        {"phi", spec.phi},
                                        {"alpha", spec.alpha.real()},
                                        {"chi", p.chi},
                                        {"mc2", p.mc2},
                                        {"gamma", p.gamma}}),
                              worst, cfg.oracle_tolerance, worst < cfg.oracle_tolerance});
    }
}

/// I = 0 sector with η = χ, mc² = γ against the analytic solution on 100 times in ηt ∈ [0, 50].
inline void run_closed_form_suite(const Config& cfg, Report& rep) {
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> detuning(0.0, 4.0);
    std::uniform_real_distribution<double> coupling(0.5, 2.0);

    for (int d = 0; d < cfg.closed_form_draws; ++d) {
        const double theta = angle(rng);
        const double g = detuning(rng);
        const double eta = coupling(rng);
        const ModelParams p{eta, eta, g, g};
        const SectorPropagator<TestedSectors> prop(initial_state_number({theta}), TestedSectors{p, cfg.sector_override});

        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double t = (50.0 * k / 99.0) / eta;
            const auto st = prop.at(t);
            const auto exact = closed_form_case1(theta, p, t);
            const Vector& c = st.sectors.at(0).amplitudes;
            for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(c(j) - exact[static_cast<std::size_t>(j)]));
        }
        rep.checks.push_back({"closed-form-case1",
                              describe({{"theta", theta}, {"eta", eta}, {"gamma", g}}),
                              worst, cfg.closed_form_tolerance, worst < cfg.closed_form_tolerance});
    }
}

inline Report run(const Config& cfg = {}) {
    Report rep;
    run_oracle_suite(cfg, rep);
    run_closed_form_suite(cfg, rep);
    return rep;
}

}  // namespace dmo::selftest
