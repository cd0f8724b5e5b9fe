// scenario.hpp — scenario description, figure presets and time-series generation

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmo/dynamics.hpp"
#include "dmo/hilbert.hpp"
#include "dmo/observables.hpp"

namespace dmo {

enum class InitialCase { number, coherent };

inline const char* to_string(InitialCase c) { return c == InitialCase::number ? "number" : "coherent"; }

/// One run. Couplings and detunings are in units of η (η = 1), times in ηt.
struct Scenario {
    InitialCase initial{InitialCase::number};
    double theta{0.0};
    double phi{0.0};
    double alpha{0.0};
    double gamma{0.0};
    double mc2{0.0};
    double chi{1.0};
    double t_max{100.0};
    double dt{0.01};
    CoherentMode mode{CoherentMode::exact};
    std::optional<int> n_max;  // nullopt = auto
    std::string label;

    void validate() const {
        if (!(dt > 0.0) || !(t_max > 0.0)) throw std::domain_error("dt and t_max must be > 0");
        if (n_max && *n_max < 2) throw std::domain_error("n_max must be >= 2");
        model().validate();
    }

    ModelParams model() const { return {1.0, chi, mc2, gamma}; }

    /// Explicit n_max, or the default: 2 for number states, otherwise at least 60
    /// and three levels past the point where the coherent tail drops below 1e-12.
    int resolved_n_max() const {
        if (n_max) return *n_max;
        if (initial == InitialCase::number) return 2;
        return std::max(60, required_n_max(cplx{alpha, 0.0}) + 3);
    }

    /// Sample count on t = 0, dt, …, t_max.
    std::size_t samples() const { return static_cast<std::size_t>(std::floor(t_max / dt + 1e-9)) + 1; }
};

struct TimeSeriesRow {
    double t{0.0};
    double S{0.0};
    double W{0.0};
    double rho_ee{0.0};
    double rho_gg{0.0};
    double re_rho_eg{0.0};
    double im_rho_eg{0.0};
    double norm{0.0};
    double trace_deficit{0.0};
};

struct TimeSeries {
    Scenario scenario;
    int n_max{0};
    std::vector<TimeSeriesRow> rows;
};

inline QuantumState initial_state(const Scenario& s) {
    const int n_max = s.resolved_n_max();
    if (s.initial == InitialCase::number) return initial_state_number({s.theta}, n_max);
    return initial_state_coherent({s.theta, s.phi, cplx{s.alpha, 0.0}}, n_max, s.mode);
}

inline TimeSeriesRow observe(const QuantumState& st) {
    const auto rho = reduce_isospin(st);
    TimeSeriesRow r;
    r.t = st.time;
    r.S = entropy(rho);
    r.W = inversion(rho);
    r.rho_ee = rho.rho_ee;
    r.rho_gg = rho.rho_gg;
    r.re_rho_eg = rho.rho_eg.real();
    r.im_rho_eg = rho.rho_eg.imag();
    r.norm = st.norm();
    r.trace_deficit = 1.0 - rho.trace;
    return r;
}

/// Evolves the scenario's initial state exactly to each grid time.
inline TimeSeries run_scenario(const Scenario& s) {
    s.validate();
    TimeSeries ts;
    ts.scenario = s;
    ts.n_max = s.resolved_n_max();
    const SectorPropagator<ModelSectors> prop(initial_state(s), ModelSectors{s.model()});
    const std::size_t count = s.samples();
    ts.rows.reserve(count);
    for (std::size_t k = 0; k < count; ++k) ts.rows.push_back(observe(prop.at(static_cast<double>(k) * s.dt)));
    return ts;
}

/// Figure presets fig1a … fig8c. Panels a/b/c of figures 1, 3, 5, 7 step the
/// detuning γ = mc² through 0, 2, 4; figures 2, 4, 6, 8 step θ through 0, π/4, π/2
/// at zero detuning. Figures 5–8 share the parameters of 1–4. Coherent presets run
/// in reduced mode.
inline std::map<std::string, Scenario> figure_presets() {
    using std::numbers::pi;
    std::map<std::string, Scenario> out;
    const char panels[] = {'a', 'b', 'c'};
    const double detunings[] = {0.0, 2.0, 4.0};
    const double angles[] = {0.0, pi / 4, pi / 2};

    for (int k = 0; k < 3; ++k) {
        Scenario detuned_number;
        detuned_number.initial = InitialCase::number;
        detuned_number.theta = pi / 2;
        detuned_number.gamma = detuned_number.mc2 = detunings[k];

        Scenario angled_number;
        angled_number.initial = InitialCase::number;
        angled_number.theta = angles[k];

        Scenario detuned_coherent;
        detuned_coherent.initial = InitialCase::coherent;
        detuned_coherent.theta = pi / 4;
        detuned_coherent.phi = pi / 2;
        detuned_coherent.alpha = std::sqrt(2.0);
        detuned_coherent.gamma = detuned_coherent.mc2 = detunings[k];
        detuned_coherent.mode = CoherentMode::reduced;

        Scenario angled_coherent = detuned_coherent;
        angled_coherent.theta = angles[k];
        angled_coherent.gamma = angled_coherent.mc2 = 0.0;

        const Scenario* by_figure[] = {&detuned_number, &angled_number, &detuned_coherent, &angled_coherent};
        for (int fig = 1; fig <= 8; ++fig) {
            Scenario s = *by_figure[(fig - 1) % 4];
            s.label = "fig" + std::to_string(fig) + panels[k];
            out.emplace(s.label, s);
        }
    }
    return out;
}

inline Scenario figure_preset(const std::string& id) {
    const auto presets = figure_presets();
    const auto it = presets.find(id);
    if (it == presets.end()) throw std::invalid_argument("unknown figure preset '" + id + "'");
    return it->second;
}

}  // namespace dmo
