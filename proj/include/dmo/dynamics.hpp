// dynamics.hpp — initial states and exact per-sector time evolution

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dmo/hamiltonian.hpp"
#include "dmo/hilbert.hpp"

namespace dmo {

/// Weight an edge-truncated sector may carry before evolution refuses to run.
inline constexpr double kTruncationTolerance = 1e-10;

struct SectorAmplitudes {
    SectorBasis basis;
    Vector amplitudes;
};

/// Pure state stored sector by sector; sectors absent from the map carry zero amplitude.
struct QuantumState {
    std::map<int, SectorAmplitudes> sectors;
    int n_max{0};
    double time{0.0};

    cplx amplitude(const BasisState& s) const {
        const auto it = sectors.find(excitation_of(s));
        if (it == sectors.end()) return {0.0, 0.0};
        const int k = it->second.basis.index_of(s);
        return k < 0 ? cplx{0.0, 0.0} : it->second.amplitudes(k);
    }

    double norm_squared() const {
        double w = 0.0;
        for (const auto& [I, sec] : sectors) w += sec.amplitudes.squaredNorm();
        return w;
    }

    double norm() const { return std::sqrt(norm_squared()); }
};

enum class CoherentMode { exact, reduced };

inline const char* to_string(CoherentMode m) { return m == CoherentMode::exact ? "exact" : "reduced"; }

struct InitialSpecNumber {
    double theta{0.0};
};

struct InitialSpecCoherent {
    double theta{0.0};
    double phi{0.0};
    cplx alpha{0.0, 0.0};

    /// (c₁, c₂, c₃, c₄) weighting |−−̃⟩, |+−̃⟩, |−+̃⟩, |++̃⟩.
    std::array<double, 4> weights() const {
        return {std::cos(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                std::cos(theta) * std::sin(phi), std::sin(theta) * std::cos(phi)};
    }
};

/// (cos θ |−+̃⟩ + sin θ |+−̃⟩)|0⟩, entirely in sector I = 0.
inline QuantumState initial_state_number(const InitialSpecNumber& spec, int n_max = 2) {
    if (n_max < 1) throw std::domain_error("number-state evolution needs n_max >= 1");
    QuantumState st;
    st.n_max = n_max;
    SectorAmplitudes sec{enumerate_sector(0, n_max), Vector::Zero(3)};
    sec.amplitudes(1) = std::sin(spec.theta);
    sec.amplitudes(2) = std::cos(spec.theta);
    st.sectors.emplace(0, std::move(sec));
    return st;
}

/// (c₁|−−̃⟩ + c₂|+−̃⟩ + c₃|−+̃⟩ + c₄|++̃⟩)|α⟩ truncated at n_max. Reduced mode keeps
/// only sectors I ≥ 1 and does not renormalize.
inline QuantumState initial_state_coherent(const InitialSpecCoherent& spec, int n_max,
                                           CoherentMode mode = CoherentMode::exact,
                                           double tolerance = 1e-12) {
    const auto q = coherent_amplitudes({spec.alpha, n_max, tolerance});
    const auto c = spec.weights();
    const auto weight_of = [&](const BasisState& s) -> cplx {
        const std::size_t k = s.spin == Level::minus ? (s.isospin == Level::minus ? 0 : 2)
                                                     : (s.isospin == Level::minus ? 1 : 3);
        return c[k] * q[static_cast<std::size_t>(s.n)];
    };

    QuantumState st;
    st.n_max = n_max;
    const int first = mode == CoherentMode::exact ? -1 : 1;
    for (int I = first; I <= n_max + 1; ++I) {
        SectorAmplitudes sec{enumerate_sector(I, n_max), {}};
        if (sec.basis.size() == 0) continue;
        sec.amplitudes.resize(static_cast<Eigen::Index>(sec.basis.size()));
        for (std::size_t k = 0; k < sec.basis.size(); ++k)
            sec.amplitudes(static_cast<Eigen::Index>(k)) = weight_of(sec.basis.states[k]);
        st.sectors.emplace(I, std::move(sec));
    }
    return st;
}

/// Sector generator used by the propagator; callable as (excitation, n_max) -> Matrix.
struct ModelSectors {
    ModelParams params;

    Matrix operator()(int excitation, int n_max) const {
        return truncated_sector_hamiltonian(excitation, params, n_max).matrix;
    }
};

/// exp(−iHt) on every populated sector, with the sector eigendecompositions
/// computed once so that many sample times are cheap.
template <class SectorBuilder = ModelSectors>
class SectorPropagator {
public:
    SectorPropagator(QuantumState initial, SectorBuilder builder)
        : initial_(std::move(initial)), builder_(std::move(builder)) {
        for (const auto& [I, sec] : initial_.sectors) {
            const bool complete = sector_is_complete(I, initial_.n_max);
            if (!complete && sec.amplitudes.squaredNorm() > kTruncationTolerance) {
                throw TruncationError("sector I=" + std::to_string(I) + " is cut by n_max=" +
                                          std::to_string(initial_.n_max) + " but carries weight " +
                                          std::to_string(sec.amplitudes.squaredNorm()) + "; need n_max >= " +
                                          std::to_string(I + 1),
                                      I + 1);
            }
            Eigen::SelfAdjointEigenSolver<Matrix> es(builder_(I, initial_.n_max));
            if (es.info() != Eigen::Success)
                throw std::runtime_error("eigendecomposition failed in sector " + std::to_string(I));
            Mode m;
            m.energies = es.eigenvalues();
            m.vectors = es.eigenvectors();
            m.projected = m.vectors.adjoint() * sec.amplitudes;
            modes_.emplace(I, std::move(m));
        }
    }

    /// State at initial.time + t.
    QuantumState at(double t) const {
        QuantumState out = initial_;
        out.time = initial_.time + t;
        for (auto& [I, sec] : out.sectors) {
            const Mode& m = modes_.at(I);
            Vector phased(m.projected.size());
            for (Eigen::Index k = 0; k < phased.size(); ++k)
                phased(k) = std::polar(1.0, -m.energies(k) * t) * m.projected(k);
            sec.amplitudes = m.vectors * phased;
        }
        return out;
    }

    /// ⟨H⟩ with the propagator's own generator.
    double energy(const QuantumState& st) const {
        double e = 0.0;
        for (const auto& [I, sec] : st.sectors)
            e += (sec.amplitudes.adjoint() * builder_(I, st.n_max) * sec.amplitudes)(0, 0).real();
        return e;
    }

    const QuantumState& initial() const { return initial_; }

private:
    struct Mode {
        Eigen::VectorXd energies;
        Matrix vectors;
        Vector projected;
    };

    QuantumState initial_;
    SectorBuilder builder_;
    std::map<int, Mode> modes_;
};

inline QuantumState evolve(const QuantumState& state, const ModelParams& p, double t) {
    p.validate();
    return SectorPropagator<ModelSectors>(state, ModelSectors{p}).at(t);
}

/// ⟨I⟩ = Σ_I I · (weight in sector I).
inline double expectation_excitation(const QuantumState& st) {
    double e = 0.0;
    for (const auto& [I, sec] : st.sectors) e += I * sec.amplitudes.squaredNorm();
    return e;
}

inline double expectation_energy(const QuantumState& st, const ModelParams& p) {
    const ModelSectors h{p};
    double e = 0.0;
    for (const auto& [I, sec] : st.sectors)
        e += (sec.amplitudes.adjoint() * h(I, st.n_max) * sec.amplitudes)(0, 0).real();
    return e;
}

/// Analytic (C₁, C₂, C₃) for the I = 0 sector with η = χ and mc² = γ,
/// starting from (0, sin θ, cos θ).
inline std::array<cplx, 3> closed_form_case1(double theta, const ModelParams& p, double t) {
    const double scale = std::max({1.0, std::abs(p.eta), std::abs(p.gamma)});
    if (std::abs(p.eta - p.chi) > 1e-12 * scale || std::abs(p.mc2 - p.gamma) > 1e-12 * scale)
        throw std::domain_error("closed form requires eta == chi and mc2 == gamma");
    p.validate();

    // Symmetric combination (|+−̃⟩+|−+̃⟩)/√2 couples to |−−̃,1⟩ with √2 η;
    // the antisymmetric one is a zero-energy dark state.
    const double g = p.gamma;
    const double omega = std::sqrt(g * g + 2.0 * p.eta * p.eta);
    const double bright = (std::sin(theta) + std::cos(theta)) / std::sqrt(2.0);
    const double dark = (std::sin(theta) - std::cos(theta)) / std::sqrt(2.0);
    const cplx i{0.0, 1.0};
    const cplx phase = std::polar(1.0, g * t);
    const double s = std::sin(omega * t) / omega;
    const double co = std::cos(omega * t);

    const cplx c1 = -i * std::sqrt(2.0) * p.eta * s * phase * bright;
    const cplx sym = phase * (co - i * g * s) * bright;
    return {c1, (sym + dark) / std::sqrt(2.0), (sym - dark) / std::sqrt(2.0)};
}

}  // namespace dmo
