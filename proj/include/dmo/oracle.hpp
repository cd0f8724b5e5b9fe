// oracle.hpp — brute-force evolution on the full truncated space, for cross-checks

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "dmo/dynamics.hpp"
#include "dmo/hamiltonian.hpp"
#include "dmo/hilbert.hpp"

namespace dmo::oracle {

/// Edge amplitude (|ψ_i| with Fock n ≥ n_max − 2) allowed in a certified result.
inline constexpr double kEdgeThreshold = 1e-8;

struct DenseState {
    Vector vector;
    int n_max{0};
    bool certified{true};
};

/// Flat spin ⊗ isospin ⊗ Fock vector holding the amplitudes of `st`.
inline DenseState embed(const QuantumState& st) {
    DenseState d;
    d.n_max = st.n_max;
    d.vector = Vector::Zero(static_cast<Eigen::Index>(flat_dimension(st.n_max)));
    for (const auto& [I, sec] : st.sectors)
        for (std::size_t k = 0; k < sec.basis.size(); ++k)
            d.vector(static_cast<Eigen::Index>(flat_index(sec.basis.states[k], st.n_max))) =
                sec.amplitudes(static_cast<Eigen::Index>(k));
    return d;
}

inline double edge_amplitude(const DenseState& d) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < d.vector.size(); ++i)
        if (flat_state(static_cast<std::size_t>(i), d.n_max).n >= d.n_max - 2)
            worst = std::max(worst, std::abs(d.vector(i)));
    return worst;
}

/// exp(−i H_dense t) v by full Hermitian eigendecomposition of dense_hamiltonian.
inline DenseState dense_evolve(const DenseState& v, const ModelParams& p, double t) {
    p.validate();
    if (v.vector.size() != static_cast<Eigen::Index>(flat_dimension(v.n_max)))
        throw std::invalid_argument("dense state size does not match n_max");
    Eigen::SelfAdjointEigenSolver<Matrix> es(dense_hamiltonian(p, v.n_max));
    if (es.info() != Eigen::Success) throw std::runtime_error("dense eigendecomposition failed");

    Vector coeffs = es.eigenvectors().adjoint() * v.vector;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) coeffs(k) *= std::polar(1.0, -es.eigenvalues()(k) * t);

    DenseState out;
    out.n_max = v.n_max;
    out.vector = es.eigenvectors() * coeffs;
    out.certified = v.certified && edge_amplitude(v) < kEdgeThreshold && edge_amplitude(out) < kEdgeThreshold;
    return out;
}

/// max_i |a_i − e^{iφ} b_i| with φ maximizing Re⟨a|e^{iφ}b⟩.
inline double compare(const DenseState& a, const DenseState& b) {
    if (a.n_max != b.n_max || a.vector.size() != b.vector.size())
        throw std::invalid_argument("compare: dimension mismatch");
    const cplx overlap = a.vector.dot(b.vector);  // ⟨a|b⟩
    const cplx phase = std::abs(overlap) > 0.0 ? std::conj(overlap) / std::abs(overlap) : cplx{1.0, 0.0};
    return (a.vector - phase * b.vector).cwiseAbs().maxCoeff();
}

inline double expectation(const DenseState& d, const Matrix& op) {
    return (d.vector.adjoint() * op * d.vector)(0, 0).real();
}

}  // namespace dmo::oracle
