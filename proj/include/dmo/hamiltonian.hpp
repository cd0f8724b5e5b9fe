// hamiltonian.hpp — coupled Hamiltonian H̃ = η(σ₊a + σ₋a†) + mc²σ_z + χ(σ̃₊a + σ̃₋a†) + γσ̃_z

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "dmo/hilbert.hpp"
#include "dmo/mapping.hpp"

namespace dmo {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Couplings in units with ħ = 1. Time is measured in 1/η when eta = 1.
struct ModelParams {
    double eta{1.0};   // spin–mode coupling
    double chi{1.0};   // isospin–mode coupling
    double mc2{0.0};   // spin detuning
    double gamma{0.0}; // isospin detuning

    double zeta() const { return mc2 + gamma; }
    double xi() const { return mc2 - gamma; }

    void validate() const {
        if (!(eta > 0.0)) throw std::domain_error("eta must be > 0");
        if (!(chi >= 0.0)) throw std::domain_error("chi must be >= 0");
        if (!std::isfinite(mc2) || !std::isfinite(gamma)) throw std::domain_error("detunings must be finite");
    }
};

struct SectorHamiltonian {
    int excitation{-1};
    Matrix matrix;
};

/// Hamiltonian restricted to the canonical basis of sector I.
inline SectorHamiltonian sector_hamiltonian(int excitation, const ModelParams& p) {
    if (excitation < -1)
        throw std::domain_error("excitation sector must be >= -1, got " + std::to_string(excitation));
    const double z = p.zeta();
    const double x = p.xi();
    SectorHamiltonian h;
    h.excitation = excitation;
    if (excitation == -1) {
        h.matrix = Matrix::Constant(1, 1, -z);
    } else if (excitation == 0) {
        h.matrix = Matrix::Zero(3, 3);
        h.matrix(0, 0) = -z;
        h.matrix(1, 1) = x;
        h.matrix(2, 2) = -x;
        h.matrix(0, 1) = h.matrix(1, 0) = p.eta;
        h.matrix(0, 2) = h.matrix(2, 0) = p.chi;
    } else {
        const double n = excitation - 1;
        const double l1 = p.eta * std::sqrt(n + 1);
        const double l2 = p.eta * std::sqrt(n + 2);
        const double l3 = p.chi * std::sqrt(n + 1);
        const double l4 = p.chi * std::sqrt(n + 2);
        h.matrix = Matrix::Zero(4, 4);
        h.matrix(0, 0) = -z;
        h.matrix(1, 1) = x;
        h.matrix(2, 2) = -x;
        h.matrix(3, 3) = z;
        h.matrix(0, 1) = h.matrix(1, 0) = l2;
        h.matrix(0, 2) = h.matrix(2, 0) = l4;
        h.matrix(1, 3) = h.matrix(3, 1) = l3;
        h.matrix(2, 3) = h.matrix(3, 2) = l1;
    }
    return h;
}

/// Sector Hamiltonian projected onto the states that survive truncation at n_max.
inline SectorHamiltonian truncated_sector_hamiltonian(int excitation, const ModelParams& p, int n_max) {
    auto h = sector_hamiltonian(excitation, p);
    const auto full = canonical_sector(excitation);
    std::vector<Eigen::Index> kept;
    for (std::size_t i = 0; i < full.size(); ++i)
        if (full.states[i].n <= n_max) kept.push_back(static_cast<Eigen::Index>(i));
    if (kept.size() != full.size()) h.matrix = Matrix(h.matrix(kept, kept));
    return h;
}

namespace detail {

inline Matrix fock_annihilation(int n_max) {
    Matrix a = Matrix::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

}  // namespace detail

/// H̃ on spin ⊗ isospin ⊗ Fock(0..n_max), assembled from operator products.
/// Layout matches flat_index().
inline Matrix dense_hamiltonian(const ModelParams& p, int n_max) {
    if (n_max < 2) throw std::domain_error("n_max must be >= 2");
    using mapping::kron;
    namespace pauli = mapping::pauli;
    const Matrix a = detail::fock_annihilation(n_max);
    const Matrix ad = a.adjoint();
    const Matrix id2 = Matrix::Identity(2, 2);
    const Matrix idf = Matrix::Identity(n_max + 1, n_max + 1);

    const auto spin_op = [&](const Matrix& s, const Matrix& f) { return kron(s, kron(id2, f)); };
    const auto iso_op = [&](const Matrix& s, const Matrix& f) { return kron(id2, kron(s, f)); };

    Matrix h = p.eta * (spin_op(pauli::raising(), a) + spin_op(pauli::lowering(), ad));
    h += p.mc2 * spin_op(pauli::z(), idf);
    h += p.chi * (iso_op(pauli::raising(), a) + iso_op(pauli::lowering(), ad));
    h += p.gamma * iso_op(pauli::z(), idf);
    return h;
}

/// diag(n + (s_z + s̃_z)/2) in the flat layout.
inline Eigen::MatrixXd constant_of_motion_matrix(int n_max) {
    if (n_max < 0) throw std::domain_error("n_max must be >= 0");
    const auto dim = static_cast<Eigen::Index>(flat_dimension(n_max));
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        m(i, i) = excitation_of(flat_state(static_cast<std::size_t>(i), n_max));
    return m;
}

}  // namespace dmo
