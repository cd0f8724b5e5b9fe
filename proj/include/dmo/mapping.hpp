// mapping.hpp — 2+1 Dirac–Moshinsky oscillator in position form vs. its Jaynes–Cummings form

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace dmo::mapping {

using Matrix = Eigen::MatrixXcd;

struct PhysicalParams {
    double m{1.0};
    double omega{1.0};
    double c{1.0};
    double hbar{1.0};

    void validate() const {
        if (!(m > 0.0) || !(c > 0.0) || !(hbar > 0.0) || !(omega >= 0.0))
            throw std::domain_error("physical parameters require m, c, hbar > 0 and omega >= 0");
    }
};

/// Coupling of the mapped Jaynes–Cummings Hamiltonian, 2√(m c² ω ħ).
inline double eta_from_physical(const PhysicalParams& p) {
    p.validate();
    return 2.0 * std::sqrt(p.m * p.c * p.c * p.omega * p.hbar);
}

/// Cartesian and chiral ladder operators on the triangular basis
/// {|n_x, n_y⟩ : n_x + n_y ≤ n_cut}. Position and momentum use the length
/// scale of `omega_basis`.
class OscillatorAlgebra2D {
public:
    OscillatorAlgebra2D(int n_cut, double m, double omega_basis, double hbar) : n_cut_(n_cut) {
        if (n_cut < 0) throw std::domain_error("n_cut must be non-negative");
        if (!(m > 0.0) || !(omega_basis > 0.0) || !(hbar > 0.0))
            throw std::domain_error("oscillator basis needs positive m, omega, hbar");
        for (int total = 0; total <= n_cut; ++total)
            for (int nx = total; nx >= 0; --nx) modes_.push_back({nx, total - nx});

        const auto dim = static_cast<Eigen::Index>(modes_.size());
        ax_ = Matrix::Zero(dim, dim);
        ay_ = Matrix::Zero(dim, dim);
        for (Eigen::Index j = 0; j < dim; ++j) {
            const auto [nx, ny] = modes_[static_cast<std::size_t>(j)];
            if (nx > 0) ax_(index_of(nx - 1, ny), j) = std::sqrt(static_cast<double>(nx));
            if (ny > 0) ay_(index_of(nx, ny - 1), j) = std::sqrt(static_cast<double>(ny));
        }
        const std::complex<double> i{0.0, 1.0};
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        ar_ = inv_sqrt2 * (ax_ + i * ay_);
        al_ = inv_sqrt2 * (ax_ - i * ay_);

        const double len = std::sqrt(hbar / (2.0 * m * omega_basis));
        const double mom = std::sqrt(m * omega_basis * hbar / 2.0);
        x_ = len * (ax_ + ax_.adjoint());
        y_ = len * (ay_ + ay_.adjoint());
        px_ = -i * mom * (ax_ - ax_.adjoint());
        py_ = -i * mom * (ay_ - ay_.adjoint());
    }

    int n_cut() const { return n_cut_; }
    Eigen::Index dim() const { return static_cast<Eigen::Index>(modes_.size()); }

    /// Total excitation n_x + n_y of basis vector `j`.
    int total(Eigen::Index j) const {
        const auto& m = modes_[static_cast<std::size_t>(j)];
        return m.nx + m.ny;
    }

    Eigen::Index index_of(int nx, int ny) const {
        const int t = nx + ny;
        return static_cast<Eigen::Index>(t * (t + 1) / 2 + (t - nx));
    }

    const Matrix& ax() const { return ax_; }
    const Matrix& ay() const { return ay_; }
    const Matrix& ar() const { return ar_; }
    const Matrix& al() const { return al_; }
    Matrix ar_dag() const { return ar_.adjoint(); }
    Matrix al_dag() const { return al_.adjoint(); }
    const Matrix& x() const { return x_; }
    const Matrix& y() const { return y_; }
    const Matrix& px() const { return px_; }
    const Matrix& py() const { return py_; }

    /// Indices with total excitation strictly below `bound`.
    std::vector<Eigen::Index> below(int bound) const {
        std::vector<Eigen::Index> out;
        for (Eigen::Index j = 0; j < dim(); ++j)
            if (total(j) < bound) out.push_back(j);
        return out;
    }

private:
    struct Mode {
        int nx;
        int ny;
    };

    int n_cut_;
    std::vector<Mode> modes_;
    Matrix ax_, ay_, ar_, al_, x_, y_, px_, py_;
};

namespace pauli {

inline Matrix x() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
    return m;
}
inline Matrix y() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = {0.0, -1.0};
    m(1, 0) = {0.0, 1.0};
    return m;
}
inline Matrix z() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}
/// |+⟩⟨−|, spin up is index 0.
inline Matrix raising() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}
inline Matrix lowering() { return raising().transpose(); }

}  // namespace pauli

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline OscillatorAlgebra2D algebra_for(const PhysicalParams& p, int n_cut) {
    p.validate();
    // ω = 0 has no natural length scale; any reference frequency spans the same space.
    const double omega_basis = p.omega > 0.0 ? p.omega : 1.0;
    return OscillatorAlgebra2D(n_cut, p.m, omega_basis, p.hbar);
}

/// Σ_j c α_j (p_j + i m ω β r_j) + m c² β with α₁ = −σ_y, α₂ = −σ_x, β = σ_z,
/// on spin ⊗ (2D Fock), spin index 0 = upper spinor component.
inline Matrix build_dmo_position_form(const PhysicalParams& p, int n_cut) {
    if (n_cut < 2) throw std::domain_error("n_cut must be >= 2");
    const auto alg = algebra_for(p, n_cut);
    const std::complex<double> i{0.0, 1.0};
    const Matrix alpha1 = -pauli::y();
    const Matrix alpha2 = -pauli::x();
    const Matrix beta = pauli::z();
    const Matrix id = Matrix::Identity(alg.dim(), alg.dim());
    const double mw = p.m * p.omega;

    Matrix h = p.c * (kron(alpha1, alg.px()) + kron(alpha2, alg.py()));
    h += p.c * i * mw * (kron(alpha1 * beta, alg.x()) + kron(alpha2 * beta, alg.y()));
    h += p.m * p.c * p.c * kron(beta, id);
    return h;
}

/// η(σ₊ â_r + σ₋ â_r†) + m c² σ_z on the same space as build_dmo_position_form.
inline Matrix build_jcm_form(const PhysicalParams& p, int n_cut) {
    if (n_cut < 2) throw std::domain_error("n_cut must be >= 2");
    const auto alg = algebra_for(p, n_cut);
    const double eta = eta_from_physical(p);
    const Matrix id = Matrix::Identity(alg.dim(), alg.dim());
    return eta * (kron(pauli::raising(), alg.ar()) + kron(pauli::lowering(), alg.ar_dag())) +
           p.m * p.c * p.c * kron(pauli::z(), id);
}

/// Row/column indices of spin ⊗ (2D Fock) whose Fock part has total excitation below `bound`.
inline std::vector<Eigen::Index> spinor_indices_below(const OscillatorAlgebra2D& alg, int bound) {
    std::vector<Eigen::Index> out;
    for (Eigen::Index s = 0; s < 2; ++s)
        for (auto j : alg.below(bound)) out.push_back(s * alg.dim() + j);
    return out;
}

inline Matrix restrict(const Matrix& m, const std::vector<Eigen::Index>& idx) {
    return m(idx, idx);
}

struct MappingReport {
    double max_interior_diff{std::numeric_limits<double>::infinity()};
    Eigen::Index interior_dim{0};
    double eta{0.0};

    bool ok(double tol = 1e-12) const { return interior_dim > 0 && max_interior_diff < tol; }
};

/// Entrywise comparison of the two Hamiltonians on states with n_x + n_y < n_cut − 1.
inline MappingReport verify_mapping(const PhysicalParams& p, int n_cut) {
    MappingReport r;
    r.eta = eta_from_physical(p);
    if (n_cut < 4) return r;

    const auto alg = algebra_for(p, n_cut);
    const auto idx = spinor_indices_below(alg, n_cut - 1);
    const Matrix diff = restrict(build_dmo_position_form(p, n_cut) - build_jcm_form(p, n_cut), idx);
    r.interior_dim = static_cast<Eigen::Index>(idx.size());
    r.max_interior_diff = diff.cwiseAbs().maxCoeff();
    return r;
}

}  // namespace dmo::mapping
