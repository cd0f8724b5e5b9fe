// observables.hpp — isospin reduced density matrix, von Neumann entropy, inversion

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "dmo/dynamics.hpp"
#include "dmo/hilbert.hpp"

namespace dmo {

/// Isospin state after tracing out the Dirac spin and the chiral mode.
/// `trace` is the raw trace before normalization (below 1 in reduced mode).
struct ReducedDensityMatrix {
    double rho_ee{0.0};
    double rho_gg{0.0};
    cplx rho_eg{0.0, 0.0};
    double trace{1.0};
};

struct BlochVector {
    double sx{0.0};
    double sy{0.0};
    double sz{0.0};

    double length() const { return std::sqrt(sx * sx + sy * sy + sz * sz); }
};

class PositivityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Partial trace over spin and Fock mode, normalized to unit trace.
/// Sums run over sectors in ascending order.
inline ReducedDensityMatrix reduce_isospin(const QuantumState& st) {
    double ee = 0.0;
    double gg = 0.0;
    cplx eg{0.0, 0.0};
    for (const auto& [I, sec] : st.sectors) {
        for (std::size_t k = 0; k < sec.basis.size(); ++k) {
            const BasisState& s = sec.basis.states[k];
            const cplx a = sec.amplitudes(static_cast<Eigen::Index>(k));
            if (s.isospin == Level::plus) {
                ee += std::norm(a);
                eg += a * std::conj(st.amplitude({s.spin, Level::minus, s.n}));
            } else {
                gg += std::norm(a);
            }
        }
    }
    ReducedDensityMatrix rho;
    rho.trace = ee + gg;
    if (rho.trace <= 0.0) throw std::domain_error("cannot reduce a zero state");
    rho.rho_ee = ee / rho.trace;
    rho.rho_gg = gg / rho.trace;
    rho.rho_eg = eg / rho.trace;
    return rho;
}

inline BlochVector bloch(const ReducedDensityMatrix& rho) {
    return {2.0 * rho.rho_eg.real(), 2.0 * rho.rho_eg.imag(), rho.rho_ee - rho.rho_gg};
}

inline double inversion(const ReducedDensityMatrix& rho) { return rho.rho_ee - rho.rho_gg; }

/// Eigenvalues λ± = ½ ± ½|Bloch vector|, largest first.
inline std::pair<double, double> eigenvalues(const ReducedDensityMatrix& rho, double tol = 1e-9) {
    double r = bloch(rho).length();
    if (r > 1.0 + tol)
        throw PositivityError("Bloch vector length " + std::to_string(r) + " exceeds 1");
    if (r > 1.0) r = 1.0;
    return {0.5 + 0.5 * r, 0.5 - 0.5 * r};
}

/// S = −λ₊ ln λ₊ − λ₋ ln λ₋ with 0 ln 0 = 0.
inline double entropy(const ReducedDensityMatrix& rho) {
    const auto [lp, lm] = eigenvalues(rho);
    const auto term = [](double l) { return l > 0.0 ? -l * std::log(l) : 0.0; };
    return term(lp) + term(lm);
}

}  // namespace dmo
