// hilbert.hpp — spin ⊗ isospin ⊗ Fock basis, excitation sectors, coherent amplitudes

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmo {

using cplx = std::complex<double>;

enum class Level : int { plus = +1, minus = -1 };

inline int sign_of(Level l) { return static_cast<int>(l); }
inline char label_of(Level l) { return l == Level::plus ? '+' : '-'; }

/// Thrown when an amplitude would need Fock states above the truncation level.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, int required_n_max)
        : std::runtime_error(what), required_n_max_(required_n_max) {}

    int required_n_max() const noexcept { return required_n_max_; }

private:
    int required_n_max_;
};

/// |spin, isospin, n⟩ where `spin` is the Dirac two-level system, `isospin`
/// the external field and `n` the occupation of the right-chiral mode.
struct BasisState {
    Level spin{Level::minus};
    Level isospin{Level::minus};
    int n{0};

    friend bool operator==(const BasisState&, const BasisState&) = default;

    std::string to_string() const {
        return std::string("|") + label_of(spin) + label_of(isospin) + "~," + std::to_string(n) + ">";
    }
};

/// Eigenvalue of I = n_r + (σ_z + σ̃_z)/2.
inline int excitation_of(const BasisState& s) {
    return s.n + (sign_of(s.spin) + sign_of(s.isospin)) / 2;
}

struct SectorBasis {
    int excitation{-1};
    std::vector<BasisState> states;

    std::size_t size() const { return states.size(); }

    /// Position of `s` in this sector, or -1.
    int index_of(const BasisState& s) const {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (states[i] == s) return static_cast<int>(i);
        return -1;
    }
};

/// Full (untruncated) sector in the canonical order:
///   I = -1 : |−−̃,0⟩
///   I =  0 : |−−̃,1⟩ |+−̃,0⟩ |−+̃,0⟩
///   I ≥  1 : |−−̃,I+1⟩ |+−̃,I⟩ |−+̃,I⟩ |++̃,I−1⟩
inline SectorBasis canonical_sector(int excitation) {
    if (excitation < -1)
        throw std::domain_error("excitation sector must be >= -1, got " + std::to_string(excitation));
    SectorBasis b;
    b.excitation = excitation;
    const int I = excitation;
    if (I == -1) {
        b.states = {{Level::minus, Level::minus, 0}};
    } else if (I == 0) {
        b.states = {{Level::minus, Level::minus, 1},
                    {Level::plus, Level::minus, 0},
                    {Level::minus, Level::plus, 0}};
    } else {
        b.states = {{Level::minus, Level::minus, I + 1},
                    {Level::plus, Level::minus, I},
                    {Level::minus, Level::plus, I},
                    {Level::plus, Level::plus, I - 1}};
    }
    return b;
}

/// Canonical sector with every state whose Fock index exceeds n_max removed.
inline SectorBasis enumerate_sector(int excitation, int n_max) {
    SectorBasis full = canonical_sector(excitation);
    SectorBasis kept;
    kept.excitation = excitation;
    for (const auto& s : full.states)
        if (s.n <= n_max) kept.states.push_back(s);
    return kept;
}

inline bool sector_is_complete(int excitation, int n_max) {
    return enumerate_sector(excitation, n_max).size() == canonical_sector(excitation).size();
}

// Flat Kronecker layout spin ⊗ isospin ⊗ Fock(0..n_max) with |+⟩ before |−⟩.
inline std::size_t flat_dimension(int n_max) { return 4 * static_cast<std::size_t>(n_max + 1); }

inline std::size_t flat_index(const BasisState& s, int n_max) {
    const std::size_t spin = s.spin == Level::plus ? 0 : 1;
    const std::size_t iso = s.isospin == Level::plus ? 0 : 1;
    return (spin * 2 + iso) * static_cast<std::size_t>(n_max + 1) + static_cast<std::size_t>(s.n);
}

inline BasisState flat_state(std::size_t index, int n_max) {
    const std::size_t fock = static_cast<std::size_t>(n_max + 1);
    const std::size_t block = index / fock;
    return {block / 2 == 0 ? Level::plus : Level::minus,
            block % 2 == 0 ? Level::plus : Level::minus,
            static_cast<int>(index % fock)};
}

struct CoherentSpec {
    cplx alpha{0.0, 0.0};
    int n_max{60};
    double tolerance{1e-12};
};

/// Σ_{n>n_max} |q_n|², summed by continuing the recurrence past n_max.
inline double coherent_tail(cplx alpha, int n_max) {
    const double a2 = std::norm(alpha);
    double w = std::exp(-a2);  // |q_0|²
    for (int n = 0; n < n_max; ++n) w *= a2 / (n + 1);
    double tail = 0.0;
    for (int n = n_max; n < n_max + 100000; ++n) {
        w *= a2 / (n + 1);
        tail += w;
        if (n + 1 > a2 && w < 1e-30 * (tail > 0 ? tail : 1.0)) break;
        if (w == 0.0) break;
    }
    return tail;
}

/// Smallest truncation whose tail weight is below `tolerance`.
inline int required_n_max(cplx alpha, double tolerance = 1e-12) {
    int n = 0;
    while (coherent_tail(alpha, n) >= tolerance) ++n;
    return n;
}

/// q_n = exp(−|α|²/2) αⁿ/√n! for n = 0..n_max, via q_{n+1} = q_n α/√(n+1).
inline std::vector<cplx> coherent_amplitudes(const CoherentSpec& spec) {
    if (spec.n_max < 0) throw std::domain_error("n_max must be non-negative");
    if (const double tail = coherent_tail(spec.alpha, spec.n_max); tail >= spec.tolerance) {
        const int need = required_n_max(spec.alpha, spec.tolerance);
        throw TruncationError("coherent state tail " + std::to_string(tail) + " exceeds tolerance at n_max=" +
                                  std::to_string(spec.n_max) + "; need n_max >= " + std::to_string(need),
                              need);
    }
    std::vector<cplx> q(static_cast<std::size_t>(spec.n_max) + 1);
    q[0] = std::exp(-0.5 * std::norm(spec.alpha));
    for (int n = 0; n < spec.n_max; ++n)
        q[n + 1] = q[n] * spec.alpha / std::sqrt(static_cast<double>(n + 1));
    return q;
}

}  // namespace dmo
