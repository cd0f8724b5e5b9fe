#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "dmo/dynamics.hpp"

using namespace dmo;
using std::numbers::pi;

namespace {

constexpr auto P = Level::plus;
constexpr auto M = Level::minus;

double max_diff(const QuantumState& a, const QuantumState& b) {
    double worst = 0.0;
    for (const auto& [I, sec] : a.sectors)
        worst = std::max(worst, (sec.amplitudes - b.sectors.at(I).amplitudes).cwiseAbs().maxCoeff());
    return worst;
}

}  // namespace

TEST(Initial, NumberState) {
    const auto s0 = initial_state_number({0.0});
    EXPECT_DOUBLE_EQ(s0.amplitude({M, P, 0}).real(), 1.0);
    EXPECT_EQ(std::abs(s0.amplitude({P, M, 0})), 0.0);

    const auto s90 = initial_state_number({pi / 2});
    EXPECT_DOUBLE_EQ(s90.amplitude({P, M, 0}).real(), 1.0);
    EXPECT_LT(std::abs(s90.amplitude({M, P, 0})), 1e-16);

    const auto s45 = initial_state_number({pi / 4});
    EXPECT_NEAR(s45.amplitude({P, M, 0}).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s45.amplitude({M, P, 0}).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(s45.sectors.size(), 1u);
    EXPECT_EQ(std::abs(s45.amplitude({M, M, 1})), 0.0);
}

TEST(Initial, CoherentWeights) {
    const InitialSpecCoherent spec{pi / 4, pi / 2, {std::sqrt(2.0), 0.0}};
    const auto c = spec.weights();
    EXPECT_NEAR(c[0], 0.0, 1e-16);
    EXPECT_NEAR(c[1], 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(c[2], 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(c[3], 0.0, 1e-16);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> a(-10, 10);
    for (int k = 0; k < 50; ++k) {
        const auto w = InitialSpecCoherent{a(rng), a(rng), {}}.weights();
        EXPECT_NEAR(w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3], 1.0, 1e-14);
    }
}

TEST(Initial, CoherentVacuumIsGroundState) {
    const auto st = initial_state_coherent({0.0, 0.0, {0.0, 0.0}}, 10);
    EXPECT_DOUBLE_EQ(st.amplitude({M, M, 0}).real(), 1.0);
    EXPECT_DOUBLE_EQ(st.norm_squared(), 1.0);
}

TEST(Initial, CoherentAmplitudeLayout) {
    const InitialSpecCoherent spec{0.4, 1.1, {0.9, 0.0}};
    const int n_max = 40;
    const auto st = initial_state_coherent(spec, n_max);
    const auto q = coherent_amplitudes({spec.alpha, n_max});
    const auto c = spec.weights();
    for (int n = 0; n <= 10; ++n) {
        EXPECT_NEAR(std::abs(st.amplitude({M, M, n}) - c[0] * q[n]), 0.0, 1e-16);
        EXPECT_NEAR(std::abs(st.amplitude({P, M, n}) - c[1] * q[n]), 0.0, 1e-16);
        EXPECT_NEAR(std::abs(st.amplitude({M, P, n}) - c[2] * q[n]), 0.0, 1e-16);
        EXPECT_NEAR(std::abs(st.amplitude({P, P, n}) - c[3] * q[n]), 0.0, 1e-16);
    }
    // B-labelling of sector I = n + 1.
    const auto& b = st.sectors.at(3).amplitudes;
    EXPECT_NEAR(std::abs(b(0) - c[0] * q[4]), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(b(1) - c[1] * q[3]), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(b(2) - c[2] * q[3]), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(b(3) - c[3] * q[2]), 0.0, 1e-16);
    EXPECT_NEAR(st.norm_squared(), 1.0 - coherent_tail(spec.alpha, n_max), 1e-14);
}

TEST(Initial, ReducedModeDropsLowSectors) {
    const InitialSpecCoherent spec{0.4, 1.1, {1.2, 0.0}};
    const auto exact = initial_state_coherent(spec, 60);
    const auto reduced = initial_state_coherent(spec, 60, CoherentMode::reduced);
    EXPECT_FALSE(reduced.sectors.contains(-1));
    EXPECT_FALSE(reduced.sectors.contains(0));
    const double dropped = exact.sectors.at(-1).amplitudes.squaredNorm() + exact.sectors.at(0).amplitudes.squaredNorm();
    EXPECT_GT(dropped, 0.0);
    EXPECT_NEAR(reduced.norm_squared(), exact.norm_squared() - dropped, 1e-15);
}

TEST(Evolve, ZeroTimeIsIdentity) {
    const auto st = initial_state_coherent({0.3, 0.8, {1.1, 0.0}}, 40);
    EXPECT_LT(max_diff(evolve(st, {1, 0.7, 0.3, 1.1}, 0.0), st), 1e-15);
}

TEST(Evolve, ResonantCaseOneTrigonometric) {
    const ModelParams p{1, 1, 0, 0};
    const auto psi0 = initial_state_number({pi / 2});
    const cplx i{0, 1};
    for (double t : {0.0, 0.3, 1.7, 4.0, 11.5}) {
        const auto st = evolve(psi0, p, t);
        const auto& c = st.sectors.at(0).amplitudes;
        const double r = std::sqrt(2.0);
        EXPECT_LT(std::abs(c(0) - (-i * std::sin(r * t) / r)), 1e-13);
        EXPECT_LT(std::abs(c(1) - (std::cos(r * t) + 1) / 2), 1e-13);
        EXPECT_LT(std::abs(c(2) - (std::cos(r * t) - 1) / 2), 1e-13);
    }
}

TEST(Evolve, GeneralSectorZeroAgainstMatrixExponential) {
    // exp(−iHt)v at 40 digits: η=1, χ=0.7, mc²=0.3, γ=1.1, θ=0.7, t=2.5.
    const auto st = evolve(initial_state_number({0.7}), {1, 0.7, 0.3, 1.1}, 2.5);
    const auto& c = st.sectors.at(0).amplitudes;
    EXPECT_LT(std::abs(c(0) - cplx(-0.45317082918281174574, 0.17687261478765044981)), 1e-13);
    EXPECT_LT(std::abs(c(1) - cplx(0.27724880023116034119, -0.13748969014988056195)), 1e-13);
    EXPECT_LT(std::abs(c(2) - cplx(-0.67047679707803031413, -0.46695056501604108884)), 1e-13);
    EXPECT_DOUBLE_EQ(st.time, 2.5);
}

TEST(Evolve, FourLevelSectorAgainstMatrixExponential) {
    // Sector I = 3, uniform start (½,½,½,½), same parameters, t = 1.3.
    QuantumState st;
    st.n_max = 10;
    st.sectors.emplace(3, SectorAmplitudes{enumerate_sector(3, 10), Vector::Constant(4, 0.5)});
    const auto out = evolve(st, {1, 0.7, 0.3, 1.1}, 1.3);
    const auto& b = out.sectors.at(3).amplitudes;
    EXPECT_LT(std::abs(b(0) - cplx(0.14004863523134334444, 0.19290183774306369762)), 1e-13);
    EXPECT_LT(std::abs(b(1) - cplx(0.13726065195221629072, 0.24908394305833651857)), 1e-13);
    EXPECT_LT(std::abs(b(2) - cplx(-0.13283267632477389298, 0.57421453066135893421)), 1e-13);
    EXPECT_LT(std::abs(b(3) - cplx(-0.23176113563017968948, 0.6791258295710106201)), 1e-13);
}

TEST(Evolve, UnitarityAndCompositionProperty) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(0, 2 * pi);
    std::uniform_real_distribution<double> par(-4, 4);
    std::uniform_real_distribution<double> tt(0, 100);
    for (int k = 0; k < 20; ++k) {
        const ModelParams p{std::abs(par(rng)) + 0.05, std::abs(par(rng)), par(rng), par(rng)};
        const auto psi0 = initial_state_coherent({ang(rng), ang(rng), {std::abs(par(rng)) / 2, 0}}, 60);
        const double t1 = tt(rng);
        const double t2 = tt(rng);
        const auto a = evolve(evolve(psi0, p, t1), p, t2);
        const auto b = evolve(psi0, p, t1 + t2);
        EXPECT_LT(std::abs(a.norm() - psi0.norm()), 1e-10);
        EXPECT_LT(max_diff(a, b), 1e-9);
        EXPECT_NEAR(a.time, t1 + t2, 1e-12);
    }
}

TEST(Evolve, SectorSupportIsConserved) {
    const auto psi0 = initial_state_number({0.3}, 10);
    const auto st = evolve(psi0, {1, 0.5, 1, 2}, 7.0);
    ASSERT_EQ(st.sectors.size(), 1u);
    EXPECT_EQ(std::abs(st.amplitude({M, M, 0})), 0.0);
    EXPECT_EQ(std::abs(st.amplitude({P, P, 0})), 0.0);
}

TEST(Evolve, ConservesExcitationAndEnergy) {
    const ModelParams p{1, 1.3, 0.4, 2.2};
    const auto psi0 = initial_state_coherent({0.9, 0.2, {1.3, 0.0}}, 60);
    const double I0 = expectation_excitation(psi0);
    const double E0 = expectation_energy(psi0, p);
    const SectorPropagator<> prop(psi0, ModelSectors{p});
    for (double t = 0; t <= 100; t += 7.3) {
        const auto st = prop.at(t);
        EXPECT_NEAR(expectation_excitation(st), I0, 1e-10);
        EXPECT_NEAR(expectation_energy(st, p), E0, 1e-10);
    }
}

TEST(Evolve, RefusesHeavilyTruncatedSectors) {
    QuantumState st;
    st.n_max = 4;
    SectorAmplitudes edge{enumerate_sector(4, 4), {}};
    edge.amplitudes = Vector::Constant(static_cast<Eigen::Index>(edge.basis.size()), 0.5);
    st.sectors.emplace(4, edge);
    try {
        evolve(st, {1, 1, 0, 0}, 1.0);
        FAIL() << "expected TruncationError";
    } catch (const TruncationError& e) {
        EXPECT_EQ(e.required_n_max(), 5);
    }
}

TEST(ClosedForm, KnownPoints) {
    const ModelParams p{1, 1, 0, 0};
    const cplx i{0, 1};
    const auto a = closed_form_case1(pi / 2, p, pi / std::sqrt(2.0));
    EXPECT_LT(std::abs(a[0]), 1e-15);
    EXPECT_LT(std::abs(a[1]), 1e-15);
    EXPECT_LT(std::abs(a[2] + 1.0), 1e-15);

    const auto b = closed_form_case1(pi / 2, p, pi / (2 * std::sqrt(2.0)));
    EXPECT_LT(std::abs(b[0] + i / std::sqrt(2.0)), 1e-15);
    EXPECT_LT(std::abs(b[1] - 0.5), 1e-15);
    EXPECT_LT(std::abs(b[2] + 0.5), 1e-15);
}

TEST(ClosedForm, RejectsUnequalCouplings) {
    EXPECT_THROW(closed_form_case1(0.1, {1, 0.9, 0, 0}, 1.0), std::domain_error);
    EXPECT_THROW(closed_form_case1(0.1, {1, 1, 0.5, 0}, 1.0), std::domain_error);
}

TEST(ClosedForm, AgreesWithSectorEvolution) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ang(0, 2 * pi);
    std::uniform_real_distribution<double> det(0, 4);
    std::uniform_real_distribution<double> cpl(0.2, 3);
    for (int d = 0; d < 5; ++d) {
        const double theta = ang(rng);
        const double g = det(rng);
        const double eta = cpl(rng);
        const ModelParams p{eta, eta, g, g};
        const SectorPropagator<> prop(initial_state_number({theta}), ModelSectors{p});
        for (int k = 0; k < 100; ++k) {
            const double t = 0.5 * k / eta;
            const auto st = prop.at(t);
            const auto& c = st.sectors.at(0).amplitudes;
            const auto e = closed_form_case1(theta, p, t);
            for (int j = 0; j < 3; ++j) EXPECT_LT(std::abs(c(j) - e[static_cast<std::size_t>(j)]), 1e-10);
        }
    }
}
