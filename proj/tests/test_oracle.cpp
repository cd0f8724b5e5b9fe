#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "dmo/oracle.hpp"
#include "dmo/selftest.hpp"

using namespace dmo;
using std::numbers::pi;

TEST(Oracle, ZeroTimeIsIdentity) {
    const auto d = oracle::embed(initial_state_coherent({0.3, 1.0, {1.0, 0}}, 30));
    const auto e = oracle::dense_evolve(d, {1, 0.5, 1, 2}, 0.0);
    EXPECT_LT((e.vector - d.vector).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_TRUE(e.certified);
}

TEST(Oracle, CompareIgnoresGlobalPhase) {
    const auto d = oracle::embed(initial_state_coherent({0.3, 1.0, {1.0, 0}}, 20));
    EXPECT_EQ(oracle::compare(d, d), 0.0);
    auto rotated = d;
    rotated.vector *= std::polar(1.0, 2.1);
    EXPECT_LT(oracle::compare(d, rotated), 1e-15);
    oracle::DenseState other = oracle::embed(initial_state_number({0.2}, 5));
    EXPECT_THROW(oracle::compare(d, other), std::invalid_argument);
}

TEST(Oracle, MatchesSectorsForFigureThreePreset) {
    const ModelParams p{1, 1, 0, 0};
    const auto psi0 = initial_state_coherent({pi / 4, pi / 2, {std::sqrt(2.0), 0}}, 40);
    const SectorPropagator<> prop(psi0, ModelSectors{p});
    const auto d0 = oracle::embed(psi0);
    for (double t : {0.5, 10.0, 25.0, 50.0}) {
        const auto dense = oracle::dense_evolve(d0, p, t);
        EXPECT_TRUE(dense.certified);
        EXPECT_LT(oracle::compare(oracle::embed(prop.at(t)), dense), 1e-8);
    }
}

TEST(Oracle, MatchesSectorsForNumberState) {
    const ModelParams p{1, 1, 0, 0};
    const auto psi0 = initial_state_number({pi / 2}, 10);
    const auto d0 = oracle::embed(psi0);
    for (double t : {1.0, 7.0, 19.0})
        EXPECT_LT(oracle::compare(oracle::embed(evolve(psi0, p, t)), oracle::dense_evolve(d0, p, t)), 1e-10);
}

TEST(Oracle, ConservesExcitation) {
    const int n_max = 40;
    const ModelParams p{1, 1.5, 2, 0.5};
    const auto d0 = oracle::embed(initial_state_coherent({1.0, 0.4, {1.4, 0}}, n_max));
    const Matrix I = constant_of_motion_matrix(n_max).cast<cplx>();
    const double I0 = oracle::expectation(d0, I);
    for (double t : {3.0, 30.0}) EXPECT_NEAR(oracle::expectation(oracle::dense_evolve(d0, p, t), I), I0, 1e-10);
}

TEST(Oracle, EdgeWeightClearsCertification) {
    QuantumState st;
    st.n_max = 6;
    st.sectors.emplace(3, SectorAmplitudes{enumerate_sector(3, 6), Vector::Constant(4, 0.5)});
    const auto d = oracle::dense_evolve(oracle::embed(st), {1, 1, 0, 0}, 2.0);
    EXPECT_FALSE(d.certified);
}

TEST(Selftest, DefaultRunPasses) {
    const auto rep = selftest::run();
    EXPECT_EQ(rep.checks.size(), 15u);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.params << " err=" << c.error;
    EXPECT_TRUE(rep.ok());
}

TEST(Selftest, ZetaSignFlipIsCaught) {
    selftest::Config cfg;
    cfg.sector_override = selftest::flip_zeta_sign;
    const auto rep = selftest::run(cfg);
    EXPECT_FALSE(rep.ok());
    int failed = 0;
    for (const auto& c : rep.checks) failed += c.passed ? 0 : 1;
    EXPECT_GT(failed, 0);
}

TEST(Selftest, EmptyConfigurationIsNotAPass) {
    selftest::Config cfg;
    cfg.oracle_draws = 0;
    cfg.closed_form_draws = 0;
    const auto rep = selftest::run(cfg);
    EXPECT_TRUE(rep.checks.empty());
    EXPECT_FALSE(rep.ok());
}
