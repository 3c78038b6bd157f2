#include <heatansatz/closed_forms.hpp>
#include <heatansatz/residuals.hpp>
#include <heatansatz/solution.hpp>

#include <oracles.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace heatansatz;

namespace
{

RationalH inverse_t() { return RationalH({MobiusParam(Rational(1), Rational(0))}); }
RationalH two_pole() { return RationalH({MobiusParam(Rational(1), Rational(0)), MobiusParam(Rational(1), Rational(1))}); }

AnsatzSpec zero_spec(int d) { return AnsatzSpec::reduced(0, Parity(d), GradedPoly(Family::X, 1)); }
AnsatzSpec one_spec(int d) { return AnsatzSpec::reduced(1, Parity(d), GradedPoly(Family::X, 2)); }

std::vector<Rational> sample_times()
{
    std::vector<Rational> out;
    for (int i = 0; i < 10; ++i) {
        out.push_back(oracle::frac(11 * i + 12, 5));
    }
    return out;
}

Field2D as_field(const SeriesSolution& s)
{
    return [&s](double z, double t) { return s(z, t); };
}

} // namespace

TEST(RofT, ClosedFormPowers)
{
    const auto time = std::make_shared<ClosedFormTime>(inverse_t());
    for (double t : {0.25, 1.0, 3.5}) {
        EXPECT_NEAR(std::exp(r_of_t(*time, Parity(0), 0, t)), std::pow(t, -0.5), 1e-13);
        EXPECT_NEAR(std::exp(r_of_t(*time, Parity(1), 0, t)), std::pow(t, -1.5), 1e-13);
    }
    const auto flat = std::make_shared<ClosedFormTime>(RationalH({MobiusParam(Rational(0), Rational(1))}));
    EXPECT_DOUBLE_EQ(r_of_t(*flat, Parity(1), Rational(3, 2), 7.0), 1.5);
}

TEST(RofT, RealOnBothSidesOfPole)
{
    const auto time = std::make_shared<ClosedFormTime>(inverse_t());
    EXPECT_NEAR(std::exp(r_of_t(*time, Parity(0), 0, -4.0)), 0.5, 1e-14);
    EXPECT_THROW(r_of_t(*time, Parity(0), 0, 0.0), DomainError);
}

TEST(AssemblePsi, GaussianHeatKernel)
{
    const SeriesSolution s = assemble_psi(zero_spec(0), inverse_t(), 0, 12);
    for (unsigned k = 2; k <= 12; ++k) {
        EXPECT_TRUE(s.phi()[k].is_zero());
    }
    for (double t : {0.5, 1.0, 2.0}) {
        for (double z : {-0.5, 0.0, 0.3, 1.0}) {
            EXPECT_NEAR(s(z, t), std::exp(-z * z / (2 * t)) / std::sqrt(t), 1e-12);
        }
    }
}

TEST(AssemblePsi, BoundaryValueIsExpR)
{
    const SeriesSolution s = assemble_psi(one_spec(0), two_pole(), Rational(1, 3), 10);
    for (double t : {1.5, 2.0, 4.0}) {
        EXPECT_NEAR(s(0.0, t), std::exp(s.r(t)), 1e-14);
    }
}

TEST(AssemblePsi, RejectsShortTruncation)
{
    EXPECT_THROW(assemble_psi(zero_spec(0), inverse_t(), 0, 1), std::invalid_argument);
}

TEST(AssemblePsi, OneAnsatzMatchesClosedFormTermByTerm)
{
    for (int d = 0; d <= 1; ++d) {
        const SeriesSolution s = assemble_psi(one_spec(d), two_pole(), 0, 10);
        const OneAnsatz f = closed_form_1ansatz(Parity(d), MobiusParam(Rational(1), Rational(0)),
                                                MobiusParam(Rational(1), Rational(1)), 0);
        for (const Rational& t : sample_times()) {
            const auto c = s.taylor_coefficients(t);
            for (unsigned k = 0; k <= 10; ++k) {
                EXPECT_EQ(c[k], f.series_coefficient(k, t)) << "k = " << k;
            }
        }
        for (double t : {1.5, 2.5}) {
            for (double z : {0.2, 0.7}) {
                EXPECT_NEAR(s(z, t), f(z, t), 1e-10);
            }
        }
    }
}

TEST(AssemblePsi, TaylorMatchesBruteForceHeatSeries)
{
    // Profile-independent oracle evaluated at the jets of a profile solving D_2 = 0.
    for (int d = 0; d <= 1; ++d) {
        const auto a = oracle::heat_taylor(d, 10);
        const SeriesSolution s = assemble_psi(one_spec(d), two_pole(), 0, 10);
        for (const Rational& t : sample_times()) {
            const JetPoint jets = two_pole().jets(t, 12);
            const auto c = s.taylor_coefficients(t);
            for (unsigned k = 0; k <= 10; ++k) {
                EXPECT_EQ(c[k], poly_eval(a[k], jets));
            }
        }
    }
}

TEST(HeatResidualSeries, VanishesExactly)
{
    const auto t = sample_times();
    for (int d = 0; d <= 1; ++d) {
        EXPECT_EQ(heat_residual_series(assemble_psi(zero_spec(d), inverse_t(), 0, 10), t), 0);
        EXPECT_EQ(heat_residual_series(assemble_psi(one_spec(d), two_pole(), 0, 10), t), 0);
    }
}

TEST(HeatResidualSeries, DetectsPerturbedPhi2)
{
    const SeriesSolution good = assemble_psi(one_spec(0), two_pole(), 0, 10);
    PhiTable phi = good.phi();
    phi.entries[2] += parse_poly(Family::X, "x2", 2);
    const SeriesSolution bad(Parity(0), good.time_ptr(), 0, phi, 10);
    EXPECT_GT(heat_residual_series(bad, sample_times()), 0);
}

TEST(HeatResidualSeries, WrongProfileIsDetected)
{
    // Three poles do not solve D_2 = 0, so the 1-ansatz series breaks.
    const RationalH h({MobiusParam(Rational(1), Rational(0)), MobiusParam(Rational(1), Rational(1)),
                       MobiusParam(Rational(1), Rational(-1))});
    EXPECT_GT(heat_residual_series(assemble_psi(one_spec(0), h, 0, 6), sample_times()), 0);
}

TEST(Gauge, ZeroRateIsIdentity)
{
    const SeriesSolution s = assemble_psi(zero_spec(0), inverse_t(), 0, 10);
    const SeriesSolution g = gauge_transform(s, Gauge::from_rate([](double) { return 0.0; }, 1.0));
    for (double t : {0.5, 1.0, 2.0}) {
        EXPECT_DOUBLE_EQ(g(0.4, t), s(0.4, t));
    }
}

TEST(Gauge, ConstantRateSolvesLossyEquation)
{
    const ZeroAnsatz f = closed_form_0ansatz(Parity(0), MobiusParam(Rational(1), Rational(0)), 0);
    const double c = 0.7;
    const Gauge g = Gauge::from_rate([c](double) { return c; }, 1.0);
    const Field2D psi = [&](double z, double t) { return std::exp(-g.integral(t)) * f(z, t); };
    HeatResidualOptions opts;
    opts.loss_rate = g.rate;
    const GridSpec grid = GridSpec::uniform(-1, 1, 21, 0.5, 1.5, 5);
    EXPECT_LE(heat_residual_numeric(psi, grid, opts), 1e-5);
    EXPECT_GT(heat_residual_numeric(psi, grid), 1e-2);
}

TEST(Gauge, SeriesGaugeSolvesLossyEquation)
{
    const SeriesSolution s = assemble_psi(one_spec(1), two_pole(), 0, 14);
    const auto rate = [](double t) { return std::sin(t); };
    const SeriesSolution g = gauge_transform(s, Gauge::from_rate(rate, 2.0));
    HeatResidualOptions opts;
    opts.loss_rate = rate;
    const GridSpec grid = GridSpec::uniform(-0.5, 0.5, 11, 2.0, 3.0, 3);
    EXPECT_LE(heat_residual_numeric(as_field(g), grid, opts), 1e-5);
}

TEST(Gauge, MultiplierIndependentOfParity)
{
    const Gauge gauge = Gauge::constant(0.3, 1.0);
    const SeriesSolution e = assemble_psi(zero_spec(0), inverse_t(), 0, 6);
    const SeriesSolution o = assemble_psi(zero_spec(1), inverse_t(), 0, 6);
    const SeriesSolution eg = gauge_transform(e, gauge);
    const SeriesSolution og = gauge_transform(o, gauge);
    for (double t : {0.5, 2.0}) {
        EXPECT_NEAR(eg(0.3, t) / e(0.3, t), og(0.3, t) / o(0.3, t), 1e-14);
        EXPECT_NEAR(eg(0.3, t) / e(0.3, t), std::exp(-0.3 * (t - 1.0)), 1e-14);
    }
}

TEST(Rescale, HalfIsIdentity)
{
    const ZeroAnsatz f = closed_form_0ansatz(Parity(0), MobiusParam(Rational(1), Rational(0)), 0);
    const Field2D psi = [f](double z, double t) { return f(z, t); };
    const Field2D phi = rescale_to_mu(psi, 0.5);
    EXPECT_DOUBLE_EQ(phi(0.3, 1.2), psi(0.3, 1.2));
    EXPECT_THROW(rescale_to_mu(psi, 0.0), DomainError);
}

TEST(Rescale, SolvesGeneralDiffusion)
{
    const ZeroAnsatz f = closed_form_0ansatz(Parity(1), MobiusParam(Rational(1), Rational(0)), 0);
    const Field2D psi = [f](double z, double t) { return f(z, t); };
    const GridSpec grid = GridSpec::uniform(-1, 1, 21, 0.5, 1.5, 5);
    HeatResidualOptions opts;
    opts.mu = 1.0;
    EXPECT_LE(heat_residual_numeric(rescale_to_mu(psi, 1.0), grid, opts), 1e-5);
    EXPECT_GT(heat_residual_numeric(psi, grid, opts), 1e-2);
}

TEST(Rescale, BackwardEquation)
{
    const ZeroAnsatz f = closed_form_0ansatz(Parity(0), MobiusParam(Rational(1), Rational(1)), 0);
    const Field2D psi = [f](double z, double t) { return f(z, t); };
    const GridSpec grid = GridSpec::uniform(-1, 1, 21, 0.5, 1.5, 5);
    HeatResidualOptions opts;
    opts.mu = -1.0;
    EXPECT_LE(heat_residual_numeric(rescale_to_mu(psi, -1.0), grid, opts), 1e-5);
}

TEST(ColeHopf, ZeroAnsatzIsRational)
{
    for (int d = 0; d <= 1; ++d) {
        const SeriesSolution s = assemble_psi(zero_spec(d), RationalH({MobiusParam(Rational(3), Rational(2))}), 0, 10);
        const BurgersSolution b = cole_hopf(s);
        const auto v = b.laurent();
        for (const Rational& t : sample_times()) {
            for (const auto& [p, c] : v) {
                const Rational value = s.time().evaluate(c, t);
                if (p == -1) {
                    EXPECT_EQ(value, -d);
                } else if (p == 1) {
                    EXPECT_EQ(value, Rational(3) / (3 * t - 2));
                } else {
                    EXPECT_EQ(value, 0) << "power " << p;
                }
            }
        }
        EXPECT_EQ(v.count(-1), d == 1 ? 1U : 0U);
    }
}

TEST(ColeHopf, PureGaussianHasNoCorrections)
{
    const BurgersSolution b = cole_hopf(assemble_psi(zero_spec(0), inverse_t(), 0, 8));
    for (const auto& p : b.psi()) {
        EXPECT_TRUE(p.is_zero());
    }
    EXPECT_NEAR(b(0.7, 2.0), 0.35, 1e-15);
}

TEST(ColeHopf, LowestCorrectionEqualsPhi2)
{
    for (int d = 0; d <= 1; ++d) {
        const PhiTable phi = reduced_phi(1, GradedPoly(Family::X, 2), Parity(d), 8);
        const auto psi = burgers_psi_from_phi(phi);
        EXPECT_TRUE(psi[0].is_zero());
        EXPECT_TRUE(psi[1].is_zero());
        EXPECT_EQ(psi[2], phi[2]);
    }
}

TEST(ColeHopf, MatchesLogDerivativeOfClosedForm)
{
    for (int d = 0; d <= 1; ++d) {
        const BurgersSolution b = cole_hopf(assemble_psi(one_spec(d), two_pole(), 0, 14));
        const OneAnsatz f = closed_form_1ansatz(Parity(d), MobiusParam(Rational(1), Rational(0)),
                                                MobiusParam(Rational(1), Rational(1)), 0);
        for (double z : {0.1, 0.4, 0.8}) {
            for (double t : {2.0, 3.0}) {
                const double dz = 1e-5;
                const double fd = -(std::log(std::abs(f(z + dz, t))) - std::log(std::abs(f(z - dz, t)))) / (2 * dz);
                EXPECT_NEAR(b(z, t), fd, 1e-7);
                EXPECT_NEAR(b(z, t), f.burgers(z, t), 1e-10);
            }
        }
    }
}

TEST(ColeHopf, ViscosityScaling)
{
    const SeriesSolution s = assemble_psi(one_spec(0), two_pole(), 0, 12);
    const BurgersSolution half = cole_hopf(s);
    const BurgersSolution one = cole_hopf(s, Rational(1));
    EXPECT_NEAR(one(0.3, 1.25), 2.0 * half(0.3, 2.5), 1e-14);
    EXPECT_THROW(cole_hopf(s, Rational(0)), DomainError);
}

TEST(ColeHopf, OddPoleAtOrigin)
{
    const BurgersSolution b = cole_hopf(assemble_psi(zero_spec(1), inverse_t(), 0, 6));
    EXPECT_THROW(b(0.0, 1.0), DomainError);
    const GridSpec grid = GridSpec::uniform(-1, 1, 3, 1.0, 2.0, 2);
    EXPECT_THROW(burgers_residual_grid(b, 0.5, grid), DomainError);
}

TEST(Parity, SeriesAndBurgers)
{
    const GridSpec grid = GridSpec::uniform(0.05, 1.5, 30, 2.0, 4.0, 4);
    for (int d = 0; d <= 1; ++d) {
        const SeriesSolution s = assemble_psi(one_spec(d), two_pole(), 0, 10);
        const BurgersSolution b = cole_hopf(s);
        EXPECT_EQ(parity_defect(as_field(s), grid, d == 1 ? -1 : 1), 0.0);
        EXPECT_EQ(parity_defect([&b](double z, double t) { return b(z, t); }, grid, -1), 0.0);
        for (const auto& [p, c] : b.laurent()) {
            EXPECT_NE(p % 2, 0) << "even power " << p;
        }
    }
}

TEST(TrajectoryRoute, AgreesWithClosedForm)
{
    // Same 1-ansatz solution, with the state taken from an RK4 trajectory.
    const AnsatzSpec spec = one_spec(0);
    const RationalH h = two_pole();
    NumericTrajectory traj{integrate(make_field(spec), h.state(2.0, 2), 3.0, 1e-3)};
    const SeriesSolution numeric = assemble_psi(spec, traj, 0, 10);
    const SeriesSolution exact = assemble_psi(spec, h, 0, 10);
    for (double t : {2.0, 2.3337, 2.9}) {
        for (double z : {0.0, 0.5, 1.0}) {
            EXPECT_NEAR(numeric(z, t) / exact(z, t), std::exp(numeric.r(t) - exact.r(t)), 1e-8);
        }
        EXPECT_NEAR(numeric.h(t), exact.h(t), 1e-9);
        std::vector<double> one{t};
        EXPECT_LE(heat_residual_series(numeric, one), 1e-6);
    }
    EXPECT_THROW(numeric(0.0, 3.5), DomainError);
    EXPECT_THROW(numeric.taylor_coefficients(Rational(2)), std::logic_error);
}
