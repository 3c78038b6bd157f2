#include <heatansatz/closed_forms.hpp>
#include <heatansatz/solution.hpp>

#include <oracles.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace heatansatz;

TEST(ZeroAnsatz, BoundaryValues)
{
    const ZeroAnsatz even = closed_form_0ansatz(Parity(0), MobiusParam(Rational(1), Rational(0)), 0);
    EXPECT_DOUBLE_EQ(even(0.0, 1.0), 1.0);
    EXPECT_NEAR(even(0.0, 0.25), 2.0, 1e-15);
    const ZeroAnsatz odd = closed_form_0ansatz(Parity(1), MobiusParam(Rational(3), Rational(-1)), Rational(2));
    for (double t : {0.1, 1.0, 5.0}) {
        EXPECT_EQ(odd(0.0, t), 0.0);
    }
    EXPECT_THROW(even(0.3, 0.0), DomainError);
}

TEST(ZeroAnsatz, FlatProfileDropsPowerFactor)
{
    const ZeroAnsatz flat = closed_form_0ansatz(Parity(0), MobiusParam(Rational(0), Rational(1)), Rational(1));
    EXPECT_NEAR(flat(0.8, 3.0), std::exp(1.0), 1e-14);
}

TEST(ZeroAnsatz, MatchesSeriesThroughZ20)
{
    for (int d = 0; d <= 1; ++d) {
        const MobiusParam m(Rational(1), Rational(0));
        const ZeroAnsatz f = closed_form_0ansatz(Parity(d), m, 0);
        const SeriesSolution s =
            assemble_psi(AnsatzSpec::reduced(0, Parity(d), GradedPoly(Family::X, 1)), RationalH({m}), 0, 10);
        for (int i = 1; i <= 6; ++i) {
            const Rational t = oracle::frac(i, 3);
            const auto c = s.taylor_coefficients(t);
            for (unsigned k = 0; k <= 10; ++k) {
                EXPECT_EQ(c[k], f.series_coefficient(k, t));
            }
        }
        for (double z : {-0.9, 0.1, 0.6}) {
            EXPECT_NEAR(s(z, 2.0), f(z, 2.0), 1e-12);
        }
    }
}

TEST(ZeroAnsatz, BurgersImage)
{
    const ZeroAnsatz f = closed_form_0ansatz(Parity(1), MobiusParam(Rational(2), Rational(1)), 0);
    EXPECT_NEAR(f.burgers(0.5, 1.0), 2.0 * 0.5 / 1.0 - 2.0, 1e-15);
    EXPECT_THROW(f.burgers(0.0, 1.0), DomainError);
    const ZeroAnsatz g = closed_form_0ansatz(Parity(0), MobiusParam(Rational(2), Rational(1)), 0);
    EXPECT_NEAR(g.burgers(0.5, 1.0), 1.0, 1e-15);
}

TEST(ZeroAnsatz, MassIsConserved)
{
    const ZeroAnsatz f = closed_form_0ansatz(Parity(0), MobiusParam(Rational(1), Rational(0)), 0);
    auto mass = [&](double t) {
        const double a = -40.0;
        const double h = 1e-3;
        double sum = 0.0;
        for (int i = 0; i <= 80000; ++i) {
            sum += f(a + i * h, t);
        }
        return sum * h;
    };
    const double m1 = mass(0.5);
    EXPECT_NEAR(m1, std::sqrt(2 * M_PI), 1e-6);
    for (double t : {1.0, 2.0, 8.0}) {
        EXPECT_NEAR(mass(t), m1, 1e-6);
    }
}

TEST(GammaRatio, Examples)
{
    EXPECT_EQ(gamma_ratio_coeff(0, Parity(0)), 1);
    EXPECT_EQ(gamma_ratio_coeff(1, Parity(0)), Rational(4, 3));
    EXPECT_EQ(gamma_ratio_coeff(2, Parity(0)), Rational(8, 21));
    EXPECT_EQ(gamma_ratio_coeff(1, Parity(1)), Rational(4, 5));
    EXPECT_EQ(gamma_ratio_coeff(0, Parity(1)), 1);
}

TEST(GammaRatio, MatchesLogGamma)
{
    for (int d = 0; d <= 1; ++d) {
        const double a = 0.75 + 0.5 * d;
        for (unsigned m = 0; m <= 12; ++m) {
            const double expected = std::exp(std::lgamma(a) - std::lgamma(m + 1.0) - std::lgamma(m + a));
            EXPECT_NEAR(gamma_ratio_coeff(m, Parity(d)).get_d() / expected, 1.0, 1e-12);
        }
    }
}

TEST(OneAnsatz, PhiMatchesRecursion)
{
    for (int d = 0; d <= 1; ++d) {
        const PhiTable phi = reduced_phi(1, GradedPoly(Family::X, 2), Parity(d), 20);
        for (unsigned m = 0; m <= 10; ++m) {
            EXPECT_EQ(phi[2 * m], one_ansatz_phi(m, Parity(d)));
        }
    }
    EXPECT_EQ(one_ansatz_phi(2, Parity(0)), parse_poly(Family::X, "60*x2^2"));
}

TEST(OneAnsatz, Z4CoefficientSingleNonzeroPole)
{
    const OneAnsatz f = closed_form_1ansatz(Parity(0), MobiusParam(Rational(1), Rational(0)),
                                            MobiusParam(Rational(0), Rational(1)), 0);
    const Rational t(3);
    const Rational x2 = f.x2(t);
    EXPECT_EQ(x2, Rational(-1, 36));
    // exp(-r) psi = exp(-h z^2/2) Phi; strip the Gaussian part.
    const Rational h = f.h(t);
    const Rational gamma_part = f.series_coefficient(2, t) - h * h / 8;
    EXPECT_EQ(gamma_part, -x2 / 12);
    EXPECT_EQ(gamma_part, Rational(-2) * x2 / 24);
}

TEST(OneAnsatz, BoundaryValue)
{
    const OneAnsatz f = closed_form_1ansatz(Parity(0), MobiusParam(Rational(1), Rational(0)),
                                            MobiusParam(Rational(1), Rational(1)), Rational(1, 2));
    for (double t : {0.04, 0.5, 0.99, 1.01, 2.0}) {
        EXPECT_NEAR(f(0.0, t), std::pow(t, -0.25) * std::pow(std::abs(t - 1), -0.25) * std::exp(0.5), 1e-12);
    }
    const OneAnsatz single = closed_form_1ansatz(Parity(0), MobiusParam(Rational(1), Rational(0)),
                                                 MobiusParam(Rational(0), Rational(1)), 0);
    EXPECT_NEAR(single(0.0, 1.0 / 16), 2.0, 1e-14);
}

TEST(OneAnsatz, DegeneratePolesReduceToGaussian)
{
    for (int d = 0; d <= 1; ++d) {
        const MobiusParam m(Rational(2), Rational(3));
        const OneAnsatz f = closed_form_1ansatz(Parity(d), m, m, 0);
        EXPECT_EQ(f.x2(Rational(5)), 0);
        for (double t : {2.0, 4.0}) {
            const double p = 2.0 / (2.0 * t - 3.0);
            for (double z : {0.0, 0.5, 1.2}) {
                const double expected = std::pow(p, 2.0 * (1 + 2 * d) / 4.0) * std::exp(-0.5 * p * z * z) * (d ? z : 1.0);
                EXPECT_NEAR(f(z, t), expected, 1e-13);
            }
        }
    }
}

TEST(OneAnsatz, PolesAreRejected)
{
    const OneAnsatz f = closed_form_1ansatz(Parity(0), MobiusParam(Rational(1), Rational(0)),
                                            MobiusParam(Rational(1), Rational(1)), 0);
    EXPECT_THROW(f(0.1, 1.0), DomainError);
    EXPECT_THROW(f.x2(Rational(0)), DomainError);
}
