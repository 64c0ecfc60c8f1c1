// SPDX-License-Identifier: MIT
//
// Tests for the contraction certificate: scan structure, condition semantics,
// validation, and hand-computed bound values for the decaying-forcing
// benchmark data (both the passing radius and a forcing large enough to break
// the contraction condition).

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "hybridfp/certificate.hpp"
#include "hybridfp/errors.hpp"

namespace hybridfp {
namespace {

// Hand-computed certificate data for the decaying-forcing problem
// (f = b / (1 + a e^{-b} t), g = a e^{-x}, Gamma = b (sup + 3/4), a = 1/10,
// b = 1/4, ball radius 3/4):
//   M_F          = 1/4                         (alpha = 0, sup f = f(0) = b)
//   ||gamma||_L1 = a e^{3/4} e^{-1}            (integral of a e^{3/4}(1-e^{-t}))
//   Theta(t)     = (M_F delta L_Gamma + M_F ||gamma||_L1) t
//                = (1/4 + M_F a e^{-1/4}) t    with delta = 4, L_Gamma = 1/4
//   M_G          = delta (L_Gamma r + Gamma(0)) + ||gamma|| rho psi(r) + rho ||g(.,0)||
//                = 4 (3/16 + 3/16) + a e^{3/4}(1 - e^{-1}) (3/4) + 1/10
struct DecayData {
    static constexpr double a = 0.1;
    static constexpr double r = 0.75;
    static constexpr double M_F = 0.25;

    static double gamma_l1(double scale) { return scale * std::exp(0.75) * std::exp(-1.0); }
    static double theta_slope(double scale) { return 0.25 + M_F * gamma_l1(scale); }
    static double M_G(double scale) {
        const double gamma_sup = scale * std::exp(0.75) * (1.0 - std::exp(-1.0));
        return 4.0 * (0.25 * 0.75 + 0.25 * 0.75) + gamma_sup * 0.75 + scale;
    }
};

TEST(Certificate, DecayingForcingDataSatisfiesBothConditions) {
    const double slope = DecayData::theta_slope(DecayData::a);
    EXPECT_NEAR(slope, 0.2694701, 1e-6);  // strictly below 1 => contraction
    DFunction theta([slope](double t) { return slope * t; }, "slope * t");

    ContractionCertificate cert =
        check_certificate(DecayData::M_F, DecayData::M_G(DecayData::a), theta, DecayData::r);
    EXPECT_NEAR(cert.M_F * cert.M_G, 0.425, 1e-3);  // well inside the 3/4 ball
    EXPECT_TRUE(cert.ball_condition);
    EXPECT_TRUE(cert.contraction_condition);
    EXPECT_TRUE(cert.recheck());
}

TEST(Certificate, FiftyfoldForcingBreaksTheContractionCondition) {
    // Scaling the forcing to a = 5 drives the Theta slope past 1, so
    // Theta(s) >= s on every scan point: the certificate must report failure.
    const double slope = DecayData::theta_slope(5.0);
    EXPECT_GT(slope, 1.0);
    DFunction theta([slope](double t) { return slope * t; }, "slope * t");

    ContractionCertificate cert =
        check_certificate(DecayData::M_F, DecayData::M_G(5.0), theta, DecayData::r);
    EXPECT_FALSE(cert.contraction_condition);
    EXPECT_FALSE(cert.ball_condition);  // M_G also grows past r / M_F
    EXPECT_TRUE(cert.recheck());        // failure is stored consistently
}

TEST(Certificate, ScanCoversSixDecadesUpToTheRadius) {
    ContractionCertificate cert =
        check_certificate(1.0, 1.0, identity_dfunction(), 2.0, 1000);
    ASSERT_GE(cert.scan.size(), 1000u);
    EXPECT_NEAR(cert.scan.front().first, 2.0e-6, 1e-12);
    EXPECT_DOUBLE_EQ(cert.scan.back().first, 2.0);
    for (std::size_t i = 1; i < cert.scan.size(); ++i)
        EXPECT_LT(cert.scan[i - 1].first, cert.scan[i].first);
}

TEST(Certificate, ContractionRequiresStrictInequalityEverywhere) {
    // Theta = identity gives Theta(s) = s: NOT a contraction (strict < fails).
    ContractionCertificate at_boundary =
        check_certificate(0.5, 0.5, identity_dfunction(), 1.0);
    EXPECT_FALSE(at_boundary.contraction_condition);

    DFunction almost([](double t) { return 0.999999 * t; }, "0.999999 t");
    ContractionCertificate below = check_certificate(0.5, 0.5, almost, 1.0);
    EXPECT_TRUE(below.contraction_condition);
}

TEST(Certificate, BallConditionAllowsEquality) {
    // M_F * M_G == r maps the ball into itself (non-strict inequality).
    ContractionCertificate cert =
        check_certificate(2.0, 0.5, zero_dfunction(), 1.0);
    EXPECT_TRUE(cert.ball_condition);
    ContractionCertificate outside =
        check_certificate(2.0, 0.5001, zero_dfunction(), 1.0);
    EXPECT_FALSE(outside.ball_condition);
}

TEST(Certificate, FailedConditionsAreDataNotExceptions) {
    DFunction expanding([](double t) { return 2.0 * t; }, "2t");
    EXPECT_NO_THROW({
        ContractionCertificate cert = check_certificate(3.0, 3.0, expanding, 1.0);
        EXPECT_FALSE(cert.ball_condition);
        EXPECT_FALSE(cert.contraction_condition);
    });
}

TEST(Certificate, RejectsMalformedInputs) {
    EXPECT_THROW((void)check_certificate(-1.0, 1.0, zero_dfunction(), 1.0), InvalidArgumentError);
    EXPECT_THROW((void)check_certificate(1.0, -1.0, zero_dfunction(), 1.0), InvalidArgumentError);
    EXPECT_THROW((void)check_certificate(1.0, 1.0, zero_dfunction(), 0.0), InvalidArgumentError);
    EXPECT_THROW((void)check_certificate(1.0, 1.0, zero_dfunction(), 1.0, 1),
                 InvalidArgumentError);
}

TEST(Certificate, NonFiniteThetaIsAnError) {
    DFunction bad([](double t) { return t > 0.5 ? std::numeric_limits<double>::quiet_NaN()
                                                : t; },
                  "nan tail");
    EXPECT_THROW((void)check_certificate(1.0, 1.0, bad, 1.0), InvalidCertificateError);
}

}  // namespace
}  // namespace hybridfp
