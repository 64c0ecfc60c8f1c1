// SPDX-License-Identifier: MIT
#include "hybridfp/certificate.hpp"

#include <cmath>

#include "hybridfp/errors.hpp"

namespace hybridfp {

bool ContractionCertificate::recheck() const {
    if (!(M_F * M_G <= r)) return ball_condition == false;
    bool contraction = true;
    for (const auto& [ri, ti] : scan) {
        if (!(ti < ri)) {
            contraction = false;
            break;
        }
    }
    return ball_condition == true && contraction == contraction_condition;
}

ContractionCertificate check_certificate(double M_F, double M_G, const DFunction& theta,
                                         double r, int num_samples) {
    if (!(M_F >= 0.0) || !(M_G >= 0.0)) {
        throw InvalidArgumentError("check_certificate: M_F and M_G must be nonnegative");
    }
    if (!(r > 0.0)) {
        throw InvalidArgumentError("check_certificate: r must be positive");
    }
    if (num_samples < 2) {
        throw InvalidArgumentError("check_certificate: need at least 2 scan samples");
    }

    ContractionCertificate cert;
    cert.M_F = M_F;
    cert.M_G = M_G;
    cert.theta = theta;
    cert.r = r;
    cert.ball_condition = (M_F * M_G <= r);

    // Log-spaced scan of (0, r]: six decades below r up to r itself.
    constexpr double kDecades = 6.0;
    cert.scan.reserve(static_cast<std::size_t>(num_samples));
    cert.contraction_condition = true;
    for (int i = 0; i < num_samples; ++i) {
        const double e =
            -kDecades * (1.0 - static_cast<double>(i) / static_cast<double>(num_samples - 1));
        const double ri = r * std::pow(10.0, e);
        const double ti = theta(ri);
        if (!std::isfinite(ti)) {
            throw InvalidCertificateError("check_certificate: Theta produced a non-finite value");
        }
        cert.scan.emplace_back(ri, ti);
        if (!(ti < ri)) cert.contraction_condition = false;
    }
    return cert;
}

}  // namespace hybridfp
