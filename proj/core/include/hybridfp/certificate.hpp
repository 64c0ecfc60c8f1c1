// SPDX-License-Identifier: MIT
#pragma once

#include <utility>
#include <vector>

#include "hybridfp/dfunction.hpp"

namespace hybridfp {

/// Numerically checked record of the hypotheses that make the product map
/// x |-> F(x)*G(x) a nonlinear contraction on the ball of radius r:
///   - contraction condition: Theta(r_i) < r_i on a log-spaced scan of (0, r],
///   - ball condition: M_F * M_G <= r (so the product maps the ball into itself).
/// A failed condition is data, never an exception; only non-finite Theta values
/// are an error (InvalidCertificateError).
struct ContractionCertificate {
    double M_F = 0.0;            ///< bound of ||F(x)|| over the ball
    double M_G = 0.0;            ///< bound of ||G(x)|| over the ball
    DFunction theta;             ///< combined comparison function Theta
    double r = 0.0;              ///< ball radius
    std::vector<std::pair<double, double>> scan;  ///< (r_i, Theta(r_i)) samples
    bool ball_condition = false;
    bool contraction_condition = false;

    /// Recompute both booleans from the stored fields (consistency check).
    [[nodiscard]] bool recheck() const;
};

/// Fills the scan (>= num_samples log-spaced points of (0, r]) and the two
/// condition booleans. Requires M_F, M_G >= 0, r > 0 and Theta evaluable;
/// throws InvalidCertificateError if Theta produces a non-finite value.
[[nodiscard]] ContractionCertificate check_certificate(double M_F, double M_G,
                                                       const DFunction& theta, double r,
                                                       int num_samples = 1000);

}  // namespace hybridfp
