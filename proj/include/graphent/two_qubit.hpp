#pragma once

#include <array>

namespace graphent {

// Closed forms for one isolated edge acting on two copies of
// sqrt(1-p)|0> + e^{i·phase} sqrt(p)|1>. Both endpoints share the same
// reduced state, so each function describes either one.

/// Squared Hilbert-Schmidt distance between an endpoint's reduced state and
/// I/2:  1/4 - 2p² + 4p³ - 2p⁴ + 2(1-p)²p² cos 2θ.
double hs_distance_sq_analytic(double p, double theta);

/// Reduced-state eigenvalues (λ1 <= λ2),
/// λ_j = ½[(-1)^j sqrt(1 - 16p²(1-p)² sin²θ) + 1].
std::array<double, 2> reduced_eigenvalues_analytic(double p, double theta);

/// Endpoint von Neumann entropy (natural log) on the line p = 1/2:
///   ln(2/|sin θ|) + (|cos θ|/2) ln[(1-|cos θ|)/(1+|cos θ|)],
/// returning the limit 0 when |sin θ| < 1e-12.
double entropy_at_half_p(double theta);

}  // namespace graphent
