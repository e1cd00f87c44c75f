#ifndef CALABI_HYPERBOLIC_HPP
#define CALABI_HYPERBOLIC_HPP

#include <vector>

namespace calabi {

/// Generating curve of a rotational surface of hyperbolic type, sampled
/// over x with turning angle z (u' = tanh z).  The first integral
/// cosh(z) u^{alpha+1} = k is conserved; k = u0^{alpha+1} at the apex.
struct HyperbolicProfile {
    double alpha = 0.0;
    double u0 = 1.0;
    double k = 1.0;
    std::vector<double> x, u, z;
    double halfwidth = 0.0;  // Lambda for alpha+1 > 0, +inf otherwise

    std::size_t size() const { return x.size(); }
};

/// Integrates du/dx = tanh z, dz/dx = -(1+alpha)/u from u(0)=u0, z(0)=0,
/// mirrored about x = 0.  For alpha+1 > 0 the tail is continued in the z
/// variable via the first integral (u = (k/cosh z)^{1/(alpha+1)} exactly)
/// down to u ~ 1e-8*u0; alpha = -1 returns the straight line.
HyperbolicProfile hyperbolic_profile(double alpha, double u0, double x_extent, double h);

/// Half-width of the maximal domain for alpha+1 > 0:
/// Lambda = u0/(alpha+1) * integral_0^inf (cosh t)^{-1/(alpha+1)} dt,
/// by adaptive Simpson with an exponential tail bound.  Returns +inf for
/// alpha+1 < 0; rejects alpha = -1.
double domain_halfwidth(double alpha, double u0);

/// Closed form K = (alpha+1) k^2 / u^{2 alpha + 4}.
double hyperbolic_gauss_curvature(double alpha, double k, double u);

enum class Completeness { Complete, Incomplete };

/// Convex bowls of hyperbolic type (alpha < -1) are complete iff
/// alpha >= -2; rejects alpha >= -1.
Completeness completeness_classifier(double alpha);

/// Max |dz/dx + (1+alpha)/u| over uniformly spaced interior samples,
/// dz/dx by central differences (the arc-length form of the equation has
/// an extra 1/cosh(z) which the x-parametrization absorbs).
double hyperbolic_pde_residual(const HyperbolicProfile& p);

}  // namespace calabi

#endif
