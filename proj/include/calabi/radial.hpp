#ifndef CALABI_RADIAL_HPP
#define CALABI_RADIAL_HPP

#include "calabi/grid.hpp"
#include "calabi/weights.hpp"

#include <vector>

namespace calabi {

enum class ProfileKind { Bowl, Winglike };

/// Right-hand-side forcing for the Lorentzian radial equation
/// u''/(1-u'^2) = f(u) - u'/r.
enum class ForcingKind { One, AlphaOverU };

struct Forcing {
    ForcingKind kind = ForcingKind::One;
    double alpha = 0.0;
    double operator()(double u) const;
};

/// Sampled rotationally symmetric generating curve.  Euclidean profiles are
/// arc-length parametrized with turning angle z (x' = cos z, u' = sin z);
/// Lorentzian profiles are radius-parametrized (s = x = r) and z stores the
/// hyperbolic angle, u' = tanh z, so the light-cone approach stays
/// representable long after tanh z rounds to 1.
struct RadialProfile {
    WeightFunction weight;  // Euclidean side
    Forcing forcing;        // Lorentzian side
    Signature side = Signature::Euclidean;
    ProfileKind kind = ProfileKind::Bowl;
    std::vector<double> s, x, u, z;
    int neck_index = -1;  // winglike: sample where x' = 0
    int min_index = -1;   // Lorentzian winglike, down branch: interior minimum

    std::size_t size() const { return s.size(); }
};

/// 1 - tanh(q) without catastrophic cancellation.
double lightcone_deficit(double q);

RadialProfile bowl_profile(const WeightFunction& w, double u0, double s_max, double h);
RadialProfile winglike_profile(const WeightFunction& w, double x1, double u1, double s_max,
                               double h);

RadialProfile lorentz_bowl_profile(const Forcing& f, double a, double r_max, double h);

enum class LightconeBranch { Down, Up };  // u'(0) = -1 / +1
RadialProfile lorentz_winglike_profile(const Forcing& f, double a, LightconeBranch branch,
                                       double r_max, double h);

/// The generating curve of the dual surface: lambda = e^{phi(u)} x cos z,
/// theta = theta(u); slope stores d theta/d lambda = sin z.
struct TransformedCurve {
    std::vector<double> lambda, theta, slope;
    ProfileKind source_kind = ProfileKind::Bowl;
    std::vector<int> singular;
};

TransformedCurve transform_profile(const RadialProfile& p);

/// Samples the profile as a height field u(r), r = sqrt(x^2+y^2), by cubic
/// Hermite interpolation in radius (the exact radial slope is known at every
/// sample).  Nodes outside the sampled radius range are masked invalid.
/// Throws if the requested branch is not a graph over radius.
GraphSurface profile_to_graph(const RadialProfile& p, const Grid2D& grid);
GraphSurface profile_to_graph(const TransformedCurve& c, const Grid2D& grid, Signature sig);

}  // namespace calabi

#endif
