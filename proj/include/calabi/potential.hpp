#ifndef CALABI_POTENTIAL_HPP
#define CALABI_POTENTIAL_HPP

#include "calabi/grid.hpp"
#include "calabi/stencils.hpp"
#include "calabi/weights.hpp"

namespace calabi {

/// Prescribed Hessian of the convex potential.  Euclidean source:
/// ((1+ux^2), ux uy, (1+uy^2)) e^phi(u)/W; Lorentzian source:
/// ((1-ux^2), -ux uy, (1-uy^2)) e^phi(u)/Wbar.
struct HessianFields {
    Grid2D grid;
    Field Hxx, Hxy, Hyy;
    Mask valid;
    Mask boundary;
};

HessianFields hessian_fields(const GraphSurface& s, const WeightFunction& w);

/// Gradient (Px, Py) of the potential recovered by trapezoidal path
/// integration, gauged to zero at the lower-left valid node.
/// compat_residual holds the per-node two-path disagreement.
struct PotentialGradient {
    Grid2D grid;
    Field Px, Py;
    Field compat_residual;
    Mask valid;
};

PotentialGradient integrate_potential_gradient(const HessianFields& h);

/// Max over nodes of the integrability defect of the Hessian triple:
/// max(|d_y Hxx - d_x Hxy|, |d_y Hxy - d_x Hyy|), central differences.
/// Vanishes (to discretization error) exactly when the source solves the
/// governing PDE.
double hessian_curl_max(const HessianFields& h);

}  // namespace calabi

#endif
