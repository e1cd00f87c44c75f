#ifndef CALABI_DIFFGEOM_HPP
#define CALABI_DIFFGEOM_HPP

#include "calabi/grid.hpp"
#include "calabi/stencils.hpp"
#include "calabi/weights.hpp"

#include <array>

namespace calabi {

/// Pointwise geometry of a height-field graph.  Euclidean graphs carry the
/// upward unit normal; Lorentzian (spacelike) graphs carry the future
/// timelike normal with <<N,N>> = -1.  The mean curvature is the scalar h
/// with H = h*N for the stored normal; the Lorentzian Gauss curvature is
/// the intrinsic one, K = -det(II)/det(I).
struct GeometryFields {
    Grid2D grid;
    Field W;             // Euclidean sqrt(1+|grad u|^2); Lorentzian sqrt(1-|grad u|^2)
    Field Nx, Ny, Nz;    // Gauss map components
    Field E, F, G;       // induced metric
    Field H;             // mean curvature scalar
    Field K;             // Gauss curvature
    DerivativeFields du; // the derivatives everything was built from
    Mask valid;
    Mask boundary;
};

/// Throws std::runtime_error when more than 10% of the otherwise valid
/// nodes of a Lorentzian input violate the spacelike condition.
GeometryFields geometry(const GraphSurface& s);

struct ResidualField {
    Grid2D grid;
    Field r;
    Mask valid;
    Mask boundary;
    double max_interior() const;
};

/// Residual of the governing graph PDE: Euclidean Lu - phi_dot(u) W^2,
/// Lorentzian (1-ux^2)uyy + (1-uy^2)uxx + 2 ux uy uxy + phi_dot(u) Wbar^2.
/// Heights outside the weight's domain invalidate the node.
ResidualField pde_residual(const GraphSurface& s, const WeightFunction& w);

}  // namespace calabi

#endif
