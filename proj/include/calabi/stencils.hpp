#ifndef CALABI_STENCILS_HPP
#define CALABI_STENCILS_HPP

#include "calabi/grid.hpp"

namespace calabi {

/// First and second finite-difference derivatives of a grid field.
/// Central second-order stencils at interior nodes, one-sided at segment
/// ends; nodes that used a one-sided stencil are flagged in `boundary`.
/// Nodes whose stencil would touch an invalid input node are cleared in
/// `valid`.
struct DerivativeFields {
    Field fx, fy, fxx, fxy, fyy;
    Mask valid;
    Mask boundary;
};

DerivativeFields gradient_and_hessian(const Grid2D& g, const Field& f, const Mask& mask = {});

/// Marks a node when it, or any 4-neighbor, is invalid or boundary-flagged.
/// Derivatives of derived fields must skip these: the one-sided stencil's
/// different truncation constant next door breaks second-order convergence.
Mask dilate_boundary(const Grid2D& g, const Mask& valid, const Mask& boundary);

/// Max |field| over nodes with valid[idx]; skips boundary-flagged nodes
/// unless include_boundary is set.
double masked_max(const Grid2D& g, const Field& field, const Mask& valid, const Mask& boundary,
                  bool include_boundary = false);
double masked_rms(const Grid2D& g, const Field& field, const Mask& valid, const Mask& boundary,
                  bool include_boundary = false);

}  // namespace calabi

#endif
