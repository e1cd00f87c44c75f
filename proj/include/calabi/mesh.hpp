#ifndef CALABI_MESH_HPP
#define CALABI_MESH_HPP

#include "calabi/grid.hpp"
#include "calabi/hyperbolic.hpp"
#include "calabi/radial.hpp"

#include <array>
#include <vector>

namespace calabi {

/// Structured parametric triangle mesh: vertices laid out rows x cols
/// (row = profile sample, col = rotation/translation parameter), with
/// optional column wrap for full turns.  K carries per-vertex Gauss
/// curvature attributes when the builder knows them.
struct SurfaceMesh {
    int rows = 0, cols = 0;
    bool wrap_cols = false;
    Signature signature = Signature::Euclidean;
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<double, 3>> normals;
    std::vector<std::array<int, 3>> triangles;
    Field K;

    std::size_t vidx(int i, int j) const { return static_cast<std::size_t>(i) * cols + j; }
};

/// Full-turn revolution (x cos t, x sin t, u) of a radial profile, or
/// (lambda cos t, lambda sin t, theta) of a transformed curve.  Vertex
/// count is exactly n_samples * n_t; degenerate faces (apex ring) skipped.
SurfaceMesh elliptic_revolve(const RadialProfile& p, int n_t);
SurfaceMesh elliptic_revolve(const TransformedCurve& c, int n_t);

/// Hyperbolic-rotation orbit surface (x, u sinh t, u cosh t) with exact
/// normals and closed-form K attributes.
SurfaceMesh hyperbolic_revolve(const HyperbolicProfile& p, double t0, double t1, int n_t);

/// Euclidean partner surface of a hyperbolic profile (alpha != -1):
/// (-k u' cosh^{a+1}t/(a+1), k Int_0^t cosh^a, u^{a+1} cosh^{a+1}t/(a+1));
/// the t-quadrature is cumulative trapezoid anchored at t = 0.
SurfaceMesh hyperbolic_partner(const HyperbolicProfile& p, double t0, double t1, int n_t);

/// Grim Reaper closed forms: lambda = 0 gives
/// (-y/u0, 2 arctan(tanh(t/2)), log(u0 cosh t)); lambda = sinh(z0) != 0 the
/// tilted variant.
SurfaceMesh grim_reaper(double lambda, double u0, double y0, double y1, double t0, double t1,
                        int n);

/// The ruled maximal source surface
/// (x, (tanh(z0) x + u0) sinh t, (tanh(z0) x + u0) cosh t).
SurfaceMesh ruled_maximal_surface(double z0, double u0, double x0, double x1, double t0,
                                  double t1, int n);

struct MeshCurvature {
    Field K;
    Mask valid;
};

/// Finite-difference Gauss curvature of a structured mesh in its index
/// parametrization (K is reparametrization-invariant): Euclidean
/// det(II)/det(I), Lorentzian -det(II)/det(I) with the timelike normal.
MeshCurvature mesh_gauss_curvature(const SurfaceMesh& m);

}  // namespace calabi

#endif
