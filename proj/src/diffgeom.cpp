#include "calabi/diffgeom.hpp"

#include <cmath>
#include <stdexcept>

namespace calabi {

GeometryFields geometry(const GraphSurface& s) {
    const Grid2D& g = s.grid;
    const std::size_t n = g.size();
    GeometryFields out;
    out.grid = g;
    out.du = gradient_and_hessian(g, s.u, s.valid);
    out.W.assign(n, 0.0);
    out.Nx.assign(n, 0.0);
    out.Ny.assign(n, 0.0);
    out.Nz.assign(n, 0.0);
    out.E.assign(n, 0.0);
    out.F.assign(n, 0.0);
    out.G.assign(n, 0.0);
    out.H.assign(n, 0.0);
    out.K.assign(n, 0.0);
    out.valid = out.du.valid;
    out.boundary = out.du.boundary;

    std::size_t candidates = 0, dropped = 0;
    const bool lorentz = s.signature == Signature::Lorentzian;
    for (std::size_t k = 0; k < n; ++k) {
        if (!out.valid[k]) continue;
        ++candidates;
        const double ux = out.du.fx[k], uy = out.du.fy[k];
        const double uxx = out.du.fxx[k], uxy = out.du.fxy[k], uyy = out.du.fyy[k];
        if (!lorentz) {
            const double W = std::sqrt(1.0 + ux * ux + uy * uy);
            out.W[k] = W;
            out.Nx[k] = -ux / W;
            out.Ny[k] = -uy / W;
            out.Nz[k] = 1.0 / W;
            out.E[k] = 1.0 + ux * ux;
            out.F[k] = ux * uy;
            out.G[k] = 1.0 + uy * uy;
            const double Lu = (1.0 + ux * ux) * uyy + (1.0 + uy * uy) * uxx - 2.0 * ux * uy * uxy;
            out.H[k] = -Lu / (W * W * W);
            out.K[k] = (uxx * uyy - uxy * uxy) / (W * W * W * W);
        } else {
            const double q = 1.0 - ux * ux - uy * uy;
            if (!(q > 0.0)) {
                out.valid[k] = 0;
                ++dropped;
                continue;
            }
            const double W = std::sqrt(q);
            out.W[k] = W;
            out.Nx[k] = ux / W;
            out.Ny[k] = uy / W;
            out.Nz[k] = 1.0 / W;
            out.E[k] = 1.0 - ux * ux;
            out.F[k] = -ux * uy;
            out.G[k] = 1.0 - uy * uy;
            const double Lu = (1.0 - ux * ux) * uyy + (1.0 - uy * uy) * uxx + 2.0 * ux * uy * uxy;
            out.H[k] = Lu / (W * W * W);
            out.K[k] = -(uxx * uyy - uxy * uxy) / (W * W * W * W);
        }
    }
    if (lorentz && candidates > 0 && dropped * 10 > candidates)
        throw std::runtime_error("geometry: more than 10% of nodes violate the spacelike condition");
    return out;
}

double ResidualField::max_interior() const {
    return masked_max(grid, r, valid, boundary, false);
}

ResidualField pde_residual(const GraphSurface& s, const WeightFunction& w) {
    const Grid2D& g = s.grid;
    const std::size_t n = g.size();
    DerivativeFields du = gradient_and_hessian(g, s.u, s.valid);
    ResidualField out;
    out.grid = g;
    out.r.assign(n, 0.0);
    out.valid = du.valid;
    out.boundary = du.boundary;
    const bool lorentz = s.signature == Signature::Lorentzian;
    for (std::size_t k = 0; k < n; ++k) {
        if (!out.valid[k]) continue;
        const double u = s.u[k];
        if (!w.in_domain(u)) {
            out.valid[k] = 0;
            continue;
        }
        const double ux = du.fx[k], uy = du.fy[k];
        const double uxx = du.fxx[k], uxy = du.fxy[k], uyy = du.fyy[k];
        const double pd = w.phi_dot(u);
        if (!lorentz) {
            const double W2 = 1.0 + ux * ux + uy * uy;
            const double Lu = (1.0 + ux * ux) * uyy + (1.0 + uy * uy) * uxx - 2.0 * ux * uy * uxy;
            out.r[k] = Lu - pd * W2;
        } else {
            const double W2 = 1.0 - ux * ux - uy * uy;
            if (!(W2 > 0.0)) {
                out.valid[k] = 0;
                continue;
            }
            const double Lu = (1.0 - ux * ux) * uyy + (1.0 - uy * uy) * uxx + 2.0 * ux * uy * uxy;
            out.r[k] = Lu + pd * W2;
        }
    }
    return out;
}

}  // namespace calabi
