#include "calabi/potential.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace calabi {

HessianFields hessian_fields(const GraphSurface& s, const WeightFunction& w) {
    const Grid2D& g = s.grid;
    const std::size_t n = g.size();
    DerivativeFields du = gradient_and_hessian(g, s.u, s.valid);
    HessianFields out;
    out.grid = g;
    out.Hxx.assign(n, 0.0);
    out.Hxy.assign(n, 0.0);
    out.Hyy.assign(n, 0.0);
    out.valid = du.valid;
    out.boundary = du.boundary;
    const bool lorentz = s.signature == Signature::Lorentzian;
    for (std::size_t k = 0; k < n; ++k) {
        // Only first derivatives enter; keep nodes whose gradient exists.
        if (s.valid.empty() ? false : !s.valid[k]) { out.valid[k] = 0; continue; }
        if (!out.valid[k]) continue;
        const double u = s.u[k];
        if (!w.in_domain(u)) { out.valid[k] = 0; continue; }
        const double ux = du.fx[k], uy = du.fy[k];
        const double ephi = std::exp(w.phi(u));
        if (!lorentz) {
            const double W = std::sqrt(1.0 + ux * ux + uy * uy);
            out.Hxx[k] = (1.0 + ux * ux) * ephi / W;
            out.Hxy[k] = ux * uy * ephi / W;
            out.Hyy[k] = (1.0 + uy * uy) * ephi / W;
        } else {
            const double q = 1.0 - ux * ux - uy * uy;
            if (!(q > 0.0)) { out.valid[k] = 0; continue; }
            const double W = std::sqrt(q);
            out.Hxx[k] = (1.0 - ux * ux) * ephi / W;
            out.Hxy[k] = -ux * uy * ephi / W;
            out.Hyy[k] = (1.0 - uy * uy) * ephi / W;
        }
    }
    return out;
}

namespace {

// Trapezoidal path integration of a field with prescribed partials
// (gx, gy), gauged to zero at the reference node.  Sweep order: primary
// axis line through the reference first, then the perpendicular lines,
// then breadth-first fill for any masked leftovers.
Field integrate_sweep(const Grid2D& g, const Field& gx, const Field& gy, const Mask& valid,
                      int i0, int j0, bool row_first) {
    const std::size_t n = g.size();
    Field val(n, 0.0);
    std::vector<uint8_t> done(n, 0);
    auto ok = [&](int i, int j) { return valid.empty() || valid[g.idx(i, j)] != 0; };
    auto step_x = [&](int i_from, int i_to, int j) {
        const std::size_t a = g.idx(i_from, j), b = g.idx(i_to, j);
        val[b] = val[a] + 0.5 * (gx[a] + gx[b]) * (i_to - i_from) * g.dx;
        done[b] = 1;
    };
    auto step_y = [&](int i, int j_from, int j_to) {
        const std::size_t a = g.idx(i, j_from), b = g.idx(i, j_to);
        val[b] = val[a] + 0.5 * (gy[a] + gy[b]) * (j_to - j_from) * g.dy;
        done[b] = 1;
    };

    done[g.idx(i0, j0)] = 1;
    auto sweep_row = [&](int j) {
        for (int i = i0 + 1; i < g.nx && ok(i, j) && done[g.idx(i - 1, j)]; ++i) step_x(i - 1, i, j);
        for (int i = i0 - 1; i >= 0 && ok(i, j) && done[g.idx(i + 1, j)]; --i) step_x(i + 1, i, j);
    };
    auto sweep_col = [&](int i) {
        for (int j = j0 + 1; j < g.ny && ok(i, j) && done[g.idx(i, j - 1)]; ++j) step_y(i, j - 1, j);
        for (int j = j0 - 1; j >= 0 && ok(i, j) && done[g.idx(i, j + 1)]; --j) step_y(i, j + 1, j);
    };

    if (row_first) {
        sweep_row(j0);
        for (int i = 0; i < g.nx; ++i)
            if (done[g.idx(i, j0)]) sweep_col(i);
    } else {
        sweep_col(i0);
        for (int j = 0; j < g.ny; ++j)
            if (done[g.idx(i0, j)]) sweep_row(j);
    }

    // Flood fill for valid nodes the L-paths could not reach.
    std::deque<std::pair<int, int>> q;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (done[g.idx(i, j)]) q.emplace_back(i, j);
    while (!q.empty()) {
        auto [i, j] = q.front();
        q.pop_front();
        if (i + 1 < g.nx && ok(i + 1, j) && !done[g.idx(i + 1, j)]) { step_x(i, i + 1, j); q.emplace_back(i + 1, j); }
        if (i - 1 >= 0 && ok(i - 1, j) && !done[g.idx(i - 1, j)]) { step_x(i, i - 1, j); q.emplace_back(i - 1, j); }
        if (j + 1 < g.ny && ok(i, j + 1) && !done[g.idx(i, j + 1)]) { step_y(i, j, j + 1); q.emplace_back(i, j + 1); }
        if (j - 1 >= 0 && ok(i, j - 1) && !done[g.idx(i, j - 1)]) { step_y(i, j, j - 1); q.emplace_back(i, j - 1); }
    }
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (ok(i, j) && !done[g.idx(i, j)])
                throw std::runtime_error("integrate_potential_gradient: disconnected valid region");
    return val;
}

}  // namespace

PotentialGradient integrate_potential_gradient(const HessianFields& h) {
    const Grid2D& g = h.grid;
    const std::size_t n = g.size();
    for (std::size_t k = 0; k < n; ++k)
        if ((h.valid.empty() || h.valid[k]) &&
            (!std::isfinite(h.Hxx[k]) || !std::isfinite(h.Hxy[k]) || !std::isfinite(h.Hyy[k])))
            throw std::invalid_argument("integrate_potential_gradient: non-finite Hessian entry");

    int i0 = -1, j0 = -1;
    for (int j = 0; j < g.ny && i0 < 0; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (h.valid.empty() || h.valid[g.idx(i, j)]) { i0 = i; j0 = j; break; }
    if (i0 < 0) throw std::invalid_argument("integrate_potential_gradient: no valid nodes");

    PotentialGradient out;
    out.grid = g;
    out.valid = h.valid;
    out.Px = integrate_sweep(g, h.Hxx, h.Hxy, h.valid, i0, j0, true);
    Field px_alt = integrate_sweep(g, h.Hxx, h.Hxy, h.valid, i0, j0, false);
    out.Py = integrate_sweep(g, h.Hxy, h.Hyy, h.valid, i0, j0, false);
    Field py_alt = integrate_sweep(g, h.Hxy, h.Hyy, h.valid, i0, j0, true);
    out.compat_residual.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (!h.valid.empty() && !h.valid[k]) continue;
        out.compat_residual[k] =
            std::max(std::fabs(out.Px[k] - px_alt[k]), std::fabs(out.Py[k] - py_alt[k]));
    }
    return out;
}

double hessian_curl_max(const HessianFields& h) {
    DerivativeFields dxx = gradient_and_hessian(h.grid, h.Hxx, h.valid);
    DerivativeFields dxy = gradient_and_hessian(h.grid, h.Hxy, h.valid);
    DerivativeFields dyy = gradient_and_hessian(h.grid, h.Hyy, h.valid);
    const Mask deep = dilate_boundary(h.grid, h.valid, h.boundary);
    double m = 0.0;
    for (std::size_t k = 0; k < h.grid.size(); ++k) {
        if (!dxx.valid[k] || !dxy.valid[k] || !dyy.valid[k]) continue;
        if (deep[k] || dxx.boundary[k] || dxy.boundary[k] || dyy.boundary[k]) continue;
        m = std::max(m, std::fabs(dxx.fy[k] - dxy.fx[k]));
        m = std::max(m, std::fabs(dxy.fy[k] - dyy.fx[k]));
    }
    return m;
}

}  // namespace calabi
