#include "calabi/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace calabi {

namespace {

CalabiPair build_pair(const GraphSurface& s, const WeightFunction& w, Direction dir) {
    const bool fwd = dir == Direction::EuclidToLorentz;
    if (fwd && s.signature != Signature::Euclidean)
        throw std::invalid_argument("forward_transform expects a Euclidean graph");
    if (!fwd && s.signature != Signature::Lorentzian)
        throw std::invalid_argument("inverse_transform expects a Lorentzian graph");

    CalabiPair p;
    p.source = s;
    p.weight = w;
    p.dual = dual_weight(w);
    p.direction = dir;
    p.hess = hessian_fields(s, w);
    p.pot = integrate_potential_gradient(
        HessianFields{p.hess.grid, p.hess.Hxx, p.hess.Hxy, p.hess.Hyy, p.hess.valid,
                      p.hess.boundary});
    p.du = gradient_and_hessian(s.grid, s.u, s.valid);

    const std::size_t n = s.grid.size();
    p.Ix = p.pot.Px;
    p.Iy = p.pot.Py;
    p.Iz.assign(n, 0.0);
    p.Nx.assign(n, 0.0);
    p.Ny.assign(n, 0.0);
    p.Nz.assign(n, 0.0);
    p.gX.assign(n, 0.0);
    p.gY.assign(n, 0.0);
    p.Wsrc.assign(n, 0.0);
    p.ephi.assign(n, 0.0);
    p.valid = p.hess.valid;
    p.boundary = p.hess.boundary;

    for (std::size_t k = 0; k < n; ++k) {
        if (!p.valid[k]) continue;
        const double u = s.u[k];
        const double ux = p.du.fx[k], uy = p.du.fy[k];
        p.Iz[k] = w.theta(u);
        p.ephi[k] = std::exp(w.phi(u));
        if (fwd) {
            const double W = std::sqrt(1.0 + ux * ux + uy * uy);
            p.Wsrc[k] = W;
            p.Nx[k] = ux;
            p.Ny[k] = uy;
            p.Nz[k] = W;  // <<N,N>> = -1 exactly
            p.gX[k] = ux / W;
            p.gY[k] = uy / W;
        } else {
            const double q = 1.0 - ux * ux - uy * uy;
            if (!(q > 0.0)) { p.valid[k] = 0; continue; }
            const double W = std::sqrt(q);
            p.Wsrc[k] = W;
            p.Nx[k] = -ux / 1.0;
            p.Ny[k] = -uy / 1.0;
            p.Nz[k] = W;  // (-ux,-uy,Wbar) is Euclidean-unit exactly
            p.gX[k] = ux / W;
            p.gY[k] = uy / W;
        }
    }
    return p;
}

struct Tri {
    std::size_t a, b, c;
};

}  // namespace

CalabiPair forward_transform(const GraphSurface& s, const WeightFunction& w) {
    return build_pair(s, w, Direction::EuclidToLorentz);
}

CalabiPair inverse_transform(const GraphSurface& s, const WeightFunction& w) {
    return build_pair(s, w, Direction::LorentzToEuclid);
}

ResampledImage resample_image_graph(const CalabiPair& p, int nx, int ny) {
    const Grid2D& g = p.source.grid;
    if (nx <= 0) nx = g.nx;
    if (ny <= 0) ny = g.ny;

    // Triangulate the projected image quads (valid corners only).
    std::vector<Tri> tris;
    tris.reserve(2u * (g.nx - 1) * (g.ny - 1));
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!p.valid[k]) continue;
        xmin = std::min(xmin, p.Ix[k]);
        xmax = std::max(xmax, p.Ix[k]);
        ymin = std::min(ymin, p.Iy[k]);
        ymax = std::max(ymax, p.Iy[k]);
    }
    if (!(xmax > xmin) || !(ymax > ymin))
        throw std::runtime_error("resample_image_graph: degenerate projected image");

    double pos_area = 0.0, neg_area = 0.0;
    std::vector<std::pair<int, int>> folded;
    auto signed_area = [&](const Tri& t) {
        const double ax = p.Ix[t.a], ay = p.Iy[t.a];
        return 0.5 * ((p.Ix[t.b] - ax) * (p.Iy[t.c] - ay) - (p.Ix[t.c] - ax) * (p.Iy[t.b] - ay));
    };
    for (int j = 0; j + 1 < g.ny; ++j) {
        for (int i = 0; i + 1 < g.nx; ++i) {
            const std::size_t k00 = g.idx(i, j), k10 = g.idx(i + 1, j);
            const std::size_t k01 = g.idx(i, j + 1), k11 = g.idx(i + 1, j + 1);
            if (!p.valid[k00] || !p.valid[k10] || !p.valid[k01] || !p.valid[k11]) continue;
            Tri t1{k00, k10, k11}, t2{k00, k11, k01};
            for (const Tri& t : {t1, t2}) {
                const double a = signed_area(t);
                if (a > 0) pos_area += a; else neg_area -= a;
                if (a <= 0) folded.emplace_back(i, j);
                tris.push_back(t);
            }
        }
    }
    if (tris.empty()) throw std::runtime_error("resample_image_graph: no valid image cells");
    if (neg_area > 1e-12 * (pos_area + neg_area) && !folded.empty()) {
        std::ostringstream os;
        os << "resample_image_graph: projection fold-over at cells";
        for (std::size_t q = 0; q < folded.size() && q < 8; ++q)
            os << " (" << folded[q].first << "," << folded[q].second << ")";
        throw std::runtime_error(os.str());
    }

    Grid2D ng = make_grid_span(xmin, xmax, nx, ymin, ymax, ny);

    // Bin triangles by bounding box for point location.
    const int bx = std::max(8, nx / 2), by = std::max(8, ny / 2);
    std::vector<std::vector<int>> bins(static_cast<std::size_t>(bx) * by);
    auto bin_of = [&](double x, double y, int& ix, int& iy) {
        ix = std::clamp(static_cast<int>((x - xmin) / (xmax - xmin) * bx), 0, bx - 1);
        iy = std::clamp(static_cast<int>((y - ymin) / (ymax - ymin) * by), 0, by - 1);
    };
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        const Tri& tr = tris[t];
        const double txmin = std::min({p.Ix[tr.a], p.Ix[tr.b], p.Ix[tr.c]});
        const double txmax = std::max({p.Ix[tr.a], p.Ix[tr.b], p.Ix[tr.c]});
        const double tymin = std::min({p.Iy[tr.a], p.Iy[tr.b], p.Iy[tr.c]});
        const double tymax = std::max({p.Iy[tr.a], p.Iy[tr.b], p.Iy[tr.c]});
        int i0, j0, i1, j1;
        bin_of(txmin, tymin, i0, j0);
        bin_of(txmax, tymax, i1, j1);
        for (int jj = j0; jj <= j1; ++jj)
            for (int ii = i0; ii <= i1; ++ii) bins[static_cast<std::size_t>(jj) * bx + ii].push_back(t);
    }

    ResampledImage out;
    out.surface.grid = ng;
    out.surface.signature = p.direction == Direction::EuclidToLorentz ? Signature::Lorentzian
                                                                      : Signature::Euclidean;
    out.surface.u.assign(ng.size(), 0.0);
    out.surface.valid.assign(ng.size(), 0);
    out.gx.assign(ng.size(), 0.0);
    out.gy.assign(ng.size(), 0.0);

    const double eps = 1e-12;
    for (int j = 0; j < ng.ny; ++j) {
        for (int i = 0; i < ng.nx; ++i) {
            const double X = ng.x(i), Y = ng.y(j);
            int ix, iy;
            bin_of(X, Y, ix, iy);
            const std::size_t nk = ng.idx(i, j);
            for (int t : bins[static_cast<std::size_t>(iy) * bx + ix]) {
                const Tri& tr = tris[t];
                const double ax = p.Ix[tr.a], ay = p.Iy[tr.a];
                const double v1x = p.Ix[tr.b] - ax, v1y = p.Iy[tr.b] - ay;
                const double v2x = p.Ix[tr.c] - ax, v2y = p.Iy[tr.c] - ay;
                const double det = v1x * v2y - v2x * v1y;
                if (std::fabs(det) < 1e-300) continue;
                const double l1 = ((X - ax) * v2y - (Y - ay) * v2x) / det;
                const double l2 = ((Y - ay) * v1x - (X - ax) * v1y) / det;
                const double l0 = 1.0 - l1 - l2;
                if (l0 < -eps || l1 < -eps || l2 < -eps) continue;
                out.surface.u[nk] = l0 * p.Iz[tr.a] + l1 * p.Iz[tr.b] + l2 * p.Iz[tr.c];
                out.gx[nk] = l0 * p.gX[tr.a] + l1 * p.gX[tr.b] + l2 * p.gX[tr.c];
                out.gy[nk] = l0 * p.gY[tr.a] + l1 * p.gY[tr.b] + l2 * p.gY[tr.c];
                out.surface.valid[nk] = 1;
                break;
            }
        }
    }
    return out;
}

void InvariantReport::add(const std::string& name, double value, double tol) {
    entries.push_back(ReportEntry{name, value, tol, std::fabs(value) <= tol});
}

const ReportEntry* InvariantReport::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

double InvariantReport::value_of(const std::string& name) const {
    const ReportEntry* e = find(name);
    if (!e) throw std::out_of_range("no report entry named " + name);
    return e->value;
}

bool InvariantReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

std::map<std::string, double> default_verify_tolerances() {
    const double inf = std::numeric_limits<double>::infinity();
    return {
        {"hh_max", inf},        {"hh_rms", inf},      {"kk_max", inf},
        {"kk_rms", inf},        {"conformal_max", inf}, {"dual_pde_max", inf},
        {"curl_max", inf},      {"compat_max", inf},
        {"gaussmap_defect", 1e-12},
    };
}

InvariantReport verify_pair(const CalabiPair& p, const ResampledImage& resampled,
                            std::map<std::string, double> tolerances) {
    auto tol = default_verify_tolerances();
    for (auto& [k, v] : tolerances) tol[k] = v;

    const Grid2D& g = p.source.grid;
    const std::size_t n = g.size();
    const bool fwd = p.direction == Direction::EuclidToLorentz;
    const double lz = fwd ? -1.0 : 1.0;  // sign of the z-term in the image ambient metric
    auto dot3 = [lz](double ax, double ay, double az, double bx, double by, double bz) {
        return ax * bx + ay * by + lz * az * bz;
    };

    GeometryFields geo = geometry(p.source);
    const Mask deep = dilate_boundary(g, p.valid, p.boundary);

    // Derivatives of the exact image first-derivative fields.
    Field Tx(n, 0.0), Ty(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (!p.valid[k]) continue;
        Tx[k] = p.ephi[k] * p.du.fx[k];
        Ty[k] = p.ephi[k] * p.du.fy[k];
    }
    DerivativeFields dHxx = gradient_and_hessian(g, p.hess.Hxx, p.valid);
    DerivativeFields dHxy = gradient_and_hessian(g, p.hess.Hxy, p.valid);
    DerivativeFields dHyy = gradient_and_hessian(g, p.hess.Hyy, p.valid);
    DerivativeFields dTx = gradient_and_hessian(g, Tx, p.valid);
    DerivativeFields dTy = gradient_and_hessian(g, Ty, p.valid);
    DerivativeFields dPx = gradient_and_hessian(g, p.Ix, p.valid);
    DerivativeFields dPy = gradient_and_hessian(g, p.Iy, p.valid);
    DerivativeFields dIz = gradient_and_hessian(g, p.Iz, p.valid);
    DerivativeFields dgX = gradient_and_hessian(g, p.gX, p.valid);
    DerivativeFields dgY = gradient_and_hessian(g, p.gY, p.valid);

    double hh_max = 0.0, kk_max = 0.0, conformal_max = 0.0, dual_pde_max = 0.0;
    double gauss_defect = 0.0, compat_max = 0.0;
    double hh_ss = 0.0, kk_ss = 0.0;
    std::size_t cnt = 0;

    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t k = g.idx(i, j);
            if (!p.valid[k] || !geo.valid[k] || !dHxx.valid[k] || !dTx.valid[k] ||
                !dPx.valid[k] || !dgX.valid[k])
                continue;
            const bool bnd = deep[k] || geo.boundary[k] || dHxx.boundary[k] ||
                             dTx.boundary[k] || dPx.boundary[k] || dgX.boundary[k];
            compat_max = std::max(compat_max, p.pot.compat_residual[k]);
            gauss_defect = std::max(
                gauss_defect,
                std::fabs(dot3(p.Nx[k], p.Ny[k], p.Nz[k], p.Nx[k], p.Ny[k], p.Nz[k]) -
                          (fwd ? -1.0 : 1.0)));
            if (bnd) continue;

            const double W = p.Wsrc[k], ephi = p.ephi[k];
            const double Hxx = p.hess.Hxx[k], Hxy = p.hess.Hxy[k], Hyy = p.hess.Hyy[k];

            // Image metric, algebraic route.
            const double g11 = dot3(Hxx, Hxy, Tx[k], Hxx, Hxy, Tx[k]);
            const double g12 = dot3(Hxx, Hxy, Tx[k], Hxy, Hyy, Ty[k]);
            const double g22 = dot3(Hxy, Hyy, Ty[k], Hxy, Hyy, Ty[k]);
            const double detg = g11 * g22 - g12 * g12;

            // Image second fundamental form from derivatives of the exact
            // first-derivative fields.
            const double b11 =
                dot3(dHxx.fx[k], dHxy.fx[k], dTx.fx[k], p.Nx[k], p.Ny[k], p.Nz[k]);
            const double b12 =
                dot3(dHxx.fy[k], dHxy.fy[k], dTx.fy[k], p.Nx[k], p.Ny[k], p.Nz[k]);
            const double b22 =
                dot3(dHxy.fy[k], dHyy.fy[k], dTy.fy[k], p.Nx[k], p.Ny[k], p.Nz[k]);

            const double trace = (g22 * b11 - 2.0 * g12 * b12 + g11 * b22) / detg;
            const double Himg = -trace;
            const double Kimg = (fwd ? -1.0 : 1.0) * (b11 * b22 - b12 * b12) / detg;

            const double scale = W * W / ephi;
            const double hh = Himg + scale * geo.H[k];
            const double kk = Kimg + scale * scale * geo.K[k];
            hh_max = std::max(hh_max, std::fabs(hh));
            kk_max = std::max(kk_max, std::fabs(kk));
            hh_ss += hh * hh;
            kk_ss += kk * kk;
            ++cnt;

            // Conformality of the integrated map against the scaled source
            // metric.
            const double cf = ephi * ephi / (W * W);
            const double f11 = dot3(dPx.fx[k], dPy.fx[k], dIz.fx[k], dPx.fx[k], dPy.fx[k], dIz.fx[k]);
            const double f12 = dot3(dPx.fx[k], dPy.fx[k], dIz.fx[k], dPx.fy[k], dPy.fy[k], dIz.fy[k]);
            const double f22 = dot3(dPx.fy[k], dPy.fy[k], dIz.fy[k], dPx.fy[k], dPy.fy[k], dIz.fy[k]);
            conformal_max = std::max({conformal_max, std::fabs(f11 - cf * geo.E[k]),
                                      std::fabs(f12 - cf * geo.F[k]), std::fabs(f22 - cf * geo.G[k])});

        }
    }
    dual_pde_max = dual_pde_residual_max(p, p.dual);

    const double curl = hessian_curl_max(
        HessianFields{g, p.hess.Hxx, p.hess.Hxy, p.hess.Hyy, p.valid, p.boundary});

    InvariantReport rep;
    rep.add("hh_max", hh_max, tol["hh_max"]);
    rep.add("hh_rms", cnt ? std::sqrt(hh_ss / cnt) : 0.0, tol["hh_rms"]);
    rep.add("kk_max", kk_max, tol["kk_max"]);
    rep.add("kk_rms", cnt ? std::sqrt(kk_ss / cnt) : 0.0, tol["kk_rms"]);
    rep.add("conformal_max", conformal_max, tol["conformal_max"]);
    rep.add("dual_pde_max", dual_pde_max, tol["dual_pde_max"]);
    rep.add("curl_max", curl, tol["curl_max"]);
    rep.add("compat_max", compat_max, tol["compat_max"]);
    rep.add("gaussmap_defect", gauss_defect, tol["gaussmap_defect"]);

    // Resampled-graph diagnostic: spacelike/graph slope bound.
    double slope_max = 0.0;
    DerivativeFields dres =
        gradient_and_hessian(resampled.surface.grid, resampled.surface.u, resampled.surface.valid);
    for (std::size_t k = 0; k < resampled.surface.grid.size(); ++k) {
        if (!dres.valid[k] || dres.boundary[k]) continue;
        slope_max = std::max(slope_max, std::hypot(dres.fx[k], dres.fy[k]));
    }
    rep.metadata["resampled_slope_max"] = std::to_string(slope_max);

    std::ostringstream hx;
    hx << g.dx;
    rep.metadata["grid_dx"] = hx.str();
    rep.metadata["weight"] = p.weight.spec();
    rep.metadata["dual_weight"] = p.dual.spec();
    rep.metadata["direction"] = fwd ? "euclid-to-lorentz" : "lorentz-to-euclid";
    return rep;
}

double dual_pde_residual_max(const CalabiPair& p, const WeightFunction& candidate) {
    const Grid2D& g = p.source.grid;
    const bool fwd = p.direction == Direction::EuclidToLorentz;
    DerivativeFields dgX = gradient_and_hessian(g, p.gX, p.valid);
    DerivativeFields dgY = gradient_and_hessian(g, p.gY, p.valid);
    const Mask deep = dilate_boundary(g, p.valid, p.boundary);
    double worst = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!p.valid[k] || !dgX.valid[k] || !dgY.valid[k]) continue;
        if (deep[k] || dgX.boundary[k] || dgY.boundary[k]) continue;
        const double w_img = p.Iz[k];
        if (!candidate.in_domain(w_img)) continue;
        const double Hxx = p.hess.Hxx[k], Hxy = p.hess.Hxy[k], Hyy = p.hess.Hyy[k];
        const double detJ = Hxx * Hyy - Hxy * Hxy;
        if (std::fabs(detJ) < 1e-300) continue;
        // Image-graph second derivatives by the chain rule:
        // [d(gX,gY)/d(X,Y)] = [d(gX,gY)/d(x,y)] * J^{-1}, J = Hessian of
        // the potential (the exact Jacobian of the projected image map).
        const double m11 = dgX.fx[k], m12 = dgX.fy[k], m21 = dgY.fx[k], m22 = dgY.fy[k];
        const double uXX = (m11 * Hyy - m12 * Hxy) / detJ;
        const double uXY1 = (-m11 * Hxy + m12 * Hxx) / detJ;
        const double uXY2 = (m21 * Hyy - m22 * Hxy) / detJ;
        const double uYY = (-m21 * Hxy + m22 * Hxx) / detJ;
        const double uXY = 0.5 * (uXY1 + uXY2);
        const double uX = p.gX[k], uY = p.gY[k];
        const double pd = candidate.phi_dot(w_img);
        double res;
        if (fwd) {
            const double W2 = 1.0 - uX * uX - uY * uY;
            res = (1.0 - uX * uX) * uYY + (1.0 - uY * uY) * uXX + 2.0 * uX * uY * uXY + pd * W2;
        } else {
            const double W2 = 1.0 + uX * uX + uY * uY;
            res = (1.0 + uX * uX) * uYY + (1.0 + uY * uY) * uXX - 2.0 * uX * uY * uXY - pd * W2;
        }
        worst = std::max(worst, std::fabs(res));
    }
    return worst;
}

std::vector<int> singular_set(const std::vector<double>& turning_angle, double tol_angle) {
    std::vector<int> out;
    for (std::size_t i = 0; i < turning_angle.size(); ++i)
        if (std::fabs(std::cos(turning_angle[i])) < tol_angle) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace calabi
