#include "calabi/mesh.hpp"

#include "calabi/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace calabi {

namespace {

using V3 = std::array<double, 3>;

V3 sub(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
V3 scale(const V3& a, double c) { return {a[0] * c, a[1] * c, a[2] * c}; }

V3 cross(const V3& a, const V3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Lorentz cross product for the metric dx^2 + dy^2 - dz^2:
// << a x_L b, c >> = det(a,b,c).
V3 lcross(const V3& a, const V3& b) {
    V3 c = cross(a, b);
    c[2] = -c[2];
    return c;
}

double edot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double ldot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] - a[2] * b[2]; }

double tri_area2(const V3& a, const V3& b, const V3& c) {
    const V3 n = cross(sub(b, a), sub(c, a));
    return edot(n, n);
}

void triangulate(SurfaceMesh& m) {
    const int jmax = m.wrap_cols ? m.cols : m.cols - 1;
    for (int i = 0; i + 1 < m.rows; ++i) {
        for (int j = 0; j < jmax; ++j) {
            const int jn = (j + 1) % m.cols;
            const int a = static_cast<int>(m.vidx(i, j));
            const int b = static_cast<int>(m.vidx(i + 1, j));
            const int c = static_cast<int>(m.vidx(i + 1, jn));
            const int d = static_cast<int>(m.vidx(i, jn));
            if (tri_area2(m.vertices[a], m.vertices[b], m.vertices[c]) > 1e-300)
                m.triangles.push_back({a, b, c});
            if (tri_area2(m.vertices[a], m.vertices[c], m.vertices[d]) > 1e-300)
                m.triangles.push_back({a, c, d});
        }
    }
}

// Index-space central/one-sided differences of the position field.
V3 dvert(const SurfaceMesh& m, int i, int j, bool along_rows) {
    auto at = [&](int ii, int jj) { return m.vertices[m.vidx(ii, jj)]; };
    if (along_rows) {
        if (i > 0 && i + 1 < m.rows) return scale(sub(at(i + 1, j), at(i - 1, j)), 0.5);
        if (i == 0) return sub(at(1, j), at(0, j));
        return sub(at(i, j), at(i - 1, j));
    }
    if (m.wrap_cols) {
        const int jp = (j + 1) % m.cols, jm = (j + m.cols - 1) % m.cols;
        return scale(sub(at(i, jp), at(i, jm)), 0.5);
    }
    if (j > 0 && j + 1 < m.cols) return scale(sub(at(i, j + 1), at(i, j - 1)), 0.5);
    if (j == 0) return sub(at(i, 1), at(i, 0));
    return sub(at(i, j), at(i, j - 1));
}

void fd_normals(SurfaceMesh& m) {
    m.normals.assign(m.vertices.size(), {0.0, 0.0, 0.0});
    const bool lorentz = m.signature == Signature::Lorentzian;
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            const V3 xu = dvert(m, i, j, true);
            const V3 xv = dvert(m, i, j, false);
            V3 n = lorentz ? lcross(xu, xv) : cross(xu, xv);
            const double q = lorentz ? -ldot(n, n) : edot(n, n);
            if (q > 1e-300) {
                n = scale(n, 1.0 / std::sqrt(q));
                if (lorentz && n[2] < 0) n = scale(n, -1.0);
            }
            m.normals[m.vidx(i, j)] = n;
        }
    }
}

}  // namespace

SurfaceMesh elliptic_revolve(const RadialProfile& p, int n_t) {
    if (n_t < 8) throw std::invalid_argument("elliptic_revolve: need n_t >= 8");
    SurfaceMesh m;
    m.rows = static_cast<int>(p.size());
    m.cols = n_t;
    m.wrap_cols = true;
    m.signature = p.side;
    m.vertices.resize(m.rows * static_cast<std::size_t>(n_t));
    m.normals.resize(m.vertices.size());
    const bool lorentz = p.side == Signature::Lorentzian;
    parallel_for(static_cast<std::size_t>(m.rows), [&](std::size_t row) {
        const int i = static_cast<int>(row);
        for (int j = 0; j < n_t; ++j) {
            const double t = 2.0 * M_PI * j / n_t;
            const double ct = std::cos(t), st = std::sin(t);
            m.vertices[m.vidx(i, j)] = {p.x[i] * ct, p.x[i] * st, p.u[i]};
            if (!lorentz) {
                const double sz = std::sin(p.z[i]), cz = std::cos(p.z[i]);
                m.normals[m.vidx(i, j)] = {-sz * ct, -sz * st, cz};
            } else if (std::isfinite(p.z[i])) {
                const double sh = std::sinh(p.z[i]), ch = std::cosh(p.z[i]);
                m.normals[m.vidx(i, j)] = {sh * ct, sh * st, ch};
            } else {
                const double sg = p.z[i] > 0 ? 1.0 : -1.0;  // light-cone point: null direction
                m.normals[m.vidx(i, j)] = {sg * ct, sg * st, 1.0};
            }
        }
    });
    triangulate(m);
    return m;
}

SurfaceMesh elliptic_revolve(const TransformedCurve& c, int n_t) {
    if (n_t < 8) throw std::invalid_argument("elliptic_revolve: need n_t >= 8");
    SurfaceMesh m;
    m.rows = static_cast<int>(c.lambda.size());
    m.cols = n_t;
    m.wrap_cols = true;
    m.signature = Signature::Lorentzian;
    m.vertices.resize(m.rows * static_cast<std::size_t>(n_t));
    m.normals.resize(m.vertices.size());
    for (int i = 0; i < m.rows; ++i) {
        const double s = c.slope[i];
        const double denom = std::sqrt(std::max(0.0, 1.0 - s * s));
        for (int j = 0; j < n_t; ++j) {
            const double t = 2.0 * M_PI * j / n_t;
            const double ct = std::cos(t), st = std::sin(t);
            m.vertices[m.vidx(i, j)] = {c.lambda[i] * ct, c.lambda[i] * st, c.theta[i]};
            if (denom > 1e-12)
                m.normals[m.vidx(i, j)] = {s * ct / denom, s * st / denom, 1.0 / denom};
            else
                m.normals[m.vidx(i, j)] = {s * ct, s * st, 1.0};
        }
    }
    triangulate(m);
    return m;
}

SurfaceMesh hyperbolic_revolve(const HyperbolicProfile& p, double t0, double t1, int n_t) {
    if (n_t < 8) throw std::invalid_argument("hyperbolic_revolve: need n_t >= 8");
    if (!(t1 > t0)) throw std::invalid_argument("hyperbolic_revolve: empty t range");
    SurfaceMesh m;
    m.rows = static_cast<int>(p.size());
    m.cols = n_t;
    m.signature = Signature::Lorentzian;
    m.vertices.resize(m.rows * static_cast<std::size_t>(n_t));
    m.normals.resize(m.vertices.size());
    m.K.resize(m.vertices.size());
    parallel_for(static_cast<std::size_t>(m.rows), [&](std::size_t row) {
        const int i = static_cast<int>(row);
        const double sz = std::sinh(p.z[i]), cz = std::cosh(p.z[i]);
        const double Ki = hyperbolic_gauss_curvature(p.alpha, p.k, p.u[i]);
        for (int j = 0; j < n_t; ++j) {
            const double t = t0 + (t1 - t0) * j / (n_t - 1);
            const double sh = std::sinh(t), ch = std::cosh(t);
            m.vertices[m.vidx(i, j)] = {p.x[i], p.u[i] * sh, p.u[i] * ch};
            m.normals[m.vidx(i, j)] = {sz, cz * sh, cz * ch};
            m.K[m.vidx(i, j)] = Ki;
        }
    });
    triangulate(m);
    return m;
}

SurfaceMesh hyperbolic_partner(const HyperbolicProfile& p, double t0, double t1, int n_t) {
    if (p.alpha == -1.0)
        throw std::invalid_argument("hyperbolic_partner: alpha = -1 is the grim_reaper case");
    if (n_t < 8) throw std::invalid_argument("hyperbolic_partner: need n_t >= 8");
    if (!(t1 > t0)) throw std::invalid_argument("hyperbolic_partner: empty t range");

    const double a1 = p.alpha + 1.0;
    const double dt = (t1 - t0) / (n_t - 1);
    auto f = [&](double t) { return std::pow(std::cosh(t), p.alpha); };
    // Cumulative trapezoid gauged to 0 at t = 0.
    std::vector<double> I(n_t);
    double off = 0.0;
    {
        const int nf = 4 * n_t;
        const double hh = (t0 - 0.0) / nf;
        for (int q = 0; q < nf; ++q) off += 0.5 * hh * (f(q * hh) + f((q + 1) * hh));
    }
    I[0] = off;
    for (int j = 1; j < n_t; ++j) {
        const double ta = t0 + (j - 1) * dt, tb = t0 + j * dt;
        I[j] = I[j - 1] + 0.5 * dt * (f(ta) + f(tb));
    }

    SurfaceMesh m;
    m.rows = static_cast<int>(p.size());
    m.cols = n_t;
    m.signature = Signature::Euclidean;
    m.vertices.resize(m.rows * static_cast<std::size_t>(n_t));
    for (int i = 0; i < m.rows; ++i) {
        const double up = std::tanh(p.z[i]);
        const double ua1 = std::pow(p.u[i], a1);
        for (int j = 0; j < n_t; ++j) {
            const double t = t0 + j * dt;
            const double ca1 = std::pow(std::cosh(t), a1);
            m.vertices[m.vidx(i, j)] = {-p.k * up * ca1 / a1, p.k * I[j], ua1 * ca1 / a1};
        }
    }
    fd_normals(m);
    triangulate(m);
    return m;
}

SurfaceMesh grim_reaper(double lambda, double u0, double y0, double y1, double t0, double t1,
                        int n) {
    if (!(u0 > 0.0)) throw std::invalid_argument("grim_reaper: need u0 > 0");
    if (n < 2 || !(y1 > y0) || !(t1 > t0)) throw std::invalid_argument("grim_reaper: bad ranges");
    SurfaceMesh m;
    m.rows = n;
    m.cols = n;
    m.signature = Signature::Euclidean;
    m.vertices.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double y = y0 + (y1 - y0) * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double t = t0 + (t1 - t0) * j / (n - 1);
            const double gt = 2.0 * std::atan(std::tanh(0.5 * t));
            if (lambda == 0.0)
                m.vertices[m.vidx(i, j)] = {-y / u0, gt, std::log(u0 * std::cosh(t))};
            else
                m.vertices[m.vidx(i, j)] = {y / lambda - lambda * std::log(std::cosh(t)),
                                            std::sqrt(1.0 + lambda * lambda) * gt,
                                            y + std::cosh(t)};
        }
    }
    fd_normals(m);
    triangulate(m);
    return m;
}

SurfaceMesh ruled_maximal_surface(double z0, double u0, double x0, double x1, double t0,
                                  double t1, int n) {
    if (n < 2 || !(x1 > x0) || !(t1 > t0))
        throw std::invalid_argument("ruled_maximal_surface: bad ranges");
    const double m0 = std::tanh(z0);
    if (!(m0 * x0 + u0 > 0.0) || !(m0 * x1 + u0 > 0.0))
        throw std::invalid_argument("ruled_maximal_surface: tanh(z0) x + u0 must stay positive");
    SurfaceMesh m;
    m.rows = n;
    m.cols = n;
    m.signature = Signature::Lorentzian;
    m.vertices.resize(static_cast<std::size_t>(n) * n);
    m.normals.resize(m.vertices.size());
    const double denom = std::sqrt(1.0 - m0 * m0);
    for (int i = 0; i < n; ++i) {
        const double x = x0 + (x1 - x0) * i / (n - 1);
        const double v = m0 * x + u0;
        for (int j = 0; j < n; ++j) {
            const double t = t0 + (t1 - t0) * j / (n - 1);
            m.vertices[m.vidx(i, j)] = {x, v * std::sinh(t), v * std::cosh(t)};
            m.normals[m.vidx(i, j)] = {m0 / denom, std::sinh(t) / denom, std::cosh(t) / denom};
        }
    }
    triangulate(m);
    return m;
}

MeshCurvature mesh_gauss_curvature(const SurfaceMesh& m) {
    MeshCurvature out;
    out.K.assign(m.vertices.size(), 0.0);
    out.valid.assign(m.vertices.size(), 0);
    const bool lorentz = m.signature == Signature::Lorentzian;
    auto at = [&](int i, int j) { return m.vertices[m.vidx(i, (j % m.cols + m.cols) % m.cols)]; };
    auto dot = [&](const V3& a, const V3& b) { return lorentz ? ldot(a, b) : edot(a, b); };

    for (int i = 1; i + 1 < m.rows; ++i) {
        const int j0 = m.wrap_cols ? 0 : 1;
        const int j1 = m.wrap_cols ? m.cols : m.cols - 1;
        for (int j = j0; j < j1; ++j) {
            const V3 c = at(i, j);
            const V3 xu = scale(sub(at(i + 1, j), at(i - 1, j)), 0.5);
            const V3 xv = scale(sub(at(i, j + 1), at(i, j - 1)), 0.5);
            const V3 xuu = sub(sub(at(i + 1, j), scale(c, 2.0)), scale(at(i - 1, j), -1.0));
            const V3 xvv = sub(sub(at(i, j + 1), scale(c, 2.0)), scale(at(i, j - 1), -1.0));
            const V3 xuv = scale(sub(sub(at(i + 1, j + 1), at(i + 1, j - 1)),
                                     sub(at(i - 1, j + 1), at(i - 1, j - 1))),
                                 0.25);
            V3 n = lorentz ? lcross(xu, xv) : cross(xu, xv);
            const double q = lorentz ? -ldot(n, n) : edot(n, n);
            const double E = dot(xu, xu), F = dot(xu, xv), G = dot(xv, xv);
            const double detI = E * G - F * F;
            const double scl = std::fabs(E) + std::fabs(G) + std::fabs(F);
            if (!(q > 1e-300) || std::fabs(detI) < 1e-13 * scl * scl) continue;
            n = scale(n, 1.0 / std::sqrt(q));
            const double L = dot(xuu, n), Mm = dot(xuv, n), N = dot(xvv, n);
            const double detII = L * N - Mm * Mm;
            out.K[m.vidx(i, j)] = (lorentz ? -1.0 : 1.0) * detII / detI;
            out.valid[m.vidx(i, j)] = 1;
        }
    }
    return out;
}

}  // namespace calabi
