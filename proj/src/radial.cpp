#include "calabi/radial.hpp"

#include "calabi/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace calabi {

double Forcing::operator()(double u) const {
    return kind == ForcingKind::One ? 1.0 : alpha / u;
}

double lightcone_deficit(double q) {
    return 2.0 / (std::exp(2.0 * q) + 1.0);
}

namespace {

struct EuclidState {
    double x, u, z;
};

EuclidState rk4_euclid(const EuclidState& st, const WeightFunction& w, double ds) {
    auto rhs = [&](const EuclidState& p) {
        const double cz = std::cos(p.z), sz = std::sin(p.z);
        return EuclidState{cz, sz, w.phi_dot(p.u) * cz - sz / p.x};
    };
    const EuclidState k1 = rhs(st);
    const EuclidState k2 = rhs({st.x + 0.5 * ds * k1.x, st.u + 0.5 * ds * k1.u, st.z + 0.5 * ds * k1.z});
    const EuclidState k3 = rhs({st.x + 0.5 * ds * k2.x, st.u + 0.5 * ds * k2.u, st.z + 0.5 * ds * k2.z});
    const EuclidState k4 = rhs({st.x + ds * k3.x, st.u + ds * k3.u, st.z + ds * k3.z});
    return EuclidState{st.x + ds / 6.0 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x),
                       st.u + ds / 6.0 * (k1.u + 2 * k2.u + 2 * k3.u + k4.u),
                       st.z + ds / 6.0 * (k1.z + 2 * k2.z + 2 * k3.z + k4.z)};
}

struct LorentzState {
    double u, q;  // q = artanh(u')
};

LorentzState rk4_lorentz(const LorentzState& st, const Forcing& f, double r, double dr) {
    auto rhs = [&](const LorentzState& p, double rr) {
        return LorentzState{std::tanh(p.q), f(p.u) - std::tanh(p.q) / rr};
    };
    const LorentzState k1 = rhs(st, r);
    const LorentzState k2 = rhs({st.u + 0.5 * dr * k1.u, st.q + 0.5 * dr * k1.q}, r + 0.5 * dr);
    const LorentzState k3 = rhs({st.u + 0.5 * dr * k2.u, st.q + 0.5 * dr * k2.q}, r + 0.5 * dr);
    const LorentzState k4 = rhs({st.u + dr * k3.u, st.q + dr * k3.q}, r + dr);
    return LorentzState{st.u + dr / 6.0 * (k1.u + 2 * k2.u + 2 * k3.u + k4.u),
                        st.q + dr / 6.0 * (k1.q + 2 * k2.q + 2 * k3.q + k4.q)};
}

void push_sample(RadialProfile& p, double s, double x, double u, double z) {
    p.s.push_back(s);
    p.x.push_back(x);
    p.u.push_back(u);
    p.z.push_back(z);
}

// Shrinks the final step so the state lands just inside the admissible
// region (within ~5e-10 of its boundary).  Used to stop profiles at the
// weight's domain floor and where the curve turns vertical; endpoint
// turning angles then sit within the singular-set tolerance for
// cupola-type profiles.
template <typename Pred>
bool bisect_step(EuclidState& st, const WeightFunction& w, double dir_h, Pred&& inside) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        const EuclidState trial = rk4_euclid(st, w, dir_h * mid);
        if (inside(trial)) lo = mid; else hi = mid;
    }
    if (lo == 0.0) return false;
    const EuclidState fin = rk4_euclid(st, w, dir_h * lo);
    if (!inside(fin)) return false;
    st = fin;
    return true;
}

struct RadialTable {
    std::vector<double> r, v, m;  // radius, value, slope dv/dr
};

GraphSurface hermite_graph(const RadialTable& t, const Grid2D& grid, Signature sig) {
    if (t.r.size() < 2) throw std::invalid_argument("profile_to_graph: too few samples");
    for (std::size_t i = 1; i < t.r.size(); ++i)
        if (!(t.r[i] > t.r[i - 1]))
            throw std::invalid_argument("profile_to_graph: branch is not a graph over radius");
    GraphSurface out;
    out.grid = grid;
    out.signature = sig;
    out.u.assign(grid.size(), 0.0);
    out.valid.assign(grid.size(), 0);
    const double r0 = t.r.front(), r1 = t.r.back();
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const double r = std::hypot(grid.x(i), grid.y(j));
            if (r < r0 - 1e-14 || r > r1) continue;
            const std::size_t k = grid.idx(i, j);
            auto it = std::upper_bound(t.r.begin(), t.r.end(), r);
            std::size_t hi = static_cast<std::size_t>(it - t.r.begin());
            if (hi == 0) hi = 1;
            if (hi >= t.r.size()) hi = t.r.size() - 1;
            const std::size_t lo = hi - 1;
            const double d = t.r[hi] - t.r[lo];
            const double s = (r - t.r[lo]) / d;
            if (!std::isfinite(t.m[lo]) || !std::isfinite(t.m[hi])) continue;
            const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
            const double h10 = s * (1 - s) * (1 - s);
            const double h01 = s * s * (3 - 2 * s);
            const double h11 = s * s * (s - 1);
            out.u[k] = h00 * t.v[lo] + h10 * d * t.m[lo] + h01 * t.v[hi] + h11 * d * t.m[hi];
            out.valid[k] = 1;
        }
    }
    return out;
}

}  // namespace

RadialProfile bowl_profile(const WeightFunction& w, double u0, double s_max, double h) {
    if (!(h > 0.0) || !(s_max > 10.0 * h))
        throw std::invalid_argument("bowl_profile: need h > 0 and s_max > 10h");
    if (!w.in_domain(u0)) throw std::invalid_argument("bowl_profile: u0 outside weight domain");

    RadialProfile p;
    p.weight = w;
    p.side = Signature::Euclidean;
    p.kind = ProfileKind::Bowl;

    const double pd0 = w.phi_dot(u0);
    // Series launch across the axis: x ~ s, u ~ u0 + (phi_dot/4)s^2,
    // z ~ (phi_dot/2)s removes the sin(z)/x singularity at x = 0.
    for (int k = 0; k <= 10; ++k) {
        const double s = k * h;
        push_sample(p, s, s, u0 + 0.25 * pd0 * s * s, 0.5 * pd0 * s);
    }
    EuclidState st{p.x.back(), p.u.back(), p.z.back()};
    double s = p.s.back();
    const double zcap = std::asin(1.0);  // pi/2: curve turns vertical, no longer a graph
    auto inside = [&](const EuclidState& t) {
        if (!std::isfinite(t.u) || !std::isfinite(t.z) || !w.in_domain(t.u)) return false;
        if (std::isfinite(w.z_min) && !(t.u - w.z_min > 5e-10)) return false;
        return zcap - std::fabs(t.z) > 5e-10;
    };
    while (s + h <= s_max + 1e-12) {
        EuclidState nx = rk4_euclid(st, w, h);
        if (!inside(nx)) {
            if (bisect_step(st, w, h, inside)) {
                // The bisected fraction of h is below sample resolution;
                // record it at the nominal next abscissa.
                push_sample(p, s + h, st.x, st.u, st.z);
            }
            return p;
        }
        st = nx;
        s += h;
        push_sample(p, s, st.x, st.u, st.z);
    }
    return p;
}

RadialProfile winglike_profile(const WeightFunction& w, double x1, double u1, double s_max,
                               double h) {
    if (!(x1 > 0.0) || !(u1 > 0.0)) throw std::invalid_argument("winglike_profile: need x1, u1 > 0");
    if (!(h > 0.0) || !(s_max > h)) throw std::invalid_argument("winglike_profile: bad step");
    if (!w.in_domain(u1)) throw std::invalid_argument("winglike_profile: u1 outside weight domain");

    const double z1 = std::asin(1.0);  // pi/2: vertical tangent at the neck
    auto march = [&](double dir) {
        std::vector<EuclidState> out;
        EuclidState st{x1, u1, z1};
        double s = 0.0;
        // Stop at the domain floor or when the tangent turns vertical again
        // (the turning angle has swept pi away from the neck).
        auto inside = [&](const EuclidState& t) {
            if (!std::isfinite(t.u) || !std::isfinite(t.z) || !w.in_domain(t.u)) return false;
            if (std::isfinite(w.z_min) && !(t.u - w.z_min > 5e-10)) return false;
            return std::asin(1.0) * 2.0 - std::fabs(t.z - z1) > 5e-10;
        };
        while (s + h <= 0.5 * s_max + 1e-12) {
            EuclidState nx = rk4_euclid(st, w, dir * h);
            if (!inside(nx)) {
                EuclidState fin = st;
                if (bisect_step(fin, w, dir * h, inside)) out.push_back(fin);
                return out;
            }
            if (nx.x <= 1e-6) {
                std::ostringstream os;
                os << "winglike_profile: profile collided with the rotation axis at s=" << s
                   << ", u=" << nx.u;
                throw std::runtime_error(os.str());
            }
            st = nx;
            s += h;
            out.push_back(st);
        }
        return out;
    };

    std::vector<EuclidState> fw = march(+1.0);
    std::vector<EuclidState> bw = march(-1.0);

    RadialProfile p;
    p.weight = w;
    p.side = Signature::Euclidean;
    p.kind = ProfileKind::Winglike;
    const double s0 = static_cast<double>(bw.size()) * h;
    for (std::size_t k = bw.size(); k-- > 0;)
        push_sample(p, s0 - static_cast<double>(k + 1) * h, bw[k].x, bw[k].u, bw[k].z);
    p.neck_index = static_cast<int>(p.s.size());
    push_sample(p, s0, x1, u1, z1);
    for (std::size_t k = 0; k < fw.size(); ++k)
        push_sample(p, s0 + static_cast<double>(k + 1) * h, fw[k].x, fw[k].u, fw[k].z);
    return p;
}

RadialProfile lorentz_bowl_profile(const Forcing& f, double a, double r_max, double h) {
    if (!(a > 0.0)) throw std::invalid_argument("lorentz_bowl_profile: need a > 0");
    if (f.kind == ForcingKind::AlphaOverU && !(f.alpha > 1.0))
        throw std::invalid_argument("lorentz_bowl_profile: AlphaOverU needs alpha > 1");
    if (!(h > 0.0) || !(r_max > 10.0 * h))
        throw std::invalid_argument("lorentz_bowl_profile: need h > 0 and r_max > 10h");

    RadialProfile p;
    p.forcing = f;
    p.side = Signature::Lorentzian;
    p.kind = ProfileKind::Bowl;
    const double fa = f(a);
    for (int k = 0; k <= 10; ++k) {
        const double r = k * h;
        push_sample(p, r, r, a + 0.25 * fa * r * r, 0.5 * fa * r);
    }
    LorentzState st{p.u.back(), p.z.back()};
    double r = p.s.back();
    while (r + h <= r_max + 1e-12) {
        st = rk4_lorentz(st, f, r, h);
        if (!std::isfinite(st.q) || !std::isfinite(st.u))
            throw std::runtime_error("lorentz_bowl_profile: integration blew up (causality)");
        r += h;
        push_sample(p, r, r, st.u, st.q);
    }
    return p;
}

RadialProfile lorentz_winglike_profile(const Forcing& f, double a, LightconeBranch branch,
                                       double r_max, double h) {
    if (!(a > 0.0)) throw std::invalid_argument("lorentz_winglike_profile: need a > 0");
    if (!(h > 0.0) || !(r_max > 10.0 * h))
        throw std::invalid_argument("lorentz_winglike_profile: need h > 0 and r_max > 10h");

    RadialProfile p;
    p.forcing = f;
    p.side = Signature::Lorentzian;
    p.kind = ProfileKind::Winglike;
    const double fa = f(a);
    const double sgn = branch == LightconeBranch::Down ? -1.0 : 1.0;
    // Light-cone seed u'(0) = sgn: the r^2 slope coefficient is a free
    // parameter of the degenerate IVP; c1 = f(a)/2 matches the regular-seed
    // curvature scale, and the r^3 term is forced to c2 = -sgn*2*c1*f(a).
    const double c1 = 0.5 * fa;
    const double c2 = -sgn * 2.0 * c1 * fa;
    push_sample(p, 0.0, 0.0, a, sgn * std::numeric_limits<double>::infinity());
    for (int k = 1; k <= 10; ++k) {
        const double r = k * h;
        const double g = c1 * r * r + c2 * r * r * r;
        const double up = sgn * (1.0 - g);
        const double u = a + sgn * (r - c1 * r * r * r / 3.0 - c2 * r * r * r * r / 4.0);
        push_sample(p, r, r, u, std::atanh(std::clamp(up, -1.0 + 1e-300, 1.0 - 1e-300)));
    }
    LorentzState st{p.u.back(), p.z.back()};
    double r = p.s.back();
    while (r + h <= r_max + 1e-12) {
        st = rk4_lorentz(st, f, r, h);
        if (!std::isfinite(st.q) || !std::isfinite(st.u))
            throw std::runtime_error("lorentz_winglike_profile: integration blew up (causality)");
        r += h;
        push_sample(p, r, r, st.u, st.q);
    }
    if (branch == LightconeBranch::Down) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < p.u.size(); ++k)
            if (p.u[k] < p.u[best]) best = k;
        p.min_index = static_cast<int>(best);
    }
    return p;
}

TransformedCurve transform_profile(const RadialProfile& p) {
    if (p.side != Signature::Euclidean)
        throw std::invalid_argument("transform_profile: expects a Euclidean-side profile");
    TransformedCurve c;
    c.source_kind = p.kind;
    c.lambda.reserve(p.size());
    c.theta.reserve(p.size());
    c.slope.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double ephi = std::exp(p.weight.phi(p.u[k]));
        c.lambda.push_back(ephi * p.x[k] * std::cos(p.z[k]));
        c.theta.push_back(p.weight.theta(p.u[k]));
        c.slope.push_back(std::sin(p.z[k]));
    }
    c.singular = singular_set(p.z);
    return c;
}

GraphSurface profile_to_graph(const RadialProfile& p, const Grid2D& grid) {
    const bool euclid = p.side == Signature::Euclidean;
    std::size_t from = 0, to = p.size();
    bool inc = true;
    for (std::size_t i = 1; i < to; ++i)
        if (p.x[i] <= p.x[i - 1]) { inc = false; break; }
    if (!inc && p.neck_index >= 0) {
        // Winglike profiles are two branches over radius; serve the outer one.
        from = static_cast<std::size_t>(p.neck_index);
    }
    RadialTable t;
    for (std::size_t k = from; k < to; ++k) {
        t.r.push_back(p.x[k]);
        t.v.push_back(p.u[k]);
        t.m.push_back(euclid ? std::tan(p.z[k]) : std::tanh(p.z[k]));
    }
    return hermite_graph(t, grid, p.side);
}

GraphSurface profile_to_graph(const TransformedCurve& c, const Grid2D& grid, Signature sig) {
    RadialTable t;
    t.r = c.lambda;
    t.v = c.theta;
    t.m = c.slope;
    if (t.r.size() >= 2 && t.r.back() < t.r.front()) {
        std::reverse(t.r.begin(), t.r.end());
        std::reverse(t.v.begin(), t.v.end());
        std::reverse(t.m.begin(), t.m.end());
    }
    return hermite_graph(t, grid, sig);
}

}  // namespace calabi
