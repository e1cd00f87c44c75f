#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "calabi/potential.hpp"
#include "calabi/scenarios.hpp"
#include "calabi/transform.hpp"

#include <cmath>

using namespace calabi;

namespace {

Grid2D centered(double half, double h) {
    const int n = static_cast<int>(std::floor(half / h + 1e-9));
    return make_grid(-n * h, -n * h, h, h, 2 * n + 1, 2 * n + 1);
}

}  // namespace

TEST_CASE("prescribed Hessian triples at pinned points") {
    Grid2D g = centered(1.0, 0.25);
    {
        HessianFields h = hessian_fields(make_graph(g, Field(g.size(), 0.0), Signature::Euclidean),
                                         minimal_weight());
        for (std::size_t k = 0; k < g.size(); ++k) {
            CHECK(h.Hxx[k] == doctest::Approx(1.0));
            CHECK(h.Hxy[k] == doctest::Approx(0.0));
            CHECK(h.Hyy[k] == doctest::Approx(1.0));
        }
    }
    {
        HessianFields h = hessian_fields(
            make_graph(g, sample(g, [](double x, double) { return x; }), Signature::Euclidean),
            minimal_weight());
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (!h.valid[k]) continue;
            CHECK(h.Hxx[k] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
            CHECK(h.Hxy[k] == doctest::Approx(0.0));
            CHECK(h.Hyy[k] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
        }
    }
    {
        HessianFields h = hessian_fields(
            make_graph(g, Field(g.size(), 0.0), Signature::Lorentzian), minimal_weight());
        for (std::size_t k = 0; k < g.size(); ++k) {
            CHECK(h.Hxx[k] == doctest::Approx(1.0));
            CHECK(h.Hxy[k] == doctest::Approx(0.0));
            CHECK(h.Hyy[k] == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("Hessian triple is symmetric positive definite (convex potential)") {
    GraphSurface s = soliton_bowl_graph(0.05, 0.8);
    HessianFields h = hessian_fields(s, linear_weight(1.0));
    for (std::size_t k = 0; k < h.grid.size(); ++k) {
        if (!h.valid[k]) continue;
        CHECK(h.Hxx[k] > 0.0);
        CHECK(h.Hxx[k] * h.Hyy[k] - h.Hxy[k] * h.Hxy[k] > 0.0);
    }
}

TEST_CASE("potential gradient integration is exact for constant Hessians") {
    Grid2D g = make_grid(0.0, 0.0, 0.1, 0.1, 11, 11);
    {
        HessianFields h = hessian_fields(make_graph(g, Field(g.size(), 0.0), Signature::Euclidean),
                                         minimal_weight());
        PotentialGradient p = integrate_potential_gradient(h);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const std::size_t k = g.idx(i, j);
                CHECK(p.Px[k] == doctest::Approx(g.x(i)).epsilon(1e-14));
                CHECK(p.Py[k] == doctest::Approx(g.y(j)).epsilon(1e-14));
                CHECK(p.compat_residual[k] <= 1e-14);
            }
    }
    {
        HessianFields h = hessian_fields(
            make_graph(g, sample(g, [](double x, double) { return x; }), Signature::Euclidean),
            minimal_weight());
        PotentialGradient p = integrate_potential_gradient(h);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const std::size_t k = g.idx(i, j);
                CHECK(p.Px[k] == doctest::Approx(std::sqrt(2.0) * g.x(i)).epsilon(1e-12));
                CHECK(p.Py[k] == doctest::Approx(g.y(j) / std::sqrt(2.0)).epsilon(1e-12));
            }
    }
}

TEST_CASE("disconnected valid region is rejected") {
    Grid2D g = make_grid(0.0, 0.0, 1.0, 1.0, 5, 5);
    HessianFields h = hessian_fields(make_graph(g, Field(g.size(), 0.0), Signature::Euclidean),
                                     minimal_weight());
    for (int j = 0; j < g.ny; ++j) h.valid[g.idx(2, j)] = 0;  // cut the grid in two
    CHECK_THROWS_AS(integrate_potential_gradient(h), std::runtime_error);
}

TEST_CASE("integrability witness: u = x^2 y has an O(1) curl, solutions O(h^2)") {
    auto witness_curl = [](double h) {
        Grid2D g = make_grid(0.0, 0.0, h, h, static_cast<int>(1.0 / h) + 1,
                             static_cast<int>(1.0 / h) + 1);
        GraphSurface s = make_graph(g, sample(g, [](double x, double y) { return x * x * y; }),
                                    Signature::Euclidean);
        return hessian_curl_max(hessian_fields(s, minimal_weight()));
    };
    const double c1 = witness_curl(0.02);
    const double c2 = witness_curl(0.01);
    CHECK(c1 > 0.5);
    CHECK(c2 > 0.5);  // bounded below, not shrinking with h
    CHECK(c1 / c2 < 1.5);

    auto solution_curl = [](double h) {
        GraphSurface s = soliton_bowl_graph(h, 0.8);
        return hessian_curl_max(hessian_fields(s, linear_weight(1.0)));
    };
    const double s1 = solution_curl(0.05);
    const double s2 = solution_curl(0.025);
    CHECK(s1 / s2 > 3.0);
    CHECK(s1 / s2 < 5.0);
}

TEST_CASE("plane identity: forward transform of u=0 is the identity map") {
    // anchor the grid corner at the origin so the potential gauge constant
    // vanishes and the map is the identity on the nose
    Grid2D g = make_grid(0.0, 0.0, 1.0 / 16.0, 1.0 / 16.0, 33, 33);
    CalabiPair p = forward_transform(make_graph(g, Field(g.size(), 0.0), Signature::Euclidean),
                                     minimal_weight());
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t k = g.idx(i, j);
            CHECK(std::fabs(p.Ix[k] - g.x(i)) <= 1e-12);
            CHECK(std::fabs(p.Iy[k] - g.y(j)) <= 1e-12);
            CHECK(std::fabs(p.Iz[k]) <= 1e-12);
        }
    CHECK(p.dual.kind == WeightKind::Minimal);
}

TEST_CASE("image normal is exactly unit timelike on forward transforms") {
    Grid2D g = centered(0.8, 0.05);
    CalabiPair p = forward_transform(
        make_graph(g, sample(g, [](double x, double y) { return 0.3 * x * x + 0.2 * y * y; }),
                   Signature::Euclidean),
        minimal_weight());
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!p.valid[k]) continue;
        const double q = p.Nx[k] * p.Nx[k] + p.Ny[k] * p.Ny[k] - p.Nz[k] * p.Nz[k];
        CHECK(std::fabs(q + 1.0) <= 1e-12);
    }
}

TEST_CASE("tilted plane maps to the spacelike graph X/sqrt(2)") {
    Grid2D g = make_grid(0.0, 0.0, 1.0 / 16.0, 1.0 / 16.0, 33, 33);
    CalabiPair p = forward_transform(
        make_graph(g, sample(g, [](double x, double) { return x; }), Signature::Euclidean),
        minimal_weight());
    ResampledImage r = resample_image_graph(p);
    const Grid2D& rg = r.surface.grid;
    for (int j = 1; j + 1 < rg.ny; ++j)
        for (int i = 1; i + 1 < rg.nx; ++i) {
            if (!r.surface.node_valid(i, j)) continue;
            CHECK(std::fabs(r.surface.u[rg.idx(i, j)] - rg.x(i) / std::sqrt(2.0)) <= 1e-10);
        }
    // the resampled image is strictly spacelike
    GeometryFields geo = geometry(r.surface);
    for (std::size_t k = 0; k < rg.size(); ++k)
        if (geo.valid[k]) CHECK(geo.W[k] > 0.0);
}

TEST_CASE("inverse of the tilted spacelike plane has slope 1 up to gauge") {
    Grid2D g = centered(1.0, 1.0 / 16.0);
    CalabiPair p = inverse_transform(
        make_graph(g, sample(g, [](double x, double) { return x / std::sqrt(2.0); }),
                   Signature::Lorentzian),
        minimal_weight());
    ResampledImage r = resample_image_graph(p);
    const Grid2D& rg = r.surface.grid;
    double c = 0.0;
    int cn = 0;
    for (int j = 0; j < rg.ny; ++j)
        for (int i = 0; i < rg.nx; ++i)
            if (r.surface.node_valid(i, j)) { c += r.surface.u[rg.idx(i, j)] - rg.x(i); ++cn; }
    REQUIRE(cn > 0);
    c /= cn;
    for (int j = 0; j < rg.ny; ++j)
        for (int i = 0; i < rg.nx; ++i)
            if (r.surface.node_valid(i, j))
                CHECK(std::fabs(r.surface.u[rg.idx(i, j)] - rg.x(i) - c) <= 1e-10);
}

TEST_CASE("round trip reproduces the soliton bowl up to gauge motions") {
    // The potential is unique modulo linear polynomials, so the composed
    // map returns the source translated; quotient by the fitted shift.
    auto roundtrip_err = [](double h) {
        GraphSurface s = soliton_bowl_graph(h, 0.8);
        CalabiPair fwd = forward_transform(s, linear_weight(1.0));
        ResampledImage ri = resample_image_graph(fwd);
        CalabiPair inv = inverse_transform(ri.surface, dual_weight(linear_weight(1.0)));
        ResampledImage back = resample_image_graph(inv);
        const Grid2D& bg = back.surface.grid;
        int bi = -1, bj = -1;
        double bu = 1e300;
        for (int j = 1; j + 1 < bg.ny; ++j)
            for (int i = 1; i + 1 < bg.nx; ++i)
                if (back.surface.node_valid(i, j) && back.surface.u[bg.idx(i, j)] < bu) {
                    bu = back.surface.u[bg.idx(i, j)];
                    bi = i;
                    bj = j;
                }
        REQUIRE(bi > 0);
        auto U = [&](int i, int j) { return back.surface.u[bg.idx(i, j)]; };
        const double a =
            bg.x(bi) - bg.dx * 0.5 * (U(bi + 1, bj) - U(bi - 1, bj)) /
                           (U(bi + 1, bj) - 2 * U(bi, bj) + U(bi - 1, bj));
        const double b =
            bg.y(bj) - bg.dy * 0.5 * (U(bi, bj + 1) - U(bi, bj - 1)) /
                           (U(bi, bj + 1) - 2 * U(bi, bj) + U(bi, bj - 1));
        double c = 0.0;
        int cn = 0;
        for (int j = 0; j < bg.ny; ++j)
            for (int i = 0; i < bg.nx; ++i) {
                if (!back.surface.node_valid(i, j)) continue;
                double ref;
                if (!bilinear(s.grid, s.u, s.valid, bg.x(i) - a, bg.y(j) - b, ref)) continue;
                c += back.surface.u[bg.idx(i, j)] - ref;
                ++cn;
            }
        REQUIRE(cn > 100);
        c /= cn;
        double m = 0.0;
        for (int j = 0; j < bg.ny; ++j)
            for (int i = 0; i < bg.nx; ++i) {
                if (!back.surface.node_valid(i, j)) continue;
                double ref;
                if (!bilinear(s.grid, s.u, s.valid, bg.x(i) - a, bg.y(j) - b, ref)) continue;
                m = std::max(m, std::fabs(back.surface.u[bg.idx(i, j)] - ref - c));
            }
        return m;
    };
    const double e1 = roundtrip_err(0.02);
    const double e2 = roundtrip_err(0.01);
    CHECK(e1 <= 5e-4);
    CHECK(e1 / e2 > 2.2);  // second order, with interpolation noise allowed
}

TEST_CASE("resample rejects folded projections") {
    Grid2D g = centered(0.5, 0.125);
    CalabiPair p = forward_transform(make_graph(g, Field(g.size(), 0.0), Signature::Euclidean),
                                     minimal_weight());
    // Corrupt the projected points so one cell folds over itself.
    const std::size_t k = g.idx(g.nx / 2, g.ny / 2);
    p.Ix[k] += 3.0 * g.dx;
    CHECK_THROWS_WITH_AS(resample_image_graph(p), doctest::Contains("fold"), std::runtime_error);
}

TEST_CASE("verify_pair on the identity pair is exact") {
    Grid2D g = centered(1.0, 1.0 / 16.0);
    CalabiPair p = forward_transform(make_graph(g, Field(g.size(), 0.0), Signature::Euclidean),
                                     minimal_weight());
    ResampledImage r = resample_image_graph(p);
    std::map<std::string, double> tol;
    for (const auto& name : {"hh_max", "hh_rms", "kk_max", "kk_rms", "conformal_max",
                             "dual_pde_max", "curl_max", "compat_max", "gaussmap_defect"})
        tol[name] = 1e-12;
    InvariantReport rep = verify_pair(p, r, tol);
    CHECK(rep.all_pass());
    for (const auto& e : rep.entries) CHECK(e.value <= 1e-12);
}

TEST_CASE("report plumbing: entries carry value and tolerance") {
    InvariantReport rep;
    rep.add("alpha", 0.5, 1.0);
    rep.add("beta", 2.0, 1.0);
    CHECK(rep.find("alpha") != nullptr);
    CHECK(rep.find("alpha")->pass);
    CHECK_FALSE(rep.find("beta")->pass);
    CHECK(rep.value_of("beta") == doctest::Approx(2.0));
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.find("missing") == nullptr);
}

TEST_CASE("singular set flags vertical tangents only") {
    std::vector<double> z = {0.0, 0.3, 1.2, std::asin(1.0), 1.2, 0.3};
    std::vector<int> s = singular_set(z);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == 3);
    CHECK(singular_set({0.1, 0.1, 0.1}).empty());
}
