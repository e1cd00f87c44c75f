#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "calabi/diffgeom.hpp"

#include <cmath>

using namespace calabi;

namespace {

Grid2D centered(double half, double h) {
    const int n = static_cast<int>(std::floor(half / h + 1e-9));
    return make_grid(-n * h, -n * h, h, h, 2 * n + 1, 2 * n + 1);
}

double max_valid(const Grid2D& g, const Field& f, const Mask& valid) {
    double m = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (valid.empty() || valid[k]) m = std::max(m, std::fabs(f[k]));
    return m;
}

}  // namespace

TEST_CASE("stencils are exact on quadratics") {
    Grid2D g = centered(1.0, 0.125);
    Field f = sample(g, [](double x, double y) {
        return 0.3 * x * x + 0.1 * x * y + 0.2 * y * y + 0.05 * x - 0.07 * y + 2.0;
    });
    DerivativeFields d = gradient_and_hessian(g, f);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t k = g.idx(i, j);
            REQUIRE(d.valid[k]);
            const double x = g.x(i), y = g.y(j);
            CHECK(d.fx[k] == doctest::Approx(0.6 * x + 0.1 * y + 0.05).epsilon(1e-12));
            CHECK(d.fy[k] == doctest::Approx(0.1 * x + 0.4 * y - 0.07).epsilon(1e-12));
            CHECK(d.fxx[k] == doctest::Approx(0.6).epsilon(1e-12));
            CHECK(d.fxy[k] == doctest::Approx(0.1).epsilon(1e-12));
            CHECK(d.fyy[k] == doctest::Approx(0.4).epsilon(1e-12));
        }
}

TEST_CASE("stencil truncation on sin(x) at dx = 0.01") {
    Grid2D g = make_grid(0.0, 0.0, 0.01, 0.01, 201, 5);
    Field f = sample(g, [](double x, double) { return std::sin(x); });
    DerivativeFields d = gradient_and_hessian(g, f);
    double m = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i + 1 < g.nx; ++i)
            m = std::max(m, std::fabs(d.fx[g.idx(i, j)] - std::cos(g.x(i))));
    CHECK(m <= 2e-5);
}

TEST_CASE("dilate_boundary marks the ring next to invalid or one-sided nodes") {
    Grid2D g = make_grid(0.0, 0.0, 1.0, 1.0, 7, 7);
    Mask valid(g.size(), 1);
    valid[g.idx(3, 3)] = 0;
    Mask boundary(g.size(), 0);
    boundary[g.idx(5, 1)] = 1;
    Mask deep = dilate_boundary(g, valid, boundary);
    CHECK(deep[g.idx(3, 3)] == 1);
    CHECK(deep[g.idx(2, 3)] == 1);
    CHECK(deep[g.idx(3, 4)] == 1);
    CHECK(deep[g.idx(5, 1)] == 1);
    CHECK(deep[g.idx(4, 1)] == 1);
    CHECK(deep[g.idx(0, 3)] == 1);  // grid edge counts
    CHECK(deep[g.idx(2, 2)] == 0);  // diagonal neighbor is not dilated
    CHECK(deep[g.idx(3, 5)] == 0);
}

TEST_CASE("geometry of the flat and tilted planes") {
    Grid2D g = centered(1.0, 0.25);
    {
        GeometryFields geo = geometry(make_graph(g, Field(g.size(), 3.0), Signature::Euclidean));
        CHECK(max_valid(g, geo.H, geo.valid) == 0.0);
        CHECK(max_valid(g, geo.K, geo.valid) == 0.0);
        for (std::size_t k = 0; k < g.size(); ++k) {
            CHECK(geo.W[k] == doctest::Approx(1.0));
            CHECK(geo.Nz[k] == doctest::Approx(1.0));
        }
    }
    {
        GeometryFields geo =
            geometry(make_graph(g, sample(g, [](double x, double) { return x; }),
                                Signature::Euclidean));
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (!geo.valid[k]) continue;
            CHECK(geo.W[k] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
            CHECK(geo.E[k] == doctest::Approx(2.0).epsilon(1e-12));
            CHECK(geo.F[k] == doctest::Approx(0.0));
            CHECK(geo.G[k] == doctest::Approx(1.0));
            CHECK(std::fabs(geo.H[k]) < 1e-12);
            CHECK(std::fabs(geo.K[k]) < 1e-12);
        }
    }
}

TEST_CASE("Euclidean curvatures match closed forms on a quadratic") {
    // u = 0.3x^2 + 0.1xy + 0.2y^2: at the origin H = (uxx+uyy)/2, K = det.
    Grid2D g = centered(0.5, 0.05);
    GeometryFields geo = geometry(make_graph(
        g, sample(g, [](double x, double y) { return 0.3 * x * x + 0.1 * x * y + 0.2 * y * y; }),
        Signature::Euclidean));
    const std::size_t k0 = g.idx(g.nx / 2, g.ny / 2);
    // H here is the scalar with vector mean curvature H*N, i.e. trace(II g^-1).
    CHECK(geo.H[k0] == doctest::Approx(-(0.6 + 0.4)).epsilon(1e-10));
    CHECK(geo.K[k0] == doctest::Approx(0.6 * 0.4 - 0.1 * 0.1).epsilon(1e-10));
}

TEST_CASE("Lorentzian geometry of a spacelike paraboloid") {
    // ubar = (x^2+y^2)/4 on a disk: spacelike, Wbar = sqrt(1 - r^2/4).
    Grid2D g = centered(0.9, 0.05);
    GraphSurface s = make_graph(
        g, sample(g, [](double x, double y) { return 0.25 * (x * x + y * y); }),
        Signature::Lorentzian);
    GeometryFields geo = geometry(s);
    const std::size_t k0 = g.idx(g.nx / 2, g.ny / 2);
    CHECK(geo.W[k0] == doctest::Approx(1.0).epsilon(1e-12));
    // intrinsic Gauss curvature K = -det(II)/det(I): -1/4 at the apex
    CHECK(geo.K[k0] == doctest::Approx(-0.25).epsilon(1e-9));
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!geo.valid[k]) continue;
        const double r2 = g.x(static_cast<int>(k % g.nx)) * g.x(static_cast<int>(k % g.nx)) +
                          g.y(static_cast<int>(k / g.nx)) * g.y(static_cast<int>(k / g.nx));
        CHECK(geo.W[k] == doctest::Approx(std::sqrt(1.0 - r2 / 4.0)).epsilon(1e-12));
    }
}

TEST_CASE("Gauss map is exactly unit in both signatures") {
    Grid2D g = centered(0.8, 0.1);
    {
        GeometryFields geo = geometry(make_graph(
            g, sample(g, [](double x, double y) { return 0.2 * x * x - 0.1 * y * y + 0.3 * x; }),
            Signature::Euclidean));
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (!geo.valid[k]) continue;
            const double n2 = geo.Nx[k] * geo.Nx[k] + geo.Ny[k] * geo.Ny[k] + geo.Nz[k] * geo.Nz[k];
            CHECK(std::fabs(n2 - 1.0) <= 1e-12);
        }
    }
    {
        GeometryFields geo = geometry(make_graph(
            g, sample(g, [](double x, double y) { return 0.25 * (x * x + y * y); }),
            Signature::Lorentzian));
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (!geo.valid[k]) continue;
            const double n2 = geo.Nx[k] * geo.Nx[k] + geo.Ny[k] * geo.Ny[k] - geo.Nz[k] * geo.Nz[k];
            CHECK(std::fabs(n2 + 1.0) <= 1e-12);  // timelike unit
            CHECK(geo.Nz[k] > 0.0);               // future-pointing
        }
    }
}

TEST_CASE("non-spacelike input is rejected") {
    Grid2D g = centered(1.0, 0.25);
    GraphSurface s = make_graph(g, sample(g, [](double x, double) { return 2.0 * x; }),
                                Signature::Lorentzian);
    CHECK_THROWS_AS(geometry(s), std::runtime_error);
}

TEST_CASE("graph PDE residual: trivial solutions and constants") {
    Grid2D g = centered(1.0, 0.125);
    GraphSurface flat = make_graph(g, Field(g.size(), 2.0), Signature::Euclidean);
    CHECK(pde_residual(flat, minimal_weight()).max_interior() == 0.0);
    // A horizontal plane is not a translating soliton: residual is phi_dot*W^2 = 1.
    ResidualField r = pde_residual(flat, linear_weight(1.0));
    CHECK(r.max_interior() == doctest::Approx(1.0));
}

TEST_CASE("graph PDE residual is second order on the Grim Reaper") {
    // u = -log cos y solves the soliton equation with weight e^u.
    auto residual_at = [](double h) {
        Grid2D g = make_grid(-0.5, -1.2, h, h, static_cast<int>(1.0 / h) + 1,
                             static_cast<int>(2.4 / h) + 1);
        GraphSurface s = make_graph(
            g, sample(g, [](double, double y) { return -std::log(std::cos(y)); }),
            Signature::Euclidean);
        return pde_residual(s, linear_weight(1.0)).max_interior();
    };
    const double r1 = residual_at(0.01);
    const double r2 = residual_at(0.005);
    CHECK(r1 / r2 > 3.5);
    CHECK(r1 / r2 < 4.5);
    CHECK(r2 < 5e-4);
}

TEST_CASE("Lorentzian PDE residual vanishes for the light-cone-free plane") {
    Grid2D g = centered(1.0, 0.125);
    GraphSurface s = make_graph(g, sample(g, [](double x, double) { return 0.5 * x; }),
                                Signature::Lorentzian);
    CHECK(pde_residual(s, minimal_weight()).max_interior() == 0.0);
}
