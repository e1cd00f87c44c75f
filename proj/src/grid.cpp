#include "calabi/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace calabi {

Grid2D make_grid(double x0, double y0, double dx, double dy, int nx, int ny) {
    if (!(dx > 0.0) || !(dy > 0.0)) throw std::invalid_argument("grid spacings must be positive");
    if (nx < 3 || ny < 3) throw std::invalid_argument("grid needs at least 3 nodes per side");
    return Grid2D{x0, y0, dx, dy, nx, ny};
}

Grid2D make_grid_span(double x0, double x1, int nx, double y0, double y1, int ny) {
    if (nx < 3 || ny < 3) throw std::invalid_argument("grid needs at least 3 nodes per side");
    if (!(x1 > x0) || !(y1 > y0)) throw std::invalid_argument("grid span must be nonempty");
    return make_grid(x0, y0, (x1 - x0) / (nx - 1), (y1 - y0) / (ny - 1), nx, ny);
}

GraphSurface make_graph(const Grid2D& g, Field u, Signature sig, Mask valid) {
    if (u.size() != g.size()) throw std::invalid_argument("height field size mismatch");
    if (!valid.empty() && valid.size() != g.size())
        throw std::invalid_argument("validity mask size mismatch");
    return GraphSurface{g, std::move(u), sig, std::move(valid)};
}

GraphSurface crop_valid_rect(const GraphSurface& s) {
    int i0 = 0, j0 = 0, i1 = s.grid.nx - 1, j1 = s.grid.ny - 1;
    auto all_valid = [&](int a0, int b0, int a1, int b1) {
        for (int j = b0; j <= b1; ++j)
            for (int i = a0; i <= a1; ++i)
                if (!s.node_valid(i, j)) return false;
        return true;
    };
    while (i1 - i0 >= 2 && j1 - j0 >= 2 && !all_valid(i0, j0, i1, j1)) {
        ++i0; ++j0; --i1; --j1;
    }
    if (i1 - i0 < 2 || j1 - j0 < 2 || !all_valid(i0, j0, i1, j1))
        throw std::runtime_error("crop_valid_rect: no fully valid subrectangle");
    Grid2D g = s.grid;
    g.x0 = s.grid.x(i0);
    g.y0 = s.grid.y(j0);
    g.nx = i1 - i0 + 1;
    g.ny = j1 - j0 + 1;
    Field u(g.size());
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) u[g.idx(i, j)] = s.u[s.grid.idx(i + i0, j + j0)];
    return GraphSurface{g, std::move(u), s.signature, {}};
}

bool bilinear(const Grid2D& g, const Field& f, const Mask& valid, double x, double y,
              double& out) {
    const double fx = (x - g.x0) / g.dx;
    const double fy = (y - g.y0) / g.dy;
    int i = static_cast<int>(std::floor(fx));
    int j = static_cast<int>(std::floor(fy));
    i = std::clamp(i, 0, g.nx - 2);
    j = std::clamp(j, 0, g.ny - 2);
    const double tx = fx - i, ty = fy - j;
    if (tx < -1e-12 || tx > 1.0 + 1e-12 || ty < -1e-12 || ty > 1.0 + 1e-12) return false;
    auto ok = [&](int a, int b) { return valid.empty() || valid[g.idx(a, b)] != 0; };
    if (!ok(i, j) || !ok(i + 1, j) || !ok(i, j + 1) || !ok(i + 1, j + 1)) return false;
    const double f00 = f[g.idx(i, j)], f10 = f[g.idx(i + 1, j)];
    const double f01 = f[g.idx(i, j + 1)], f11 = f[g.idx(i + 1, j + 1)];
    out = (1 - tx) * (1 - ty) * f00 + tx * (1 - ty) * f10 + (1 - tx) * ty * f01 + tx * ty * f11;
    return true;
}

}  // namespace calabi
