#ifndef CALABI_GRID_HPP
#define CALABI_GRID_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace calabi {

using Field = std::vector<double>;
using Mask = std::vector<uint8_t>;

/// Rectangular node grid; values are stored row-major, index = j*nx + i.
struct Grid2D {
    double x0 = 0.0, y0 = 0.0;
    double dx = 1.0, dy = 1.0;
    int nx = 3, ny = 3;

    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    double x(int i) const { return x0 + i * dx; }
    double y(int j) const { return y0 + j * dy; }
    bool on_border(int i, int j) const { return i == 0 || j == 0 || i == nx - 1 || j == ny - 1; }
};

/// Validates spacings and node counts; throws std::invalid_argument.
Grid2D make_grid(double x0, double y0, double dx, double dy, int nx, int ny);
/// Grid spanning [x0,x1] x [y0,y1] with nx x ny nodes.
Grid2D make_grid_span(double x0, double x1, int nx, double y0, double y1, int ny);

enum class Signature { Euclidean, Lorentzian };

/// A scalar height field on a grid; Lorentzian surfaces must be spacelike
/// (u_x^2 + u_y^2 < 1) at every valid node.
struct GraphSurface {
    Grid2D grid;
    Field u;
    Signature signature = Signature::Euclidean;
    Mask valid;  // per-node; empty means all valid

    bool node_valid(int i, int j) const {
        return valid.empty() || valid[grid.idx(i, j)] != 0;
    }
};

GraphSurface make_graph(const Grid2D& g, Field u, Signature sig, Mask valid = {});

/// Samples f(x, y) on the grid.
template <typename F>
Field sample(const Grid2D& g, F&& f) {
    Field out(g.size());
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) out[g.idx(i, j)] = f(g.x(i), g.y(j));
    return out;
}

/// Largest centered fully-valid subrectangle of a masked graph, shrunk one
/// ring at a time. Throws if nothing remains.
GraphSurface crop_valid_rect(const GraphSurface& s);

/// Bilinear interpolation of a grid field; returns false when (x,y) falls
/// outside the grid or touches invalid nodes.
bool bilinear(const Grid2D& g, const Field& f, const Mask& valid, double x, double y,
              double& out);

}  // namespace calabi

#endif
