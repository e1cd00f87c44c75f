#include "calabi/stencils.hpp"

#include <cmath>

namespace calabi {

namespace {

// Differentiates one grid line (a run of equally spaced samples) segment by
// segment, where segments are maximal runs of valid nodes.
struct LineDiff {
    const double* f;
    const uint8_t* ok;  // may be null
    int n;
    int stride;
    double h;

    bool valid_at(int t) const { return ok == nullptr || ok[t * stride] != 0; }
    double at(int t) const { return f[t * stride]; }

    template <typename Emit>
    void run(Emit&& emit) const {
        int t = 0;
        while (t < n) {
            if (!valid_at(t)) { ++t; continue; }
            int a = t;
            while (t < n && valid_at(t)) ++t;
            int b = t - 1;
            segment(a, b, emit);
        }
    }

    template <typename Emit>
    void segment(int a, int b, Emit&& emit) const {
        const int len = b - a + 1;
        if (len < 3) return;  // cannot form second-order stencils
        for (int i = a + 1; i < b; ++i) {
            const double d1 = (at(i + 1) - at(i - 1)) / (2 * h);
            const double d2 = (at(i + 1) - 2 * at(i) + at(i - 1)) / (h * h);
            emit(i, d1, d2, false);
        }
        // One-sided second-order ends.
        {
            const double d1 = (-3 * at(a) + 4 * at(a + 1) - at(a + 2)) / (2 * h);
            const double d2 = (len >= 4)
                ? (2 * at(a) - 5 * at(a + 1) + 4 * at(a + 2) - at(a + 3)) / (h * h)
                : (at(a) - 2 * at(a + 1) + at(a + 2)) / (h * h);
            emit(a, d1, d2, true);
        }
        {
            const double d1 = (3 * at(b) - 4 * at(b - 1) + at(b - 2)) / (2 * h);
            const double d2 = (len >= 4)
                ? (2 * at(b) - 5 * at(b - 1) + 4 * at(b - 2) - at(b - 3)) / (h * h)
                : (at(b) - 2 * at(b - 1) + at(b - 2)) / (h * h);
            emit(b, d1, d2, true);
        }
    }
};

}  // namespace

DerivativeFields gradient_and_hessian(const Grid2D& g, const Field& f, const Mask& mask) {
    const std::size_t n = g.size();
    DerivativeFields out;
    out.fx.assign(n, 0.0);
    out.fy.assign(n, 0.0);
    out.fxx.assign(n, 0.0);
    out.fxy.assign(n, 0.0);
    out.fyy.assign(n, 0.0);
    out.boundary.assign(n, 0);
    Mask vx(n, 0), vy(n, 0), vxy(n, 0);
    const uint8_t* mk = mask.empty() ? nullptr : mask.data();

    for (int j = 0; j < g.ny; ++j) {
        LineDiff line{f.data() + g.idx(0, j), mk ? mk + g.idx(0, j) : nullptr, g.nx, 1, g.dx};
        line.run([&](int i, double d1, double d2, bool onesided) {
            const std::size_t k = g.idx(i, j);
            out.fx[k] = d1;
            out.fxx[k] = d2;
            vx[k] = 1;
            if (onesided) out.boundary[k] = 1;
        });
    }
    for (int i = 0; i < g.nx; ++i) {
        LineDiff line{f.data() + g.idx(i, 0), mk ? mk + g.idx(i, 0) : nullptr, g.ny, g.nx, g.dy};
        line.run([&](int j, double d1, double d2, bool onesided) {
            const std::size_t k = g.idx(i, j);
            out.fy[k] = d1;
            out.fyy[k] = d2;
            vy[k] = 1;
            if (onesided) out.boundary[k] = 1;
        });
    }
    // Mixed derivative: y-stencil applied to fx, restricted to where fx exists.
    for (int i = 0; i < g.nx; ++i) {
        LineDiff line{out.fx.data() + g.idx(i, 0), vx.data() + g.idx(i, 0), g.ny, g.nx, g.dy};
        line.run([&](int j, double d1, double, bool onesided) {
            const std::size_t k = g.idx(i, j);
            out.fxy[k] = d1;
            vxy[k] = 1;
            if (onesided) out.boundary[k] = 1;
        });
    }

    out.valid.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) out.valid[k] = vx[k] && vy[k] && vxy[k];
    return out;
}

Mask dilate_boundary(const Grid2D& g, const Mask& valid, const Mask& boundary) {
    Mask out(g.size(), 0);
    auto bad = [&](int i, int j) {
        if (i < 0 || j < 0 || i >= g.nx || j >= g.ny) return true;
        const std::size_t k = g.idx(i, j);
        if (!valid.empty() && !valid[k]) return true;
        return !boundary.empty() && boundary[k] != 0;
    };
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (bad(i, j) || bad(i - 1, j) || bad(i + 1, j) || bad(i, j - 1) || bad(i, j + 1))
                out[g.idx(i, j)] = 1;
    return out;
}

double masked_max(const Grid2D& g, const Field& field, const Mask& valid, const Mask& boundary,
                  bool include_boundary) {
    double m = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!valid.empty() && !valid[k]) continue;
        if (!include_boundary && !boundary.empty() && boundary[k]) continue;
        m = std::max(m, std::fabs(field[k]));
    }
    return m;
}

double masked_rms(const Grid2D& g, const Field& field, const Mask& valid, const Mask& boundary,
                  bool include_boundary) {
    double s = 0.0;
    std::size_t cnt = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!valid.empty() && !valid[k]) continue;
        if (!include_boundary && !boundary.empty() && boundary[k]) continue;
        s += field[k] * field[k];
        ++cnt;
    }
    return cnt ? std::sqrt(s / cnt) : 0.0;
}

}  // namespace calabi
