#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "flatlab/error.hpp"

namespace flatlab {

using Point = std::array<double, 2>;

/// Uniform rectangular node grid. Node (i,j) sits at
/// (x0 + i*hx, y0 + j*hy) for 0 <= i < nx, 0 <= j < ny.
struct Grid2 {
    int nx = 0;
    int ny = 0;
    double x0 = 0.0;
    double y0 = 0.0;
    double hx = 0.0;
    double hy = 0.0;

    Grid2() = default;
    Grid2(int nx_, int ny_, double x0_, double y0_, double hx_, double hy_)
        : nx(nx_), ny(ny_), x0(x0_), y0(y0_), hx(hx_), hy(hy_) {
        if (nx < 3 || ny < 3)
            throw InputError("Grid2: need at least 3 nodes per axis, got " +
                             std::to_string(nx) + "x" + std::to_string(ny));
        if (!(hx > 0.0) || !(hy > 0.0))
            throw InputError("Grid2: spacings must be positive");
    }

    /// Grid covering [xa,xb] x [ya,yb] with spacing as close to h as the
    /// node counts allow (exact when the extents are integer multiples of h).
    static Grid2 over(double xa, double ya, double xb, double yb, double h) {
        int nx = static_cast<int>(std::lround((xb - xa) / h)) + 1;
        int ny = static_cast<int>(std::lround((yb - ya) / h)) + 1;
        return Grid2(nx, ny, xa, ya, (xb - xa) / (nx - 1), (yb - ya) / (ny - 1));
    }

    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }

    double x(int i) const { return x0 + i * hx; }
    double y(int j) const { return y0 + j * hy; }
    Point point(int i, int j) const { return {x(i), y(j)}; }

    double xmax() const { return x(nx - 1); }
    double ymax() const { return y(ny - 1); }
    double max_spacing() const { return std::max(hx, hy); }
    double diameter() const { return std::hypot(xmax() - x0, ymax() - y0); }

    bool same_layout(const Grid2& o, double tol = 1e-12) const {
        return nx == o.nx && ny == o.ny && std::abs(x0 - o.x0) <= tol &&
               std::abs(y0 - o.y0) <= tol && std::abs(hx - o.hx) <= tol &&
               std::abs(hy - o.hy) <= tol;
    }

    /// Sub-grid obtained by dropping `mi` node columns on each side and
    /// `mj` node rows on each side.
    Grid2 eroded(int mi, int mj) const {
        int enx = nx - 2 * mi, eny = ny - 2 * mj;
        if (enx < 3 || eny < 3)
            throw InputError("Grid2::eroded: erosion by " + std::to_string(mi) + "," +
                             std::to_string(mj) + " cells empties a " + std::to_string(nx) +
                             "x" + std::to_string(ny) + " grid (need >= 3 nodes per axis)");
        return Grid2(enx, eny, x(mi), y(mj), hx, hy);
    }
};

}  // namespace flatlab
