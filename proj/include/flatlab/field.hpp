#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "flatlab/grid.hpp"

namespace flatlab {

/// One real value per grid node, index (j*nx + i). Immutable by convention
/// after it leaves the constructing operation.
struct ScalarField {
    Grid2 grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid2& g, double fill = 0.0)
        : grid(g), values(g.size(), fill) {}

    double& at(int i, int j) { return values[grid.index(i, j)]; }
    double at(int i, int j) const { return values[grid.index(i, j)]; }

    double sup_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }

    /// Sup of |values| over the grid minus `margin` nodes on every side,
    /// so one-sided boundary stencils never enter a reported sup-norm.
    double interior_sup(int margin) const {
        double m = 0.0;
        for (int j = margin; j < grid.ny - margin; ++j)
            for (int i = margin; i < grid.nx - margin; ++i)
                m = std::max(m, std::abs(at(i, j)));
        return m;
    }

    bool all_finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

/// k scalar components on one shared grid.
struct VectorField {
    std::vector<ScalarField> comps;

    VectorField() = default;
    VectorField(const Grid2& g, int k) : comps(k, ScalarField(g)) {}

    const Grid2& grid() const { return comps.at(0).grid; }
    int k() const { return static_cast<int>(comps.size()); }
    ScalarField& operator[](int c) { return comps[c]; }
    const ScalarField& operator[](int c) const { return comps[c]; }

    double sup_abs() const {
        double m = 0.0;
        for (const auto& c : comps) m = std::max(m, c.sup_abs());
        return m;
    }
};

/// rows x cols matrix of scalar fields. A symmetric 2x2 stores the
/// off-diagonal once: entry(0,1) and entry(1,0) alias the same field.
struct MatrixField {
    int rows = 0;
    int cols = 0;
    bool symmetric = false;
    std::vector<ScalarField> comps;  // row-major; symmetric 2x2 keeps {a11,a12,a22}

    MatrixField() = default;
    MatrixField(const Grid2& g, int r, int c, bool sym = false)
        : rows(r), cols(c), symmetric(sym) {
        if (sym && (r != 2 || c != 2))
            throw InputError("MatrixField: symmetric storage is for 2x2 only");
        comps.assign(sym ? 3 : static_cast<std::size_t>(r) * c, ScalarField(g));
    }

    int comp_index(int r, int c) const {
        if (symmetric) return r + c;  // (0,0)->0, (0,1)/(1,0)->1, (1,1)->2
        return r * cols + c;
    }
    ScalarField& entry(int r, int c) { return comps[comp_index(r, c)]; }
    const ScalarField& entry(int r, int c) const { return comps[comp_index(r, c)]; }

    const Grid2& grid() const { return comps.at(0).grid; }

    double sup_abs() const {
        double m = 0.0;
        for (const auto& c : comps) m = std::max(m, c.sup_abs());
        return m;
    }
};

/// Spectral norm of the symmetric 2x2 matrix with entries (a11,a12,a22).
inline double sym2_spectral_norm(double a11, double a12, double a22) {
    double tr = a11 + a22;
    double disc = std::sqrt((a11 - a22) * (a11 - a22) + 4.0 * a12 * a12);
    return std::max(std::abs(tr + disc), std::abs(tr - disc)) / 2.0;
}

/// Smallest eigenvalue of the symmetric 2x2 matrix (a11,a12,a22).
inline double sym2_min_eigenvalue(double a11, double a12, double a22) {
    double tr = a11 + a22;
    double disc = std::sqrt((a11 - a22) * (a11 - a22) + 4.0 * a12 * a12);
    return (tr - disc) / 2.0;
}

}  // namespace flatlab
