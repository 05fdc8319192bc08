#pragma once

#include <array>
#include <string>
#include <vector>

#include "flatlab/field.hpp"

namespace flatlab {

/// Compactly supported radial bump psi(x) = s * (1 - |x-c|^2/r^2)^q on
/// B(c,r), zero outside. q >= 4 keeps enough boundary flatness that node
/// realizations and trapezoid quadrature behave like smooth test functions.
/// Value, gradient and Hessian are evaluated analytically from the profile.
class TestFunction {
  public:
    TestFunction(Point center, double radius, int order = 4, double scale = 1.0);

    const Point& center() const { return center_; }
    double radius() const { return radius_; }
    int order() const { return order_; }
    double scale() const { return scale_; }
    std::string id() const { return id_; }
    TestFunction& set_id(const std::string& s) { id_ = s; return *this; }

    double value(double x, double y) const;
    std::array<double, 2> gradient(double x, double y) const;
    /// (d11, d12, d22)
    std::array<double, 3> hessian(double x, double y) const;

    /// Node realization. Throws unless supp psi sits at least one cell
    /// inside the grid rectangle (the overshoot is reported).
    ScalarField realize(const Grid2& g) const;

    /// True when B(c, r) + margin_cells*spacing fits inside g's rectangle.
    bool fits(const Grid2& g, int margin_cells = 1) const;

    /// L1 norms computed once per call by radial quadrature of the profile:
    /// returns {||psi||_L1, ||d1 psi||_L1, ||d2 psi||_L1}.
    std::array<double, 3> l1_norms() const;
    /// ||psi||_L1 + ||d1 psi||_L1 + ||d2 psi||_L1.
    double w11_norm() const;

    /// Copy rescaled so that ||psi||_L1 = 1.
    TestFunction unit_mass() const;

  private:
    Point center_;
    double radius_;
    int order_;
    double scale_;
    std::string id_;
};

/// Deterministic battery: `radii_frac` x 5 centers (domain center plus four
/// diagonal offsets), every support inside `rect` with the given margin.
std::vector<TestFunction> default_battery(const Grid2& g,
                                          const std::vector<double>& radii_frac = {0.10, 0.16,
                                                                                   0.24},
                                          int order = 4);

}  // namespace flatlab
