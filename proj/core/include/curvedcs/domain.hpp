#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace curvedcs {

// Hypotenuse families. Each describes y = f(x) on [0,h] with f(0) = h, f(h) = 0.
struct StraightLine {};

// f(x) = h (1 - (x/h)^p)^{1/p}; self-inverse. p = 1 is the straight line,
// p = 2 the quarter circle.
struct SuperellipseArc {
    double p = 2.0;
};

// f(x) = sum_k coeffs[k] x^k in absolute coordinates.
struct MonotonePolynomial {
    std::vector<double> coeffs;
};

using CurveSpec = std::variant<StraightLine, SuperellipseArc, MonotonePolynomial>;

enum class Axis { x, y };

enum class Edge { gamma1, gamma2, gamma3 };

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Triangle with legs on the coordinate axes (Gamma1 on x = 0, Gamma2 on y = 0)
/// and a curved hypotenuse Gamma3 from V1 = (0,h) to V2 = (h,0) given by the
/// mutually inverse pair y = f(x), x = g(y).
///
/// Construction checks the curve invariants: endpoints, strict decrease on a
/// 1001-point grid, range [0,h], and inverse consistency on 101 points. A spec
/// that breaks any of them throws Errc::invariant_violation. Instances are
/// immutable.
class CurvedTriangle {
  public:
    CurvedTriangle(double h, CurveSpec curve);

    double h() const noexcept { return h_; }
    const CurveSpec& curve() const noexcept { return curve_; }

    // Both accept arguments within 1e-12 of [0,h] (clamped), otherwise throw
    // Errc::out_of_range.
    double f(double x) const;
    double g(double y) const;

    bool contains(double x, double y, double tol) const;

    Point v1() const noexcept { return {0.0, h_}; }
    Point v2() const noexcept { return {h_, 0.0}; }
    Point v3() const noexcept { return {0.0, 0.0}; }

  private:
    double h_;
    CurveSpec curve_;

    void check_invariants() const;
    double invert_polynomial(const MonotonePolynomial& poly, double y) const;
};

// Uniform partition of [0, g(fixed)] (axis x, fixed = y) or [0, f(fixed)]
// (axis y, fixed = x) into `count` subintervals; returns count + 1 abscissae.
std::vector<double> nodes_along(const CurvedTriangle& tri, int count, double fixed, Axis axis);

// `count` equispaced points along an edge, endpoints included.
std::vector<Point> boundary_sample(const CurvedTriangle& tri, Edge edge, int count);

// Parses "line", "circle", "superellipse:<p>" or "poly:<c0>,<c1>,...".
CurveSpec parse_curve(const std::string& text);
std::string format_curve(const CurveSpec& curve);

}  // namespace curvedcs
