#pragma once

#include <functional>

#include "curvedcs/domain.hpp"
#include "curvedcs/field.hpp"
#include "curvedcs/operators.hpp"

namespace curvedcs {

struct ModulusEstimate {
    double delta1 = 0.0;
    double delta2 = 0.0;  // unused by the univariate modulus
    double value = 0.0;
    int resolution = 0;
};

// Sampled modulus of continuity of u -> F(u, fixed) on [0, g(fixed)] (axis x)
// or u -> F(fixed, u) on [0, f(fixed)] (axis y), over a `resolution`-point
// equispaced grid. Equal to the sup over all grid pairs at most delta apart,
// hence a lower estimate of the true modulus.
ModulusEstimate modulus_1d(const CurvedTriangle& tri, const ScalarField& F, double fixed, Axis axis,
                           double delta, int resolution);

// Bivariate counterpart over the resolution x resolution lattice of [0,h]^2
// restricted to the triangle; pairs with |dx| <= delta1 and |dy| <= delta2.
// A zero radius restricts pairs to a common column (or row).
ModulusEstimate modulus_2d(const CurvedTriangle& tri, const ScalarField& F, double delta1,
                           double delta2, int resolution);

using Modulus1D = std::function<double(double)>;
using Modulus2D = std::function<double(double, double)>;

struct Moduli {
    Modulus1D along_x;  // omega(F(., y); delta)
    Modulus1D along_y;  // omega(F(x, .); delta)
    Modulus2D joint;    // omega(F; delta1, delta2)
};

// omega(delta) = L delta; an upper bound for any L-Lipschitz function.
Moduli lipschitz_moduli(const Lipschitz& constants);

// Sampled moduli anchored at (x, y) for the directional terms.
Moduli sampled_moduli(const CurvedTriangle& tri, const ScalarField& F, double x, double y,
                      int resolution);

// (Q_m^x e20)(x,y) - x^2 = g(y)^2 E2(x/g(y)) - x^2, with E2 the closed-form
// second moment (direct summation when m = 1).
double moment_gap_x(const CurvedTriangle& tri, const BivariateParams& params, double x, double y);
// (Q_n^y e02)(x,y) - y^2.
double moment_gap_y(const CurvedTriangle& tri, const BivariateParams& params, double x, double y);

// (1 + sqrt(gap)/delta) omega(delta) for the directional remainder along `axis`.
double bound_directional(const CurvedTriangle& tri, const BivariateParams& params, double x, double y,
                         double delta, Axis axis, const Modulus1D& omega);
// Same, with the sampled modulus of F at the given resolution.
double bound_directional(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                         double x, double y, double delta, Axis axis, int resolution);

// (gap_x + gap_y + 1) omega(F; 1/sqrt(gap_x), 1/sqrt(gap_y)) for the P1
// remainder. A vanished gap contributes a zero radius; with both gaps zero the
// bound is 0.
double bound_product(const CurvedTriangle& tri, const BivariateParams& params, double x, double y,
                     const Modulus2D& omega);

// Three-term bound for the S1 remainder: both directional bounds at
// delta = 1/sqrt(gap) plus the product bound.
double bound_boolean(const CurvedTriangle& tri, const BivariateParams& params, double x, double y,
                     const Moduli& omega);

// K20(x,y;s) = (x-s)_+ - sum_i q_{m,i}(x,y) (i g(y)/m - s)_+ for s in [0, g(y)].
double peano_kernel(const CurvedTriangle& tri, const BivariateParams& params, double x, double y,
                    double s);
// Kernel of the y-direction remainder, s in [0, f(x)].
double peano_kernel_y(const CurvedTriangle& tri, const BivariateParams& params, double x, double y,
                      double s);

// Integral of the kernel against F^(2,0)(s,y) (axis x) or F^(0,2)(x,s)
// (axis y). Panels split at every node and at the evaluation abscissa, with a
// 32-point Gauss-Legendre rule on each.
double peano_remainder(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                       double x, double y, Axis axis);

}  // namespace curvedcs
