#pragma once

#include <functional>
#include <string>

namespace curvedcs {

using FieldFn = std::function<double(double, double)>;

// A real function on the curved triangle. The second partials are optional and
// only needed by the Peano-kernel remainder.
struct ScalarField {
    std::string name;
    FieldFn value;
    FieldFn d20;  // d^2 F / dx^2
    FieldFn d02;  // d^2 F / dy^2

    double operator()(double x, double y) const { return value(x, y); }
};

// Axis-wise Lipschitz constants: |F(p) - F(q)| <= x |dx| + y |dy|.
struct Lipschitz {
    double x = 0.0;
    double y = 0.0;
};

}  // namespace curvedcs
