#include "curvedcs/operators.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "curvedcs/error.hpp"

namespace curvedcs {
namespace {

// Weights and abscissae of one directional operator at a single point.
struct Stencil {
    std::vector<double> weights;
    std::vector<double> nodes;
};

std::string describe(double x, double y) {
    std::ostringstream os;
    os.precision(17);
    os << '(' << x << ", " << y << ')';
    return os.str();
}

void require_inside(const CurvedTriangle& tri, double x, double y) {
    if (!tri.contains(x, y, kDomainTolerance))
        throw Error(Errc::out_of_domain, "point " + describe(x, y) + " is outside the triangle");
}

// Stencil along a segment [0, length] for the abscissa `u`. A zero-length
// segment collapses to the single node 0.
Stencil segment_stencil(const CheneySharmaParams& params, double length, double u, double x,
                        double y) {
    Stencil s;
    if (length <= 0.0) {
        s.weights = {1.0};
        s.nodes = {0.0};
        return s;
    }
    if (u > length + kDomainTolerance || u < -kDomainTolerance)
        throw Error(Errc::out_of_domain,
                    "point " + describe(x, y) + " lies beyond the partition segment");
    const double t = std::clamp(u / length, 0.0, 1.0);
    const int m = params.m;
    s.weights.resize(static_cast<std::size_t>(m) + 1);
    basis_weights_into(params, t, s.weights);
    s.nodes.resize(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i < m; ++i) s.nodes[i] = i * length / m;
    s.nodes[m] = length;
    return s;
}

Stencil x_stencil(const CurvedTriangle& tri, const CheneySharmaParams& params, double x, double y) {
    return segment_stencil(params, tri.g(y), x, x, y);
}

Stencil y_stencil(const CurvedTriangle& tri, const CheneySharmaParams& params, double x, double y) {
    return segment_stencil(params, tri.f(x), y, x, y);
}

}  // namespace

std::string_view to_string(OperatorKind kind) noexcept {
    switch (kind) {
        case OperatorKind::qx: return "qx";
        case OperatorKind::qy: return "qy";
        case OperatorKind::p1: return "p1";
        case OperatorKind::p2: return "p2";
        case OperatorKind::s1: return "s1";
        case OperatorKind::s2: return "s2";
    }
    return "?";
}

OperatorKind parse_operator(std::string_view name) {
    for (auto kind : {OperatorKind::qx, OperatorKind::qy, OperatorKind::p1, OperatorKind::p2,
                      OperatorKind::s1, OperatorKind::s2})
        if (to_string(kind) == name) return kind;
    throw Error(Errc::invalid_parameter, "unknown operator '" + std::string(name) + "'");
}

double apply_qx(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                double x, double y) {
    params.validate();
    require_inside(tri, x, y);
    const auto s = x_stencil(tri, params.x_params, x, y);
    double sum = 0.0;
    for (std::size_t i = 0; i < s.weights.size(); ++i)
        if (s.weights[i] != 0.0) sum += s.weights[i] * F(s.nodes[i], y);
    return sum;
}

double apply_qy(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                double x, double y) {
    params.validate();
    require_inside(tri, x, y);
    const auto s = y_stencil(tri, params.y_params, x, y);
    double sum = 0.0;
    for (std::size_t j = 0; j < s.weights.size(); ++j)
        if (s.weights[j] != 0.0) sum += s.weights[j] * F(x, s.nodes[j]);
    return sum;
}

double apply_p1(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                double x, double y) {
    params.validate();
    require_inside(tri, x, y);
    const auto outer = x_stencil(tri, params.x_params, x, y);
    double sum = 0.0;
    for (std::size_t i = 0; i < outer.weights.size(); ++i) {
        if (outer.weights[i] == 0.0) continue;
        const double xi = outer.nodes[i];
        const auto inner = y_stencil(tri, params.y_params, xi, y);
        double column = 0.0;
        for (std::size_t j = 0; j < inner.weights.size(); ++j)
            if (inner.weights[j] != 0.0) column += inner.weights[j] * F(xi, inner.nodes[j]);
        sum += outer.weights[i] * column;
    }
    return sum;
}

double apply_p2(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                double x, double y) {
    params.validate();
    require_inside(tri, x, y);
    const auto outer = y_stencil(tri, params.y_params, x, y);
    double sum = 0.0;
    for (std::size_t j = 0; j < outer.weights.size(); ++j) {
        if (outer.weights[j] == 0.0) continue;
        const double yj = outer.nodes[j];
        const auto inner = x_stencil(tri, params.x_params, x, yj);
        double row = 0.0;
        for (std::size_t i = 0; i < inner.weights.size(); ++i)
            if (inner.weights[i] != 0.0) row += inner.weights[i] * F(inner.nodes[i], yj);
        sum += outer.weights[j] * row;
    }
    return sum;
}

double apply_s1(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                double x, double y) {
    return apply_qx(tri, params, F, x, y) + apply_qy(tri, params, F, x, y) -
           apply_p1(tri, params, F, x, y);
}

double apply_s2(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                double x, double y) {
    return apply_qy(tri, params, F, x, y) + apply_qx(tri, params, F, x, y) -
           apply_p2(tri, params, F, x, y);
}

double apply(OperatorKind kind, const CurvedTriangle& tri, const BivariateParams& params,
             const ScalarField& F, double x, double y) {
    switch (kind) {
        case OperatorKind::qx: return apply_qx(tri, params, F, x, y);
        case OperatorKind::qy: return apply_qy(tri, params, F, x, y);
        case OperatorKind::p1: return apply_p1(tri, params, F, x, y);
        case OperatorKind::p2: return apply_p2(tri, params, F, x, y);
        case OperatorKind::s1: return apply_s1(tri, params, F, x, y);
        case OperatorKind::s2: return apply_s2(tri, params, F, x, y);
    }
    throw Error(Errc::invalid_parameter, "unknown operator kind");
}

double remainder(OperatorKind kind, const CurvedTriangle& tri, const BivariateParams& params,
                 const ScalarField& F, double x, double y) {
    const double approx = apply(kind, tri, params, F, x, y);
    return F(x, y) - approx;
}

}  // namespace curvedcs
