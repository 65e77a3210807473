#include "curvedcs/domain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "curvedcs/error.hpp"

namespace curvedcs {
namespace {

constexpr double kClampTolerance = 1e-12;
constexpr double kEndpointTolerance = 1e-12;
constexpr double kInverseTolerance = 1e-10;
constexpr int kMonotoneGrid = 1001;
constexpr int kInverseGrid = 101;
constexpr int kMaxBisection = 200;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double horner(const std::vector<double>& coeffs, double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double superellipse(double h, double p, double u) {
    const double r = u / h;
    const double inner = 1.0 - std::pow(r, p);
    return inner <= 0.0 ? 0.0 : h * std::pow(inner, 1.0 / p);
}

double parse_double(const std::string& token) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != token.size())
        throw Error(Errc::invalid_parameter, "cannot parse number '" + token + "'");
    return value;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

CurvedTriangle::CurvedTriangle(double h, CurveSpec curve) : h_(h), curve_(std::move(curve)) {
    if (!(h_ > 0.0) || !std::isfinite(h_)) throw Error(Errc::invalid_parameter, "h must be positive");
    if (const auto* arc = std::get_if<SuperellipseArc>(&curve_); arc && !(arc->p >= 1.0))
        throw Error(Errc::invalid_parameter, "superellipse exponent p must be >= 1");
    if (const auto* poly = std::get_if<MonotonePolynomial>(&curve_); poly && poly->coeffs.empty())
        throw Error(Errc::invalid_parameter, "polynomial curve needs at least one coefficient");
    check_invariants();
}

void CurvedTriangle::check_invariants() const {
    auto raw_f = [this](double x) {
        return std::visit(overloaded{[&](const StraightLine&) { return h_ - x; },
                                     [&](const SuperellipseArc& arc) { return superellipse(h_, arc.p, x); },
                                     [&](const MonotonePolynomial& poly) { return horner(poly.coeffs, x); }},
                          curve_);
    };

    if (std::abs(raw_f(0.0) - h_) > kEndpointTolerance)
        throw Error(Errc::invariant_violation, "curve must satisfy f(0) = h");
    if (std::abs(raw_f(h_)) > kEndpointTolerance)
        throw Error(Errc::invariant_violation, "curve must satisfy f(h) = 0");

    double previous = raw_f(0.0);
    for (int k = 1; k < kMonotoneGrid; ++k) {
        const double x = h_ * k / (kMonotoneGrid - 1);
        const double value = raw_f(x);
        // superellipse arcs with large p are flat to double precision near
        // x = 0, so equal neighbours are only an error for polynomial curves
        const bool flat = value == previous && std::holds_alternative<MonotonePolynomial>(curve_);
        if (value > previous || flat)
            throw Error(Errc::invariant_violation,
                        "curve is not strictly decreasing near x = " + format_double(x));
        if (value < -kEndpointTolerance || value > h_ + kEndpointTolerance)
            throw Error(Errc::invariant_violation, "curve leaves [0,h] near x = " + format_double(x));
        previous = value;
    }

    for (int k = 0; k < kInverseGrid; ++k) {
        const double u = h_ * k / (kInverseGrid - 1);
        if (std::abs(g(f(u)) - u) > kInverseTolerance || std::abs(f(g(u)) - u) > kInverseTolerance)
            throw Error(Errc::invariant_violation, "f and g are not inverse near " + format_double(u));
    }
}

double CurvedTriangle::f(double x) const {
    if (!(x >= -kClampTolerance && x <= h_ + kClampTolerance))
        throw Error(Errc::out_of_range, "f: x = " + format_double(x) + " outside [0,h]");
    x = std::clamp(x, 0.0, h_);
    const double value =
        std::visit(overloaded{[&](const StraightLine&) { return h_ - x; },
                              [&](const SuperellipseArc& arc) { return superellipse(h_, arc.p, x); },
                              [&](const MonotonePolynomial& poly) {
                                  if (x == 0.0) return h_;
                                  if (x == h_) return 0.0;
                                  return horner(poly.coeffs, x);
                              }},
                   curve_);
    return std::clamp(value, 0.0, h_);
}

double CurvedTriangle::g(double y) const {
    if (!(y >= -kClampTolerance && y <= h_ + kClampTolerance))
        throw Error(Errc::out_of_range, "g: y = " + format_double(y) + " outside [0,h]");
    y = std::clamp(y, 0.0, h_);
    return std::visit(overloaded{[&](const StraightLine&) { return h_ - y; },
                                 [&](const SuperellipseArc& arc) { return superellipse(h_, arc.p, y); },
                                 [&](const MonotonePolynomial& poly) { return invert_polynomial(poly, y); }},
                      curve_);
}

double CurvedTriangle::invert_polynomial(const MonotonePolynomial& poly, double y) const {
    if (y == 0.0) return h_;
    if (y == h_) return 0.0;
    // f decreases on [lo, hi]: f(lo) >= y >= f(hi)
    double lo = 0.0;
    double hi = h_;
    for (int iter = 0; iter < kMaxBisection; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi || hi - lo <= 1e-15 * h_) return mid;
        if (horner(poly.coeffs, mid) > y)
            lo = mid;
        else
            hi = mid;
    }
    throw Error(Errc::non_convergence, "bisection for g(" + format_double(y) + ") did not converge");
}

bool CurvedTriangle::contains(double x, double y, double tol) const {
    if (!(x >= -tol && y >= -tol)) return false;
    if (x > h_ + tol) return false;
    const double xc = std::clamp(x, 0.0, h_);
    return y <= f(xc) + tol;
}

std::vector<double> nodes_along(const CurvedTriangle& tri, int count, double fixed, Axis axis) {
    if (count < 1) throw Error(Errc::invalid_parameter, "node count must be >= 1");
    if (!(fixed >= -kClampTolerance && fixed <= tri.h() + kClampTolerance))
        throw Error(Errc::out_of_range, "fixed coordinate " + format_double(fixed) + " outside [0,h]");
    const double length = axis == Axis::x ? tri.g(fixed) : tri.f(fixed);
    std::vector<double> nodes(static_cast<std::size_t>(count) + 1);
    for (int i = 0; i < count; ++i) nodes[i] = i * length / count;
    nodes[count] = length;
    return nodes;
}

std::vector<Point> boundary_sample(const CurvedTriangle& tri, Edge edge, int count) {
    if (count < 2) throw Error(Errc::invalid_parameter, "boundary sample needs count >= 2");
    const double h = tri.h();
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double u = (k == count - 1) ? h : h * k / (count - 1);
        switch (edge) {
            case Edge::gamma1: points.push_back({0.0, u}); break;
            case Edge::gamma2: points.push_back({u, 0.0}); break;
            case Edge::gamma3: points.push_back({u, tri.f(u)}); break;
        }
    }
    return points;
}

CurveSpec parse_curve(const std::string& text) {
    if (text == "line") return StraightLine{};
    if (text == "circle") return SuperellipseArc{2.0};
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (kind == "superellipse" && !args.empty()) return SuperellipseArc{parse_double(args)};
    if (kind == "poly" && !args.empty()) {
        MonotonePolynomial poly;
        std::istringstream is(args);
        std::string token;
        while (std::getline(is, token, ',')) poly.coeffs.push_back(parse_double(token));
        return poly;
    }
    throw Error(Errc::invalid_parameter,
                "unknown curve '" + text + "' (expected line, circle, superellipse:<p>, poly:<c0>,<c1>,...)");
}

std::string format_curve(const CurveSpec& curve) {
    return std::visit(overloaded{[](const StraightLine&) { return std::string("line"); },
                                 [](const SuperellipseArc& arc) { return "superellipse:" + format_double(arc.p); },
                                 [](const MonotonePolynomial& poly) {
                                     std::string out = "poly:";
                                     for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
                                         if (k) out += ',';
                                         out += format_double(poly.coeffs[k]);
                                     }
                                     return out;
                                 }},
                      curve);
}

}  // namespace curvedcs
