#include "curvedcs/error_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <boost/math/special_functions/legendre.hpp>

#include "curvedcs/basis.hpp"
#include "curvedcs/error.hpp"

namespace curvedcs {
namespace {

constexpr double kGapFloor = -1e-12;
constexpr double kKernelRangeTolerance = 1e-12;
constexpr int kGaussPoints = 32;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::array<double, kGaussPoints> nodes{};
    std::array<double, kGaussPoints> weights{};
};

const GaussRule& gauss_legendre() {
    static const GaussRule rule = [] {
        GaussRule r;
        // nonnegative zeros of P_32, ascending
        const auto zeros = boost::math::legendre_p_zeros<double>(kGaussPoints);
        const int half = kGaussPoints / 2;
        for (int k = 0; k < half; ++k) {
            const double z = zeros[static_cast<std::size_t>(k)];
            const double dp = boost::math::legendre_p_prime(kGaussPoints, z);
            const double w = 2.0 / ((1.0 - z * z) * dp * dp);
            r.nodes[half + k] = z;
            r.weights[half + k] = w;
            r.nodes[half - 1 - k] = -z;
            r.weights[half - 1 - k] = w;
        }
        return r;
    }();
    return rule;
}

// out[i] = max of in[k] over |k - i| <= radius (monotone deque).
void sliding_max(std::span<const double> in, std::size_t radius, std::span<double> out) {
    const std::size_t n = in.size();
    std::deque<std::size_t> window;
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t hi = std::min(n - 1, i + radius);
        for (; next <= hi; ++next) {
            while (!window.empty() && in[window.back()] <= in[next]) window.pop_back();
            window.push_back(next);
        }
        while (window.front() + radius < i) window.pop_front();
        out[i] = in[window.front()];
    }
}

// Number of grid steps that fit in delta.
std::size_t index_radius(double delta, double spacing, std::size_t n) {
    if (spacing <= 0.0) return n;
    const double steps = std::floor(delta / spacing + 1e-9);
    return steps >= static_cast<double>(n) ? n : static_cast<std::size_t>(steps);
}

double checked_gap(double gap) {
    if (gap < kGapFloor)
        throw Error(Errc::negative_gap, "moment gap " + std::to_string(gap) + " below zero");
    return std::max(gap, 0.0);
}

void require_inside(const CurvedTriangle& tri, double x, double y) {
    if (!tri.contains(x, y, kDomainTolerance))
        throw Error(Errc::out_of_domain, "point outside the triangle");
}

// Kernel of a degree-1-exact directional operator on [0, length] at abscissa u.
class TruncatedPowerKernel {
  public:
    TruncatedPowerKernel(const CheneySharmaParams& params, double length, double u) : length_(length) {
        if (length_ <= 0.0) return;
        const double t = std::clamp(u / length_, 0.0, 1.0);
        u_ = t * length_;
        weights_ = basis_weights(params, t).w;
        const int m = params.m;
        nodes_.resize(weights_.size());
        for (int i = 0; i < m; ++i) nodes_[i] = i * length_ / m;
        nodes_[m] = length_;
    }

    double operator()(double s) const {
        double value = std::max(u_ - s, 0.0);
        for (std::size_t i = 0; i < nodes_.size(); ++i) value -= weights_[i] * std::max(nodes_[i] - s, 0.0);
        return value;
    }

    double length() const { return length_; }

    // panel boundaries: all nodes plus the evaluation abscissa
    std::vector<double> breakpoints() const {
        std::vector<double> points = nodes_;
        points.push_back(u_);
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        return points;
    }

  private:
    double length_;
    double u_ = 0.0;
    std::vector<double> weights_;
    std::vector<double> nodes_;
};

double kernel_at(const TruncatedPowerKernel& kernel, double s) {
    if (!(s >= -kKernelRangeTolerance && s <= kernel.length() + kKernelRangeTolerance))
        throw Error(Errc::out_of_range, "kernel variable s = " + std::to_string(s) + " outside [0, length]");
    if (kernel.length() <= 0.0) return 0.0;
    return kernel(std::clamp(s, 0.0, kernel.length()));
}

template <class Integrand>
double integrate_panels(const std::vector<double>& breaks, Integrand&& integrand) {
    const auto& rule = gauss_legendre();
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double a = breaks[p];
        const double b = breaks[p + 1];
        if (b <= a) continue;
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        double panel = 0.0;
        for (int k = 0; k < kGaussPoints; ++k) panel += rule.weights[k] * integrand(mid + half * rule.nodes[k]);
        total += half * panel;
    }
    return total;
}

}  // namespace

ModulusEstimate modulus_1d(const CurvedTriangle& tri, const ScalarField& F, double fixed, Axis axis,
                           double delta, int resolution) {
    if (!(delta > 0.0)) throw Error(Errc::invalid_parameter, "modulus radius must be positive");
    if (resolution < 2) throw Error(Errc::invalid_parameter, "modulus resolution must be >= 2");
    if (!(fixed >= -1e-12 && fixed <= tri.h() + 1e-12))
        throw Error(Errc::out_of_range, "fixed coordinate outside [0,h]");

    ModulusEstimate result{delta, 0.0, 0.0, resolution};
    const double length = axis == Axis::x ? tri.g(fixed) : tri.f(fixed);
    if (length <= 0.0) return result;

    const auto n = static_cast<std::size_t>(resolution);
    const double spacing = length / (resolution - 1);
    std::vector<double> values(n);
    std::vector<double> negated(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double u = k + 1 == n ? length : k * spacing;
        values[k] = axis == Axis::x ? F(u, fixed) : F(fixed, u);
        negated[k] = -values[k];
    }
    const auto radius = index_radius(delta, spacing, n);
    std::vector<double> upper(n);
    std::vector<double> lower(n);
    sliding_max(values, radius, upper);
    sliding_max(negated, radius, lower);
    for (std::size_t k = 0; k < n; ++k)
        result.value = std::max({result.value, upper[k] - values[k], values[k] + lower[k]});
    return result;
}

ModulusEstimate modulus_2d(const CurvedTriangle& tri, const ScalarField& F, double delta1,
                           double delta2, int resolution) {
    if (!(delta1 >= 0.0) || !(delta2 >= 0.0))
        throw Error(Errc::invalid_parameter, "modulus radii must be nonnegative");
    if (resolution < 2) throw Error(Errc::invalid_parameter, "modulus resolution must be >= 2");

    const auto n = static_cast<std::size_t>(resolution);
    const double h = tri.h();
    const double spacing = h / (resolution - 1);
    auto coord = [&](std::size_t k) { return k + 1 == n ? h : k * spacing; };

    // masked lattice, row-major in y; outside points are -inf in the max
    // field and +inf (stored negated as -inf) in the min field
    std::vector<double> values(n * n, 0.0);
    std::vector<char> inside(n * n, 0);
    std::vector<double> hi(n * n, -kInf);
    std::vector<double> lo(n * n, -kInf);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t at = j * n + i;
            if (!tri.contains(coord(i), coord(j), 0.0)) continue;
            inside[at] = 1;
            values[at] = F(coord(i), coord(j));
            hi[at] = values[at];
            lo[at] = -values[at];
        }

    const auto rx = index_radius(delta1, spacing, n);
    const auto ry = index_radius(delta2, spacing, n);
    std::vector<double> line_in(n);
    std::vector<double> line_out(n);

    for (auto* field : {&hi, &lo}) {
        auto& data = *field;
        for (std::size_t j = 0; j < n; ++j) {
            std::span<double> row(data.data() + j * n, n);
            std::copy(row.begin(), row.end(), line_in.begin());
            sliding_max(line_in, rx, row);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) line_in[j] = data[j * n + i];
            sliding_max(line_in, ry, line_out);
            for (std::size_t j = 0; j < n; ++j) data[j * n + i] = line_out[j];
        }
    }

    ModulusEstimate result{delta1, delta2, 0.0, resolution};
    for (std::size_t at = 0; at < n * n; ++at)
        if (inside[at]) result.value = std::max({result.value, hi[at] - values[at], values[at] + lo[at]});
    return result;
}

Moduli lipschitz_moduli(const Lipschitz& constants) {
    return {[lx = constants.x](double d) { return lx * d; },
            [ly = constants.y](double d) { return ly * d; },
            [lx = constants.x, ly = constants.y](double d1, double d2) { return lx * d1 + ly * d2; }};
}

Moduli sampled_moduli(const CurvedTriangle& tri, const ScalarField& F, double x, double y,
                      int resolution) {
    return {[=](double d) { return modulus_1d(tri, F, y, Axis::x, d, resolution).value; },
            [=](double d) { return modulus_1d(tri, F, x, Axis::y, d, resolution).value; },
            [=](double d1, double d2) { return modulus_2d(tri, F, d1, d2, resolution).value; }};
}

double moment_gap_x(const CurvedTriangle& tri, const BivariateParams& params, double x, double y) {
    params.validate();
    require_inside(tri, x, y);
    const double g = tri.g(y);
    if (g <= 0.0) return 0.0;
    const double t = std::clamp(x / g, 0.0, 1.0);
    const auto& p = params.x_params;
    const double e2 = p.m >= 2 ? second_moment(p, t) : second_moment_direct(p, t);
    return g * g * (e2 - t * t);
}

double moment_gap_y(const CurvedTriangle& tri, const BivariateParams& params, double x, double y) {
    params.validate();
    require_inside(tri, x, y);
    const double f = tri.f(x);
    if (f <= 0.0) return 0.0;
    const double t = std::clamp(y / f, 0.0, 1.0);
    const auto& p = params.y_params;
    const double e2 = p.m >= 2 ? second_moment(p, t) : second_moment_direct(p, t);
    return f * f * (e2 - t * t);
}

double bound_directional(const CurvedTriangle& tri, const BivariateParams& params, double x, double y,
                         double delta, Axis axis, const Modulus1D& omega) {
    if (!(delta > 0.0)) throw Error(Errc::invalid_parameter, "bound radius must be positive");
    const double gap =
        checked_gap(axis == Axis::x ? moment_gap_x(tri, params, x, y) : moment_gap_y(tri, params, x, y));
    return (1.0 + std::sqrt(gap) / delta) * omega(delta);
}

double bound_directional(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                         double x, double y, double delta, Axis axis, int resolution) {
    const double fixed = axis == Axis::x ? y : x;
    return bound_directional(tri, params, x, y, delta, axis, [&](double d) {
        return modulus_1d(tri, F, fixed, axis, d, resolution).value;
    });
}

double bound_product(const CurvedTriangle& tri, const BivariateParams& params, double x, double y,
                     const Modulus2D& omega) {
    const double gx = checked_gap(moment_gap_x(tri, params, x, y));
    const double gy = checked_gap(moment_gap_y(tri, params, x, y));
    if (gx == 0.0 && gy == 0.0) return 0.0;
    const double d1 = gx > 0.0 ? 1.0 / std::sqrt(gx) : 0.0;
    const double d2 = gy > 0.0 ? 1.0 / std::sqrt(gy) : 0.0;
    return (gx + gy + 1.0) * omega(d1, d2);
}

double bound_boolean(const CurvedTriangle& tri, const BivariateParams& params, double x, double y,
                     const Moduli& omega) {
    const double gx = checked_gap(moment_gap_x(tri, params, x, y));
    const double gy = checked_gap(moment_gap_y(tri, params, x, y));
    const double along_x = gx > 0.0 ? (1.0 + gx) * omega.along_x(1.0 / std::sqrt(gx)) : 0.0;
    const double along_y = gy > 0.0 ? (1.0 + gy) * omega.along_y(1.0 / std::sqrt(gy)) : 0.0;
    return along_x + along_y + bound_product(tri, params, x, y, omega.joint);
}

double peano_kernel(const CurvedTriangle& tri, const BivariateParams& params, double x, double y,
                    double s) {
    params.validate();
    require_inside(tri, x, y);
    return kernel_at(TruncatedPowerKernel(params.x_params, tri.g(y), x), s);
}

double peano_kernel_y(const CurvedTriangle& tri, const BivariateParams& params, double x, double y,
                      double s) {
    params.validate();
    require_inside(tri, x, y);
    return kernel_at(TruncatedPowerKernel(params.y_params, tri.f(x), y), s);
}

double peano_remainder(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                       double x, double y, Axis axis) {
    params.validate();
    require_inside(tri, x, y);
    if (axis == Axis::x) {
        if (!F.d20) throw Error(Errc::missing_derivative, "field '" + F.name + "' has no F^(2,0)");
        const TruncatedPowerKernel kernel(params.x_params, tri.g(y), x);
        if (kernel.length() <= 0.0) return 0.0;
        return integrate_panels(kernel.breakpoints(), [&](double s) { return kernel(s) * F.d20(s, y); });
    }
    if (!F.d02) throw Error(Errc::missing_derivative, "field '" + F.name + "' has no F^(0,2)");
    const TruncatedPowerKernel kernel(params.y_params, tri.f(x), y);
    if (kernel.length() <= 0.0) return 0.0;
    return integrate_panels(kernel.breakpoints(), [&](double s) { return kernel(s) * F.d02(x, s); });
}

}  // namespace curvedcs
