#include "curvedcs/basis.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "curvedcs/error.hpp"

namespace curvedcs {
namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(base^exponent) for base >= 0, with 0^0 = 1.
double log_pow(double base, int exponent) {
    if (exponent == 0) return 0.0;
    if (base == 0.0) {
        if (exponent < 0)
            throw Error(Errc::undefined_sum, "zero raised to a negative power");
        return kNegInf;
    }
    return exponent * std::log(base);
}

// log C(m, i) for i = 0..m; accumulated so that no intermediate overflows.
std::vector<double> log_binomial_row(int m) {
    std::vector<double> row(static_cast<std::size_t>(m) + 1, 0.0);
    for (int i = 1; i <= m; ++i)
        row[i] = row[i - 1] + std::log(static_cast<double>(m - i + 1)) - std::log(static_cast<double>(i));
    // symmetric; pin the mirror so that both ends agree bit for bit
    for (int i = 0; i <= m / 2; ++i) row[m - i] = row[i];
    return row;
}

// exp(log_scale) * S(j, M, x, y) with every term carried in log space.
double scaled_abel_sum(int j, int M, double x, double y, double beta, double log_scale) {
    if (M < 0) return 0.0;
    const auto log_binom = log_binomial_row(M);
    double sum = 0.0;
    for (int k = 0; k <= M; ++k) {
        const double log_term = log_binom[k] + log_pow(x + k * beta, k + j - 1) +
                                log_pow(y + (M - k) * beta, M - k) + log_scale;
        sum += std::exp(log_term);
    }
    return sum;
}

double checked_unit(double t) {
    if (!(t >= -kUnitTolerance && t <= 1.0 + kUnitTolerance))
        throw Error(Errc::degenerate_input, "abscissa " + std::to_string(t) + " outside [0,1]");
    return t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
}

}  // namespace

void CheneySharmaParams::validate() const {
    if (m < 1) throw Error(Errc::invalid_parameter, "degree m must be >= 1, got " + std::to_string(m));
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw Error(Errc::invalid_parameter, "beta must be a finite value >= 0");
}

void basis_weights_into(const CheneySharmaParams& params, double t, std::span<double> out) {
    params.validate();
    const int m = params.m;
    if (out.size() != static_cast<std::size_t>(m) + 1)
        throw Error(Errc::length_mismatch, "weight buffer must hold m+1 entries");
    t = checked_unit(t);

    const double beta = params.beta;
    const double s = 1.0 - t;
    // same expression as the endpoint factors so t in {0,1} yields exact unit weights
    const double log_norm = (m - 1) * std::log(1.0 + m * beta);

    // grouped endpoint terms
    out[0] = std::exp(log_pow(s, 1) + log_pow(s + m * beta, m - 1) - log_norm);
    out[m] = std::exp(log_pow(t, 1) + log_pow(t + m * beta, m - 1) - log_norm);
    if (m == 1) return;

    const auto log_binom = log_binomial_row(m);
    const double log_ts = log_pow(t, 1) + log_pow(s, 1);
    for (int i = 1; i < m; ++i) {
        const double log_w = log_binom[i] + log_ts + log_pow(t + i * beta, i - 1) +
                             log_pow(s + (m - i) * beta, m - i - 1) - log_norm;
        out[i] = std::exp(log_w);
    }
}

BasisWeights basis_weights(const CheneySharmaParams& params, double t) {
    params.validate();
    BasisWeights result{params, checked_unit(t), std::vector<double>(static_cast<std::size_t>(params.m) + 1)};
    basis_weights_into(params, result.t, result.w);
    return result;
}

double abel_sum(int j, int M, double x, double y, double beta) {
    if (j < 0) throw Error(Errc::invalid_parameter, "abel_sum: j must be >= 0");
    if (!(beta >= 0.0)) throw Error(Errc::invalid_parameter, "abel_sum: beta must be >= 0");
    if (!(x >= 0.0) || !(y >= 0.0)) throw Error(Errc::invalid_parameter, "abel_sum: x, y must be >= 0");
    return scaled_abel_sum(j, M, x, y, beta, 0.0);
}

double second_moment(const CheneySharmaParams& params, double t) {
    params.validate();
    if (params.m < 2)
        throw Error(Errc::invalid_parameter, "closed-form second moment needs m >= 2");
    t = checked_unit(t);
    const int m = params.m;
    const double beta = params.beta;

    // sum_i q_{m,i}(t) i(i-1)/(m(m-1)); the (1+m beta)^{1-m} factor is folded
    // into each term of S
    const double log_scale = (1 - m) * std::log(1.0 + m * beta);
    const double factorial_moment =
        t * (scaled_abel_sum(2, m - 2, t + 2 * beta, 1.0 - t, beta, log_scale) -
             (m - 2) * beta * scaled_abel_sum(2, m - 3, t + 2 * beta, 1.0 - t + beta, beta, log_scale));

    // i^2 = i(i-1) + i and sum_i q_{m,i}(t) i/m = t
    return t / m + (m - 1.0) / m * factorial_moment;
}

double second_moment_direct(const CheneySharmaParams& params, double t) {
    const auto weights = basis_weights(params, t);
    const double m = params.m;
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.w.size(); ++i) {
        const double node = static_cast<double>(i) / m;
        sum += weights.w[i] * node * node;
    }
    return sum;
}

double apply_univariate(const CheneySharmaParams& params, std::span<const double> nodal_values,
                        double t) {
    params.validate();
    if (nodal_values.size() != static_cast<std::size_t>(params.m) + 1)
        throw Error(Errc::length_mismatch, "expected m+1 nodal values, got " +
                                               std::to_string(nodal_values.size()));
    const auto weights = basis_weights(params, t);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodal_values.size(); ++i) sum += weights.w[i] * nodal_values[i];
    return sum;
}

}  // namespace curvedcs
