#pragma once

#include <span>
#include <vector>

namespace curvedcs {

// Degree m and Abel parameter beta of a univariate Cheney-Sharma operator of
// the second kind. The same type carries (n, b) for the y-direction.
struct CheneySharmaParams {
    int m = 1;
    double beta = 0.0;

    // Throws Errc::invalid_parameter unless m >= 1 and beta >= 0.
    void validate() const;
};

struct BasisWeights {
    CheneySharmaParams params;
    double t = 0.0;
    std::vector<double> w;  // w[i] = q_{m,i}(t), i = 0..m
};

// Basis q_{m,i}(t) on [0,1]:
//
//   q_{m,i}(t) = C(m,i) t (t+i b)^{i-1} (1-t) (1-t+(m-i) b)^{m-i-1} / (1+m b)^{m-1}
//
// The i = 0 and i = m terms are evaluated in the grouped form
//   w[0] = (1-t)(1-t+m b)^{m-1} / (1+m b)^{m-1},  w[m] = t (t+m b)^{m-1} / (1+m b)^{m-1}
// so t = 0 and t = 1 give unit vectors exactly. Every product is accumulated as
// a sum of logarithms before a single exponentiation.
BasisWeights basis_weights(const CheneySharmaParams& params, double t);

// Allocation-free form; out.size() must be params.m + 1.
void basis_weights_into(const CheneySharmaParams& params, double t, std::span<double> out);

// Abel-Jensen sum S(j, M, x, y) = sum_k C(M,k) (x+k b)^{k+j-1} (y+(M-k) b)^{M-k}.
// Returns 0 for M < 0. 0^0 is taken as 1.
double abel_sum(int j, int M, double x, double y, double beta);

// (Q_m e_2)(t) = sum_i q_{m,i}(t) (i/m)^2 in closed form, for m >= 2.
double second_moment(const CheneySharmaParams& params, double t);

// Same quantity by direct summation over the basis; valid for every m >= 1.
double second_moment_direct(const CheneySharmaParams& params, double t);

// (Q_m f)(t) given f(i/m) in nodal_values[i].
double apply_univariate(const CheneySharmaParams& params, std::span<const double> nodal_values,
                        double t);

}  // namespace curvedcs
