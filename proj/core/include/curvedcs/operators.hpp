#pragma once

#include <string>
#include <string_view>

#include "curvedcs/basis.hpp"
#include "curvedcs/domain.hpp"
#include "curvedcs/field.hpp"

namespace curvedcs {

struct BivariateParams {
    CheneySharmaParams x_params{5, 1.0};  // (m, beta)
    CheneySharmaParams y_params{6, 1.0};  // (n, b)

    void validate() const {
        x_params.validate();
        y_params.validate();
    }
};

enum class OperatorKind { qx, qy, p1, p2, s1, s2 };

std::string_view to_string(OperatorKind kind) noexcept;
// Accepts the lower-case names used by to_string; throws Errc::invalid_parameter.
OperatorKind parse_operator(std::string_view name);

// Points are accepted within 1e-9 of the triangle; anything further away throws
// Errc::out_of_domain.
inline constexpr double kDomainTolerance = 1e-9;

// (Q_m^x F)(x,y) = sum_i q_{m,i}(x/g(y)) F(i g(y)/m, y). Interpolates F on
// Gamma1 and Gamma3. On the degenerate row g(y) = 0 (vertex V1) returns F(0,y).
double apply_qx(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                double x, double y);

// (Q_n^y F)(x,y) = sum_j q_{n,j}(y/f(x)) F(x, j f(x)/n). Interpolates F on
// Gamma2 and Gamma3. On the degenerate column f(x) = 0 (vertex V2) returns F(x,0).
double apply_qy(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                double x, double y);

// P1 = Q_m^x Q_n^y, evaluated as the double sum over the m+1 row nodes and the
// n+1 column nodes above each of them.
double apply_p1(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                double x, double y);

// P2 = Q_n^y Q_m^x.
double apply_p2(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                double x, double y);

// Boolean sums S1 = Qx + Qy - P1 and S2 = Qy + Qx - P2; both reproduce F on
// the whole boundary.
double apply_s1(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                double x, double y);
double apply_s2(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                double x, double y);

double apply(OperatorKind kind, const CurvedTriangle& tri, const BivariateParams& params,
             const ScalarField& F, double x, double y);

// F(x,y) - (kind F)(x,y).
double remainder(OperatorKind kind, const CurvedTriangle& tri, const BivariateParams& params,
                 const ScalarField& F, double x, double y);

}  // namespace curvedcs
