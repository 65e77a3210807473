#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "commands.hpp"
#include "curvedcs/basis.hpp"
#include "curvedcs/error.hpp"
#include "curvedcs/error_analysis.hpp"
#include "field_registry.hpp"

namespace curvedcs::cli {
namespace {

struct Check {
    std::string name;
    double tolerance;
    double defect = 0.0;
    std::string failure;  // set when the check threw

    bool passed() const { return failure.empty() && defect <= tolerance; }
};

class Suite {
  public:
    explicit Suite(std::ostream& out) : out_(out) {}

    // body returns the largest observed defect
    void run(std::string name, double tolerance, const std::function<double()>& body) {
        Check c{std::move(name), tolerance, 0.0, {}};
        try {
            c.defect = body();
            if (std::isnan(c.defect)) c.failure = "NaN defect";
        } catch (const std::exception& e) {
            c.failure = e.what();
        }
        report(c);
    }

    void fail(std::string name, std::string why) {
        Check c{std::move(name), 0.0, 0.0, {}};
        c.failure = std::move(why);
        report(c);
    }

    int failures() const { return failures_; }

  private:
    void report(const Check& c) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e (tol %.1e)", c.defect, c.tolerance);
        out_ << (c.passed() ? "PASS " : "FAIL ") << c.name << "  max_defect=" << buf;
        if (!c.failure.empty()) out_ << "  [" << c.failure << ']';
        out_ << '\n';
        if (!c.passed()) ++failures_;
    }

    std::ostream& out_;
    int failures_ = 0;
};

std::vector<double> unit_grid(int count) {
    std::vector<double> t(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) t[k] = k == count - 1 ? 1.0 : static_cast<double>(k) / (count - 1);
    return t;
}

std::vector<Point> random_interior(const CurvedTriangle& tri, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, tri.h());
    std::vector<Point> points;
    while (static_cast<int>(points.size()) < count) {
        const double x = u(rng), y = u(rng);
        if (x > 0.0 && y > 0.0 && y < tri.f(x)) points.push_back({x, y});
    }
    return points;
}

std::vector<Point> whole_boundary(const CurvedTriangle& tri, int per_edge) {
    std::vector<Point> pts;
    for (auto edge : {Edge::gamma1, Edge::gamma2, Edge::gamma3}) {
        const auto part = boundary_sample(tri, edge, per_edge);
        pts.insert(pts.end(), part.begin(), part.end());
    }
    return pts;
}

ScalarField monomial(int i, int j) {
    return {"e" + std::to_string(i) + std::to_string(j),
            [i, j](double x, double y) { return std::pow(x, i) * std::pow(y, j); }, {}, {}};
}

void basis_checks(Suite& suite, const char* label, const CheneySharmaParams& p) {
    const std::string tag = std::string(label) + " (m=" + std::to_string(p.m) + ")";
    const auto ts = unit_grid(101);
    suite.run("basis partition of unity " + tag, 1e-10, [&] {
        double worst = 0.0;
        for (double t : ts) {
            const auto w = basis_weights(p, t).w;
            double s = 0.0;
            for (double v : w) s += v;
            worst = std::max(worst, std::abs(s - 1.0));
        }
        return worst;
    });
    suite.run("basis linear reproduction " + tag, 1e-10, [&] {
        double worst = 0.0;
        for (double t : ts) {
            const auto w = basis_weights(p, t).w;
            double s = 0.0;
            for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * static_cast<double>(i) / p.m;
            worst = std::max(worst, std::abs(s - t));
        }
        return worst;
    });
    suite.run("basis nonnegativity " + tag, 1e-15, [&] {
        double worst = 0.0;
        for (double t : ts)
            for (double v : basis_weights(p, t).w) worst = std::max(worst, -v);
        return worst;
    });
    suite.run("basis endpoint interpolation " + tag, 0.0, [&] {
        const auto w0 = basis_weights(p, 0.0).w;
        const auto w1 = basis_weights(p, 1.0).w;
        double worst = std::abs(w0.front() - 1.0) + std::abs(w1.back() - 1.0);
        for (std::size_t i = 1; i < w0.size(); ++i) worst += std::abs(w0[i]);
        for (std::size_t i = 0; i + 1 < w1.size(); ++i) worst += std::abs(w1[i]);
        return worst;
    });
    suite.run("Bernstein reduction at beta=0 " + tag, 1e-12, [&] {
        const CheneySharmaParams b0{p.m, 0.0};
        double worst = 0.0;
        for (double t : ts) {
            const auto w = basis_weights(b0, t).w;
            double binom = 1.0;
            for (int i = 0; i <= p.m; ++i) {
                if (i > 0) binom = binom * (p.m - i + 1) / i;
                const double bern = binom * std::pow(t, i) * std::pow(1.0 - t, p.m - i);
                worst = std::max(worst, std::abs(w[i] - bern));
            }
        }
        return worst;
    });
    if (p.m >= 2)
        suite.run("second moment closed form vs direct sum " + tag, 1e-10, [&] {
            double worst = 0.0;
            for (double t : unit_grid(51)) {
                const double closed = second_moment(p, t);
                const double direct = second_moment_direct(p, t);
                const double scale = std::abs(direct) > 0.0 ? std::abs(direct) : 1.0;
                worst = std::max(worst, std::abs(closed - direct) / scale);
            }
            return worst;
        });
}

}  // namespace

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    FieldRegistryEntry entry;
    try {
        config.validate();
        entry = lookup_field(config.field, config.h);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Suite suite(out);
    const auto params = config.params();

    basis_checks(suite, "x", params.x_params);
    basis_checks(suite, "y", params.y_params);

    std::optional<CurvedTriangle> maybe_tri;
    try {
        maybe_tri.emplace(make_triangle(config));
    } catch (const Error& e) {
        suite.fail("triangle construction (" + format_curve(config.curve) + ")", e.what());
        out << "FAILED " << suite.failures() << " check(s)\n";
        return kExitFailure;
    }
    const CurvedTriangle& tri = *maybe_tri;
    const double h = tri.h();
    const ScalarField& F = entry.field;

    // curved_domain
    suite.run("curve inverse consistency", 1e-10, [&] {
        double worst = 0.0;
        for (double t : unit_grid(101)) {
            const double u = t * h;
            worst = std::max({worst, std::abs(tri.g(tri.f(u)) - u), std::abs(tri.f(tri.g(u)) - u)});
        }
        return worst;
    });
    suite.run("node containment and uniformity", 1e-12, [&] {
        double worst = 0.0;
        for (double t : unit_grid(11)) {
            const double c = t * h;
            for (auto axis : {Axis::x, Axis::y}) {
                const int count = axis == Axis::x ? config.m : config.n;
                const auto nodes = nodes_along(tri, count, c, axis);
                const double gap = nodes[1] - nodes[0];
                for (std::size_t k = 0; k < nodes.size(); ++k) {
                    const double px = axis == Axis::x ? nodes[k] : c;
                    const double py = axis == Axis::x ? c : nodes[k];
                    if (!tri.contains(px, py, 1e-12)) return std::numeric_limits<double>::infinity();
                    if (k > 0) worst = std::max(worst, std::abs((nodes[k] - nodes[k - 1]) - gap));
                }
            }
        }
        return worst;
    });

    // cs_operators
    auto max_defect = [&](OperatorKind kind, const std::vector<Point>& pts, const ScalarField& G) {
        double worst = 0.0;
        for (const auto& p : pts) worst = std::max(worst, std::abs(apply(kind, tri, params, G, p.x, p.y) - G(p.x, p.y)));
        return worst;
    };
    const auto g1 = boundary_sample(tri, Edge::gamma1, 21);
    const auto g2 = boundary_sample(tri, Edge::gamma2, 21);
    const auto g3 = boundary_sample(tri, Edge::gamma3, 21);
    const std::vector<Point> vertices{tri.v1(), tri.v2(), tri.v3()};
    auto join = [](std::initializer_list<const std::vector<Point>*> parts) {
        std::vector<Point> all;
        for (const auto* p : parts) all.insert(all.end(), p->begin(), p->end());
        return all;
    };
    const auto g13 = join({&g1, &g3});
    const auto g23 = join({&g2, &g3});
    const auto g3v = join({&g3, &vertices});
    const auto boundary = whole_boundary(tri, 20);

    suite.run("Qx interpolates on Gamma1 and Gamma3", 1e-9, [&] { return max_defect(OperatorKind::qx, g13, F); });
    suite.run("Qy interpolates on Gamma2 and Gamma3", 1e-9, [&] { return max_defect(OperatorKind::qy, g23, F); });
    suite.run("P1 interpolates at vertices and on Gamma3", 1e-9, [&] { return max_defect(OperatorKind::p1, g3v, F); });
    suite.run("P2 interpolates at vertices and on Gamma3", 1e-9, [&] { return max_defect(OperatorKind::p2, g3v, F); });
    suite.run("S1 reproduces F on the boundary", 1e-9, [&] { return max_defect(OperatorKind::s1, boundary, F); });
    suite.run("S2 reproduces F on the boundary", 1e-9, [&] { return max_defect(OperatorKind::s2, boundary, F); });

    const auto interior = random_interior(tri, 50, 20240607u);
    suite.run("Qx exact on x^i y^j, i<=1", 1e-10, [&] {
        double worst = 0.0;
        for (int i = 0; i <= 1; ++i)
            for (int j = 0; j <= 3; ++j) worst = std::max(worst, max_defect(OperatorKind::qx, interior, monomial(i, j)));
        return worst;
    });
    suite.run("Qy exact on x^i y^j, j<=1", 1e-10, [&] {
        double worst = 0.0;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 1; ++j) worst = std::max(worst, max_defect(OperatorKind::qy, interior, monomial(i, j)));
        return worst;
    });

    const std::vector<Point> few(interior.begin(), interior.begin() + 25);
    suite.run("P1 equals nested Qx(Qy F)", 1e-12, [&] {
        const ScalarField inner{"qy F", [&](double x, double y) { return apply_qy(tri, params, F, x, y); }, {}, {}};
        double worst = 0.0;
        for (const auto& p : few)
            worst = std::max(worst, std::abs(apply_p1(tri, params, F, p.x, p.y) - apply_qx(tri, params, inner, p.x, p.y)));
        return worst;
    });
    suite.run("P2 equals nested Qy(Qx F)", 1e-12, [&] {
        const ScalarField inner{"qx F", [&](double x, double y) { return apply_qx(tri, params, F, x, y); }, {}, {}};
        double worst = 0.0;
        for (const auto& p : few)
            worst = std::max(worst, std::abs(apply_p2(tri, params, F, p.x, p.y) - apply_qy(tri, params, inner, p.x, p.y)));
        return worst;
    });
    suite.run("Boolean identity S1 + P1 = Qx + Qy", 1e-13, [&] {
        double worst = 0.0;
        for (const auto& p : few) {
            const double lhs = apply_s1(tri, params, F, p.x, p.y) + apply_p1(tri, params, F, p.x, p.y);
            const double rhs = apply_qx(tri, params, F, p.x, p.y) + apply_qy(tri, params, F, p.x, p.y);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        return worst;
    });
    suite.run("P1 restricts to Qx on Gamma2 and Qy on Gamma1", 1e-10, [&] {
        double worst = 0.0;
        for (const auto& p : g2)
            worst = std::max(worst, std::abs(apply_p1(tri, params, F, p.x, 0.0) - apply_qx(tri, params, F, p.x, 0.0)));
        for (const auto& p : g1)
            worst = std::max(worst, std::abs(apply_p1(tri, params, F, 0.0, p.y) - apply_qy(tri, params, F, 0.0, p.y)));
        return worst;
    });

    // error_analysis
    suite.run("Peano kernel sign (x and y)", 1e-12, [&] {
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& p : few)
            for (double t : unit_grid(101)) {
                worst = std::max(worst, peano_kernel(tri, params, p.x, p.y, t * tri.g(p.y)));
                worst = std::max(worst, peano_kernel_y(tri, params, p.x, p.y, t * tri.f(p.x)));
            }
        return std::max(worst, 0.0);
    });
    suite.run("remainder of e20 equals minus moment gap", 1e-10, [&] {
        double worst = 0.0;
        for (const auto& p : few) {
            worst = std::max(worst, std::abs(remainder(OperatorKind::qx, tri, params, monomial(2, 0), p.x, p.y) +
                                             moment_gap_x(tri, params, p.x, p.y)));
            worst = std::max(worst, std::abs(remainder(OperatorKind::qy, tri, params, monomial(0, 2), p.x, p.y) +
                                             moment_gap_y(tri, params, p.x, p.y)));
        }
        return worst;
    });
    suite.run("moment gaps nonnegative", 1e-12, [&] {
        double worst = 0.0;
        for (const auto& p : join({&interior, &g1, &g2, &g3})) {
            worst = std::max(worst, -moment_gap_x(tri, params, p.x, p.y));
            worst = std::max(worst, -moment_gap_y(tri, params, p.x, p.y));
        }
        return worst;
    });
    suite.run("Peano integral equals remainder for x^3 and y^3", 1e-8, [&] {
        auto cubic_x = lookup_field("e30", h).field;
        auto cubic_y = lookup_field("e03", h).field;
        double worst = 0.0;
        for (const auto& p : few) {
            worst = std::max(worst, std::abs(peano_remainder(tri, params, cubic_x, p.x, p.y, Axis::x) -
                                             remainder(OperatorKind::qx, tri, params, cubic_x, p.x, p.y)));
            worst = std::max(worst, std::abs(peano_remainder(tri, params, cubic_y, p.x, p.y, Axis::y) -
                                             remainder(OperatorKind::qy, tri, params, cubic_y, p.x, p.y)));
        }
        return worst;
    });
    suite.run("certified bounds hold (sin_pi_x, sin_cos)", 0.0, [&] {
        const auto sx = lookup_field("sin_pi_x", h);
        const auto sc = lookup_field("sin_cos", h);
        const auto wx = lipschitz_moduli(*sx.lipschitz);
        const auto wc = lipschitz_moduli(*sc.lipschitz);
        double worst = 0.0;
        for (const auto& p : interior) {
            const double gap = moment_gap_x(tri, params, p.x, p.y);
            if (gap > 0.0) {
                const double b = bound_directional(tri, params, p.x, p.y, std::sqrt(gap), Axis::x, wx.along_x);
                worst = std::max(worst, std::abs(remainder(OperatorKind::qx, tri, params, sx.field, p.x, p.y)) - b);
            }
            worst = std::max(worst, std::abs(remainder(OperatorKind::p1, tri, params, sc.field, p.x, p.y)) -
                                        bound_product(tri, params, p.x, p.y, wc.joint));
            worst = std::max(worst, std::abs(remainder(OperatorKind::s1, tri, params, sc.field, p.x, p.y)) -
                                        bound_boolean(tri, params, p.x, p.y, wc));
        }
        return std::max(worst, 0.0);
    });
    suite.run("modulus nondecreasing in delta", 0.0, [&] {
        double worst = 0.0;
        const double fixed = 0.5 * h;
        for (auto axis : {Axis::x, Axis::y}) {
            double previous = 0.0;
            for (double d : {0.05, 0.1, 0.2, 0.4}) {
                const double v = modulus_1d(tri, F, fixed, axis, d * h, 401).value;
                worst = std::max(worst, previous - v);
                previous = v;
            }
        }
        double previous = 0.0;
        for (double d : {0.05, 0.1, 0.2, 0.4}) {
            const double v = modulus_2d(tri, F, d * h, d * h, 101).value;
            worst = std::max(worst, previous - v);
            previous = v;
        }
        return worst;
    });

    if (suite.failures() > 0) {
        out << "FAILED " << suite.failures() << " check(s)\n";
        return kExitFailure;
    }
    out << "all checks passed\n";
    return kExitOk;
}

}  // namespace curvedcs::cli
