#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "curvedcs/error.hpp"
#include "curvedcs/error_analysis.hpp"
#include "field_registry.hpp"

namespace curvedcs::cli {
namespace {

// remainders that vanish analytically still come out at ~1e-16 in double
// precision; a zero bound must not count them as violations
constexpr double kRoundingSlack = 1e-12;

std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fixed17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Interior lattice points (strictly inside) of a count x count lattice.
std::vector<Point> interior_lattice(const CurvedTriangle& tri, int count) {
    std::vector<Point> points;
    for (int j = 0; j < count; ++j)
        for (int i = 0; i < count; ++i) {
            const double x = lattice_coordinate(tri.h(), count, i);
            const double y = lattice_coordinate(tri.h(), count, j);
            if (x > 0.0 && y > 0.0 && x < tri.h() && y < tri.f(x)) points.push_back({x, y});
        }
    return points;
}

}  // namespace

std::string surface_name(std::optional<OperatorKind> kind) {
    return kind ? std::string(to_string(*kind)) : std::string("field");
}

double lattice_coordinate(double h, int N, int k) {
    return k == N - 1 ? h : h * k / (N - 1);
}

GridSample sample_grid(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                       std::optional<OperatorKind> kind, int N) {
    GridSample sample{surface_name(kind), {}};
    for (int j = 0; j < N; ++j) {
        const double y = lattice_coordinate(tri.h(), N, j);
        for (int i = 0; i < N; ++i) {
            const double x = lattice_coordinate(tri.h(), N, i);
            if (!tri.contains(x, y, 0.0)) continue;
            try {
                const double value = kind ? apply(*kind, tri, params, F, x, y) : F(x, y);
                sample.records.push_back({x, y, value});
            } catch (const Error& e) {
                throw Error(e.code(), sample.surface + " at (" + fixed17(x) + ", " + fixed17(y) + "): " + e.what());
            }
        }
    }
    return sample;
}

void write_csv(const GridSample& sample, std::ostream& out) {
    out << "x,y,value\n";
    for (const auto& r : sample.records) out << fixed17(r.x) << ',' << fixed17(r.y) << ',' << fixed17(r.value) << '\n';
}

void write_json(const GridSample& sample, const nlohmann::json& meta, std::ostream& out) {
    nlohmann::json doc;
    doc["meta"] = meta;
    doc["meta"]["surface"] = sample.surface;
    auto& points = doc["points"];
    points = nlohmann::json::array();
    for (const auto& r : sample.records) points.push_back({r.x, r.y, r.value});
    out << doc.dump() << '\n';
}

CurvedTriangle make_triangle(const RunConfig& config) {
    return CurvedTriangle(config.h, config.curve);
}

int run_sample(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<OperatorKind> kinds;
    std::optional<CurvedTriangle> tri;
    FieldRegistryEntry entry;
    try {
        config.validate();
        kinds = config.operators();
        tri.emplace(make_triangle(config));
        entry = lookup_field(config.field, config.h);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::vector<std::optional<OperatorKind>> surfaces{std::nullopt};
    surfaces.insert(surfaces.end(), kinds.begin(), kinds.end());

    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) {
        err << "error: cannot create output directory '" << config.out_dir << "': " << ec.message() << '\n';
        return kExitUsage;
    }

    const auto meta = to_json(config);
    const auto params = config.params();
    for (const auto& kind : surfaces) {
        GridSample sample;
        try {
            sample = sample_grid(*tri, params, entry.field, kind, config.grid);
        } catch (const Error& e) {
            err << "error: evaluation failed for " << e.what() << '\n';
            return kExitFailure;
        }
        const auto path = std::filesystem::path(config.out_dir) /
                          (sample.surface + (config.format == OutputFormat::csv ? ".csv" : ".json"));
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << path.string() << "'\n";
            return kExitFailure;
        }
        if (config.format == OutputFormat::csv)
            write_csv(sample, file);
        else
            write_json(sample, meta, file);
        out << path.string() << " (" << sample.records.size() << " points)\n";
    }
    return kExitOk;
}

int run_bounds(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::optional<CurvedTriangle> tri;
    FieldRegistryEntry entry;
    try {
        config.validate();
        tri.emplace(make_triangle(config));
        entry = lookup_field(config.field, config.h);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    BoundMode mode = config.bound_mode;
    if (mode == BoundMode::automatic) mode = entry.lipschitz ? BoundMode::certified : BoundMode::estimate;
    if (mode == BoundMode::certified && !entry.lipschitz) {
        err << "error: field '" << config.field << "' has no Lipschitz constants; use --mode estimate\n";
        return kExitUsage;
    }

    const auto params = config.params();
    const auto& F = entry.field;
    out << "# mode=" << to_string(mode) << " field=" << config.field << '\n';
    out << "x,y,abs_r_qx,bound_qx,abs_r_qy,bound_qy,abs_r_p1,bound_p1,abs_r_s1,bound_s1\n";

    int violations = 0;
    try {
        for (const auto& p : interior_lattice(*tri, config.bound_points)) {
            const Moduli omega = mode == BoundMode::certified
                                     ? lipschitz_moduli(*entry.lipschitz)
                                     : sampled_moduli(*tri, F, p.x, p.y, config.modulus_resolution);
            const double gx = std::max(moment_gap_x(*tri, params, p.x, p.y), 0.0);
            const double gy = std::max(moment_gap_y(*tri, params, p.x, p.y), 0.0);
            const double dx = gx > 0.0 ? std::sqrt(gx) : 1.0;
            const double dy = gy > 0.0 ? std::sqrt(gy) : 1.0;

            const double row[8] = {
                std::abs(remainder(OperatorKind::qx, *tri, params, F, p.x, p.y)),
                bound_directional(*tri, params, p.x, p.y, dx, Axis::x, omega.along_x),
                std::abs(remainder(OperatorKind::qy, *tri, params, F, p.x, p.y)),
                bound_directional(*tri, params, p.x, p.y, dy, Axis::y, omega.along_y),
                std::abs(remainder(OperatorKind::p1, *tri, params, F, p.x, p.y)),
                bound_product(*tri, params, p.x, p.y, omega.joint),
                std::abs(remainder(OperatorKind::s1, *tri, params, F, p.x, p.y)),
                bound_boolean(*tri, params, p.x, p.y, omega),
            };
            out << shortest(p.x) << ',' << shortest(p.y);
            for (double v : row) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6e", v);
                out << ',' << buf;
            }
            out << '\n';
            for (int k = 0; k < 8; k += 2)
                if (row[k] > row[k + 1] + kRoundingSlack) ++violations;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    out << "# violations=" << violations << '\n';
    if (violations > 0 && mode == BoundMode::certified) {
        err << "error: " << violations << " certified bound violation(s)\n";
        return kExitFailure;
    }
    return kExitOk;
}

int run_nodes(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::optional<CurvedTriangle> tri;
    try {
        config.validate();
        tri.emplace(make_triangle(config));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (!config.probe_x && !config.probe_y) {
        err << "error: nodes needs --y (x-direction partition) and/or --x (y-direction partition)\n";
        return kExitUsage;
    }

    auto print = [&](const char* label, int count, double fixed, Axis axis) {
        const auto nodes = nodes_along(*tri, count, fixed, axis);
        out << label;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.15g", nodes[k]);
            out << (k ? ", " : "") << buf;
        }
        out << '\n';
        if (nodes.back() == 0.0)
            err << "warning: degenerate partition, the segment collapses to a vertex\n";
    };
    try {
        if (config.probe_y) print("x-nodes: ", config.m, *config.probe_y, Axis::x);
        if (config.probe_x) print("y-nodes: ", config.n, *config.probe_x, Axis::y);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace curvedcs::cli
