#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvedcs/domain.hpp"
#include "curvedcs/operators.hpp"

namespace curvedcs::cli {

// Thrown for anything the user can fix in the config or flags; maps to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

enum class BoundMode { automatic, certified, estimate };

struct RunConfig {
    double h = 1.0;
    CurveSpec curve = StraightLine{};
    int m = 5;
    int n = 6;
    double beta = 1.0;
    double b = 1.0;
    std::string field = "gentle";
    int grid = 33;
    std::string op = "all";  // comma list of qx,qy,p1,p2,s1,s2 or "all"
    std::string out_dir = "out";
    OutputFormat format = OutputFormat::csv;

    // bounds
    BoundMode bound_mode = BoundMode::automatic;
    int bound_points = 9;
    int modulus_resolution = 201;

    // nodes
    std::optional<double> probe_x;
    std::optional<double> probe_y;

    BivariateParams params() const { return {{m, beta}, {n, b}}; }

    // Throws ConfigError on out-of-range values and unknown names. Does not
    // construct the triangle (curve invariants are checked there).
    void validate() const;

    // Surfaces requested by `op`, in emission order. "all" expands to
    // qx, qy, p1, p2, s1.
    std::vector<OperatorKind> operators() const;
};

// Command-line values layered over a config file; unset members leave the
// file (or default) value alone.
struct ConfigOverrides {
    std::optional<double> h;
    std::optional<std::string> curve;
    std::optional<int> m, n;
    std::optional<double> beta, b;
    std::optional<std::string> field;
    std::optional<int> grid;
    std::optional<std::string> op;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::string> mode;
    std::optional<int> points;
    std::optional<int> resolution;
    std::optional<double> x, y;
};

void apply_overrides(RunConfig& config, const ConfigOverrides& overrides);

nlohmann::json to_json(const RunConfig& config);
RunConfig run_config_from_json(const nlohmann::json& j);

// Reads a JSON config file; missing keys keep their defaults.
RunConfig load_run_config(const std::string& path);

std::string_view to_string(OutputFormat format) noexcept;
std::string_view to_string(BoundMode mode) noexcept;
OutputFormat parse_format(const std::string& text);
BoundMode parse_bound_mode(const std::string& text);

}  // namespace curvedcs::cli
