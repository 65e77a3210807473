#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvedcs/domain.hpp"
#include "curvedcs/field.hpp"
#include "curvedcs/operators.hpp"
#include "run_config.hpp"

namespace curvedcs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct GridRecord {
    double x = 0.0;
    double y = 0.0;
    double value = 0.0;
};

// One sampled surface; records are row-major in y then x.
struct GridSample {
    std::string surface;
    std::vector<GridRecord> records;
};

// "field" for the raw function, otherwise the operator name.
std::string surface_name(std::optional<OperatorKind> kind);

// Lattice coordinate k of an N-point partition of [0,h]; the last one is h exactly.
double lattice_coordinate(double h, int N, int k);

// Evaluates F (no operator) or kind F on the N x N lattice of [0,h]^2,
// dropping points outside the triangle. Evaluation failures are rethrown with
// the offending point in the message.
GridSample sample_grid(const CurvedTriangle& tri, const BivariateParams& params, const ScalarField& F,
                       std::optional<OperatorKind> kind, int N);

// Header "x,y,value", 17 significant digits.
void write_csv(const GridSample& sample, std::ostream& out);
// {"meta": {...config, "surface": name}, "points": [[x,y,value], ...]}
void write_json(const GridSample& sample, const nlohmann::json& meta, std::ostream& out);

CurvedTriangle make_triangle(const RunConfig& config);

int run_sample(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_bounds(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_nodes(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace curvedcs::cli
