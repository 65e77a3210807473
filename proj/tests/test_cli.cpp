#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli/commands.hpp"
#include "cli/field_registry.hpp"
#include "cli/run_config.hpp"
#include "curvedcs/error.hpp"

using namespace curvedcs;
using namespace curvedcs::cli;
namespace fs = std::filesystem;

namespace {

class TempDir {
  public:
    TempDir() {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        path_ = fs::temp_directory_path() / (std::string("curvedcs_") + info->test_suite_name() + "_" + info->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& leaf) const { return path_ / leaf; }

  private:
    fs::path path_;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<GridRecord> read_csv(const fs::path& path) {
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "x,y,value");
    std::vector<GridRecord> out;
    while (std::getline(in, line)) {
        GridRecord r;
        char comma;
        std::istringstream s(line);
        s >> r.x >> comma >> r.y >> comma >> r.value;
        out.push_back(r);
    }
    return out;
}

struct Run {
    int code;
    std::string out, err;
};

template <class Fn>
Run run(Fn fn, const RunConfig& config) {
    std::ostringstream out, err;
    const int code = fn(config, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(RunConfig, JsonRoundTripIsIdentity) {
    RunConfig c;
    c.h = 2.0;
    c.curve = MonotonePolynomial{{2.0, 0.0, -0.5}};
    c.m = 7;
    c.beta = 0.25;
    c.field = "poly:2,1,0.5;0,0,1";
    c.op = "p1,s2";
    c.format = OutputFormat::json;
    c.bound_mode = BoundMode::estimate;
    c.probe_y = 0.3;
    const auto once = to_json(c);
    EXPECT_EQ(to_json(run_config_from_json(once)), once);
    EXPECT_EQ(to_json(run_config_from_json(to_json(RunConfig{}))), to_json(RunConfig{}));
}

TEST(RunConfig, FileValuesThenFlagOverrides) {
    TempDir dir;
    std::ofstream(dir / "run.json") << R"({"triangle": {"h": 1, "curve": "circle"}, "params": {"m": 3}, "grid": 9})";
    RunConfig c = load_run_config((dir / "run.json").string());
    EXPECT_EQ(c.m, 3);
    EXPECT_EQ(c.n, 6);
    EXPECT_EQ(c.grid, 9);
    EXPECT_EQ(format_curve(c.curve), format_curve(SuperellipseArc{2.0}));

    ConfigOverrides o;
    o.m = 4;
    o.curve = "line";
    apply_overrides(c, o);
    EXPECT_EQ(c.m, 4);
    EXPECT_EQ(c.grid, 9);
    EXPECT_TRUE(std::holds_alternative<StraightLine>(c.curve));
}

TEST(RunConfig, ValidationErrors) {
    const auto bad = [](auto mutate) {
        RunConfig c;
        mutate(c);
        EXPECT_THROW(c.validate(), ConfigError);
    };
    bad([](RunConfig& c) { c.m = 0; });
    bad([](RunConfig& c) { c.beta = -1.0; });
    bad([](RunConfig& c) { c.grid = 1; });
    bad([](RunConfig& c) { c.field = "nope"; });
    bad([](RunConfig& c) { c.op = "p1,q9"; });
    EXPECT_THROW(load_run_config("/nonexistent/run.json"), ConfigError);
    ConfigOverrides o;
    o.curve = "spline";
    RunConfig c;
    EXPECT_THROW(apply_overrides(c, o), ConfigError);
    EXPECT_THROW(parse_format("xml"), ConfigError);
}

TEST(RunConfig, OperatorExpansion) {
    RunConfig c;
    EXPECT_EQ(c.operators(), (std::vector<OperatorKind>{OperatorKind::qx, OperatorKind::qy, OperatorKind::p1,
                                                        OperatorKind::p2, OperatorKind::s1}));
    c.op = "s2,qx";
    EXPECT_EQ(c.operators(), (std::vector<OperatorKind>{OperatorKind::s2, OperatorKind::qx}));
}

TEST(FieldRegistry, Lookup) {
    EXPECT_NEAR(lookup_field("gentle", 1.0).field(0.5, 0.5), 1.0 / 3.0, 1e-16);
    EXPECT_NEAR(lookup_field("e21", 1.0).field(0.5, 0.3), 0.075, 1e-16);
    EXPECT_NEAR(lookup_field("poly:2,1,0.5;0,0,1", 1.0).field(0.5, 0.4), 1.05, 1e-15);
    const auto sin_entry = lookup_field("sin_pi_x", 1.0);
    ASSERT_TRUE(sin_entry.lipschitz);
    EXPECT_NEAR(sin_entry.lipschitz->x, M_PI, 1e-15);
    EXPECT_TRUE(field_exists("e44"));
    EXPECT_FALSE(field_exists("e55"));
    EXPECT_THROW(lookup_field("nope", 1.0), Error);
}

TEST(FieldRegistry, LipschitzConstantsHoldOnSamples) {
    for (const auto& name : builtin_field_names()) {
        const auto entry = lookup_field(name, 1.0);
        if (!entry.lipschitz) continue;
        for (int k = 0; k < 200; ++k) {
            const double x = k / 199.0, y = std::fmod(k * 0.618, 1.0), dx = 1e-3;
            EXPECT_LE(std::abs(entry.field(std::min(x + dx, 1.0), y) - entry.field(x, y)),
                      entry.lipschitz->x * dx * (1 + 1e-9) + 1e-15)
                << name;
            EXPECT_LE(std::abs(entry.field(y, std::min(x + dx, 1.0)) - entry.field(y, x)),
                      entry.lipschitz->y * dx * (1 + 1e-9) + 1e-15)
                << name;
        }
    }
}

TEST(Sample, WritesOneFilePerSurface) {
    TempDir dir;
    RunConfig c;
    c.out_dir = (dir / "out").string();
    const auto r = run(run_sample, c);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    for (const char* name : {"field", "qx", "qy", "p1", "p2", "s1"}) EXPECT_TRUE(fs::exists(dir / ("out/" + std::string(name) + ".csv"))) << name;
    EXPECT_FALSE(fs::exists(dir / "out/s2.csv"));
}

TEST(Sample, DeterministicOutput) {
    TempDir dir;
    RunConfig c;
    c.grid = 17;
    c.curve = SuperellipseArc{3.0};
    c.out_dir = (dir / "a").string();
    ASSERT_EQ(run(run_sample, c).code, kExitOk);
    c.out_dir = (dir / "b").string();
    ASSERT_EQ(run(run_sample, c).code, kExitOk);
    for (const char* name : {"field", "qx", "qy", "p1", "p2", "s1"})
        EXPECT_EQ(slurp(dir / ("a/" + std::string(name) + ".csv")), slurp(dir / ("b/" + std::string(name) + ".csv")));
}

TEST(Sample, MaskAndOrdering) {
    TempDir dir;
    RunConfig c;
    c.curve = SuperellipseArc{2.0};
    c.grid = 21;
    c.op = "s1";
    c.out_dir = (dir / "out").string();
    ASSERT_EQ(run(run_sample, c).code, kExitOk);
    const CurvedTriangle tri = make_triangle(c);
    const auto records = read_csv(dir / "out/s1.csv");
    ASSERT_FALSE(records.empty());
    for (std::size_t k = 0; k < records.size(); ++k) {
        EXPECT_TRUE(tri.contains(records[k].x, records[k].y, 0.0));
        if (k) EXPECT_TRUE(records[k - 1].y < records[k].y || (records[k - 1].y == records[k].y && records[k - 1].x < records[k].x));
    }
    std::size_t inside = 0;
    for (int j = 0; j < 21; ++j)
        for (int i = 0; i < 21; ++i) inside += tri.contains(lattice_coordinate(1.0, 21, i), lattice_coordinate(1.0, 21, j), 0.0);
    EXPECT_EQ(records.size(), inside);
}

TEST(Sample, ConstantFieldIsReproducedExactly) {
    TempDir dir;
    RunConfig c;
    c.field = "e00";
    c.op = "all";
    c.out_dir = (dir / "out").string();
    ASSERT_EQ(run(run_sample, c).code, kExitOk);
    for (const char* name : {"field", "qx", "qy", "p1", "p2", "s1"})
        for (const auto& r : read_csv(dir / ("out/" + std::string(name) + ".csv"))) EXPECT_NEAR(r.value, 1.0, 1e-14);
}

TEST(Sample, GentleCentreOnCircle) {
    TempDir dir;
    RunConfig c;
    c.curve = SuperellipseArc{2.0};
    c.out_dir = (dir / "out").string();
    ASSERT_EQ(run(run_sample, c).code, kExitOk);
    bool found = false;
    for (const auto& r : read_csv(dir / "out/field.csv"))
        if (r.x == 0.5 && r.y == 0.5) {
            found = true;
            EXPECT_NEAR(r.value, 1.0 / 3.0, 1e-16);
        }
    EXPECT_TRUE(found);
}

TEST(Sample, JsonFormat) {
    TempDir dir;
    RunConfig c;
    c.grid = 5;
    c.op = "qx";
    c.format = OutputFormat::json;
    c.out_dir = (dir / "out").string();
    ASSERT_EQ(run(run_sample, c).code, kExitOk);
    const auto doc = nlohmann::json::parse(slurp(dir / "out/qx.json"));
    EXPECT_EQ(doc["meta"]["surface"], "qx");
    EXPECT_EQ(doc["meta"]["grid"], 5);
    EXPECT_EQ(doc["points"].size(), 15u);
    EXPECT_EQ(doc["points"][0].size(), 3u);
}

TEST(Sample, UsageErrors) {
    RunConfig c;
    c.field = "nope";
    EXPECT_EQ(run(run_sample, c).code, kExitUsage);
    c = RunConfig{};
    c.curve = MonotonePolynomial{{1.0, 0.5, -1.5}};
    EXPECT_EQ(run(run_sample, c).code, kExitUsage);
}

TEST(Verify, DefaultsPass) {
    const auto r = run(run_verify, RunConfig{});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Verify, BernsteinPath) {
    RunConfig c;
    c.beta = 0.0;
    c.b = 0.0;
    const auto r = run(run_verify, c);
    EXPECT_EQ(r.code, kExitOk) << r.out;
}

TEST(Verify, BrokenCurveIsReported) {
    RunConfig c;
    c.curve = MonotonePolynomial{{1.0, 0.5, -1.5}};
    const auto r = run(run_verify, c);
    EXPECT_EQ(r.code, kExitFailure);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Bounds, LinearFieldHasZeroRemainders) {
    RunConfig c;
    c.field = "e10";
    const auto r = run(run_bounds, c);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'x') continue;
        std::vector<std::string> cells;
        std::stringstream s(line);
        for (std::string cell; std::getline(s, cell, ',');) cells.push_back(cell);
        ASSERT_EQ(cells.size(), 10u);
        for (int k : {2, 4, 6, 8}) EXPECT_LE(std::stod(cells[k]), 1e-14) << line;
        ++rows;
    }
    EXPECT_GT(rows, 0);
    EXPECT_NE(r.out.find("# violations=0"), std::string::npos);
}

TEST(Bounds, EstimateModeIsMarked) {
    RunConfig c;
    c.bound_mode = BoundMode::estimate;
    const auto r = run(run_bounds, c);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("# mode=estimate", 0), 0u);
}

TEST(Bounds, CertifiedSinPiX) {
    RunConfig c;
    c.field = "sin_pi_x";
    c.bound_mode = BoundMode::certified;
    const auto r = run(run_bounds, c);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("# mode=certified", 0), 0u);
    EXPECT_NE(r.out.find("# violations=0"), std::string::npos);
}

TEST(Nodes, Listings) {
    RunConfig c;
    c.m = 4;
    c.probe_y = 0.2;
    auto r = run(run_nodes, c);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "x-nodes: 0, 0.2, 0.4, 0.6, 0.8\n");

    c = RunConfig{};
    c.curve = SuperellipseArc{2.0};
    c.n = 2;
    c.probe_x = 0.6;
    r = run(run_nodes, c);
    EXPECT_EQ(r.out, "y-nodes: 0, 0.4, 0.8\n");

    c = RunConfig{};
    c.probe_y = 1.0;
    r = run(run_nodes, c);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "x-nodes: 0, 0, 0, 0, 0, 0\n");
    EXPECT_NE(r.err.find("degenerate"), std::string::npos);

    EXPECT_EQ(run(run_nodes, RunConfig{}).code, kExitUsage);
}
