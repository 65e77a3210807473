#include "run_config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "curvedcs/error.hpp"
#include "field_registry.hpp"

namespace curvedcs::cli {

std::string_view to_string(OutputFormat format) noexcept {
    return format == OutputFormat::csv ? "csv" : "json";
}

std::string_view to_string(BoundMode mode) noexcept {
    switch (mode) {
        case BoundMode::automatic: return "auto";
        case BoundMode::certified: return "certified";
        case BoundMode::estimate: return "estimate";
    }
    return "auto";
}

OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw ConfigError("unknown output format '" + text + "' (expected csv or json)");
}

BoundMode parse_bound_mode(const std::string& text) {
    if (text == "auto") return BoundMode::automatic;
    if (text == "certified") return BoundMode::certified;
    if (text == "estimate") return BoundMode::estimate;
    throw ConfigError("unknown bound mode '" + text + "' (expected auto, certified or estimate)");
}

std::vector<OperatorKind> RunConfig::operators() const {
    std::vector<OperatorKind> kinds;
    auto add = [&](OperatorKind kind) {
        if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) kinds.push_back(kind);
    };
    std::istringstream is(op);
    std::string token;
    while (std::getline(is, token, ',')) {
        if (token == "all") {
            for (auto kind : {OperatorKind::qx, OperatorKind::qy, OperatorKind::p1, OperatorKind::p2,
                              OperatorKind::s1})
                add(kind);
            continue;
        }
        try {
            add(parse_operator(token));
        } catch (const Error&) {
            throw ConfigError("unknown operator '" + token + "' (expected qx|qy|p1|p2|s1|s2|all)");
        }
    }
    if (kinds.empty()) throw ConfigError("no operator requested");
    return kinds;
}

void RunConfig::validate() const {
    if (!(h > 0.0)) throw ConfigError("h must be positive");
    if (m < 1 || n < 1) throw ConfigError("m and n must be >= 1");
    if (!(beta >= 0.0) || !(b >= 0.0)) throw ConfigError("beta and b must be >= 0");
    if (grid < 2) throw ConfigError("grid must be >= 2");
    if (bound_points < 2) throw ConfigError("bound points must be >= 2");
    if (modulus_resolution < 2) throw ConfigError("modulus resolution must be >= 2");
    if (!field_exists(field)) throw ConfigError("unknown field '" + field + "'");
    (void)operators();
}

nlohmann::json to_json(const RunConfig& c) {
    nlohmann::json j;
    j["triangle"] = {{"h", c.h}, {"curve", format_curve(c.curve)}};
    j["params"] = {{"m", c.m}, {"n", c.n}, {"beta", c.beta}, {"b", c.b}};
    j["field"] = c.field;
    j["grid"] = c.grid;
    j["operator"] = c.op;
    j["output"] = {{"dir", c.out_dir}, {"format", to_string(c.format)}};
    j["bounds"] = {{"mode", to_string(c.bound_mode)},
                   {"points", c.bound_points},
                   {"resolution", c.modulus_resolution}};
    if (c.probe_x || c.probe_y) {
        auto& probe = j["probe"];
        probe = nlohmann::json::object();
        if (c.probe_x) probe["x"] = *c.probe_x;
        if (c.probe_y) probe["y"] = *c.probe_y;
    }
    return j;
}

RunConfig run_config_from_json(const nlohmann::json& j) {
    RunConfig c;
    try {
        if (!j.is_object()) throw ConfigError("config root must be an object");
        if (j.contains("triangle")) {
            const auto& t = j.at("triangle");
            c.h = t.value("h", c.h);
            if (t.contains("curve")) c.curve = parse_curve(t.at("curve").get<std::string>());
        }
        if (j.contains("params")) {
            const auto& p = j.at("params");
            c.m = p.value("m", c.m);
            c.n = p.value("n", c.n);
            c.beta = p.value("beta", c.beta);
            c.b = p.value("b", c.b);
        }
        c.field = j.value("field", c.field);
        c.grid = j.value("grid", c.grid);
        c.op = j.value("operator", c.op);
        if (j.contains("output")) {
            const auto& o = j.at("output");
            c.out_dir = o.value("dir", c.out_dir);
            if (o.contains("format")) c.format = parse_format(o.at("format").get<std::string>());
        }
        if (j.contains("bounds")) {
            const auto& bd = j.at("bounds");
            if (bd.contains("mode")) c.bound_mode = parse_bound_mode(bd.at("mode").get<std::string>());
            c.bound_points = bd.value("points", c.bound_points);
            c.modulus_resolution = bd.value("resolution", c.modulus_resolution);
        }
        if (j.contains("probe")) {
            const auto& pr = j.at("probe");
            if (pr.contains("x")) c.probe_x = pr.at("x").get<double>();
            if (pr.contains("y")) c.probe_y = pr.at("y").get<double>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    return c;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("cannot parse config file '" + path + "': " + e.what());
    }
    return run_config_from_json(j);
}

void apply_overrides(RunConfig& c, const ConfigOverrides& o) {
    try {
        if (o.curve) c.curve = parse_curve(*o.curve);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    if (o.h) c.h = *o.h;
    if (o.m) c.m = *o.m;
    if (o.n) c.n = *o.n;
    if (o.beta) c.beta = *o.beta;
    if (o.b) c.b = *o.b;
    if (o.field) c.field = *o.field;
    if (o.grid) c.grid = *o.grid;
    if (o.op) c.op = *o.op;
    if (o.out) c.out_dir = *o.out;
    if (o.format) c.format = parse_format(*o.format);
    if (o.mode) c.bound_mode = parse_bound_mode(*o.mode);
    if (o.points) c.bound_points = *o.points;
    if (o.resolution) c.modulus_resolution = *o.resolution;
    if (o.x) c.probe_x = *o.x;
    if (o.y) c.probe_y = *o.y;
}

}  // namespace curvedcs::cli
