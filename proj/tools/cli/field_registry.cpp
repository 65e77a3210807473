#include "field_registry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "curvedcs/error.hpp"

namespace curvedcs::cli {
namespace {

struct Monomial {
    int i = 0;
    int j = 0;
    double c = 1.0;
};

double ipow(double base, int exponent) {
    double r = 1.0;
    for (int k = 0; k < exponent; ++k) r *= base;
    return r;
}

FieldRegistryEntry polynomial(std::string name, std::vector<Monomial> terms, double h) {
    FieldRegistryEntry entry;
    entry.field.name = std::move(name);
    entry.field.value = [terms](double x, double y) {
        double sum = 0.0;
        for (const auto& t : terms) sum += t.c * ipow(x, t.i) * ipow(y, t.j);
        return sum;
    };
    entry.field.d20 = [terms](double x, double y) {
        double sum = 0.0;
        for (const auto& t : terms)
            if (t.i >= 2) sum += t.c * t.i * (t.i - 1) * ipow(x, t.i - 2) * ipow(y, t.j);
        return sum;
    };
    entry.field.d02 = [terms](double x, double y) {
        double sum = 0.0;
        for (const auto& t : terms)
            if (t.j >= 2) sum += t.c * t.j * (t.j - 1) * ipow(x, t.i) * ipow(y, t.j - 2);
        return sum;
    };
    Lipschitz lip;
    for (const auto& t : terms) {
        if (t.i > 0) lip.x += std::abs(t.c) * t.i * ipow(h, t.i + t.j - 1);
        if (t.j > 0) lip.y += std::abs(t.c) * t.j * ipow(h, t.i + t.j - 1);
    }
    entry.lipschitz = lip;
    return entry;
}

std::optional<Monomial> parse_monomial_name(const std::string& name) {
    if (name.size() != 3 || name[0] != 'e') return std::nullopt;
    const int i = name[1] - '0';
    const int j = name[2] - '0';
    if (i < 0 || i > 4 || j < 0 || j > 4) return std::nullopt;
    return Monomial{i, j, 1.0};
}

std::vector<Monomial> parse_inline_polynomial(const std::string& body) {
    std::vector<Monomial> terms;
    std::istringstream terms_in(body);
    std::string term;
    while (std::getline(terms_in, term, ';')) {
        std::istringstream parts(term);
        std::string a, b, c;
        if (!std::getline(parts, a, ',') || !std::getline(parts, b, ',') || !std::getline(parts, c))
            throw Error(Errc::invalid_parameter, "polynomial term '" + term + "' must read I,J,coef");
        try {
            std::size_t ua = 0, ub = 0, uc = 0;
            Monomial mono{std::stoi(a, &ua), std::stoi(b, &ub), std::stod(c, &uc)};
            if (ua != a.size() || ub != b.size() || uc != c.size() || mono.i < 0 || mono.j < 0)
                throw std::invalid_argument(term);
            terms.push_back(mono);
        } catch (const std::exception&) {
            throw Error(Errc::invalid_parameter, "cannot parse polynomial term '" + term + "'");
        }
    }
    if (terms.empty()) throw Error(Errc::invalid_parameter, "empty polynomial");
    return terms;
}

FieldRegistryEntry gentle() {
    // F = exp(-a r^2)/3 with a = 81/16
    constexpr double a = 81.0 / 16.0;
    FieldRegistryEntry entry;
    entry.field.name = "gentle";
    entry.field.value = [](double x, double y) {
        const double dx = x - 0.5, dy = y - 0.5;
        return std::exp(-a * (dx * dx + dy * dy)) / 3.0;
    };
    entry.field.d20 = [](double x, double y) {
        const double dx = x - 0.5, dy = y - 0.5;
        return (4.0 * a * a * dx * dx - 2.0 * a) * std::exp(-a * (dx * dx + dy * dy)) / 3.0;
    };
    entry.field.d02 = [](double x, double y) {
        const double dx = x - 0.5, dy = y - 0.5;
        return (4.0 * a * a * dy * dy - 2.0 * a) * std::exp(-a * (dx * dx + dy * dy)) / 3.0;
    };
    // sup |dF/dx| = (2a/3) max_u u exp(-a u^2) = (2a/3) exp(-1/2) / sqrt(2a)
    const double slope = 2.0 * a / 3.0 * std::exp(-0.5) / std::sqrt(2.0 * a);
    entry.lipschitz = Lipschitz{slope, slope};
    return entry;
}

FieldRegistryEntry sin_pi_x() {
    using std::numbers::pi;
    FieldRegistryEntry entry;
    entry.field.name = "sin_pi_x";
    entry.field.value = [](double x, double) { return std::sin(pi * x); };
    entry.field.d20 = [](double x, double) { return -pi * pi * std::sin(pi * x); };
    entry.field.d02 = [](double, double) { return 0.0; };
    entry.lipschitz = Lipschitz{pi, 0.0};
    return entry;
}

FieldRegistryEntry sin_cos() {
    using std::numbers::pi;
    FieldRegistryEntry entry;
    entry.field.name = "sin_cos";
    entry.field.value = [](double x, double y) { return std::sin(pi * x) * std::cos(pi * y); };
    entry.field.d20 = [](double x, double y) { return -pi * pi * std::sin(pi * x) * std::cos(pi * y); };
    entry.field.d02 = [](double x, double y) { return -pi * pi * std::sin(pi * x) * std::cos(pi * y); };
    entry.lipschitz = Lipschitz{pi, pi};
    return entry;
}

}  // namespace

FieldRegistryEntry lookup_field(const std::string& name, double h) {
    if (name == "gentle") return gentle();
    if (name == "sin_pi_x") return sin_pi_x();
    if (name == "sin_cos") return sin_cos();
    if (auto mono = parse_monomial_name(name)) return polynomial(name, {*mono}, h);
    if (name.rfind("poly:", 0) == 0) return polynomial(name, parse_inline_polynomial(name.substr(5)), h);
    throw Error(Errc::invalid_parameter, "unknown field '" + name + "'");
}

bool field_exists(const std::string& name) {
    try {
        lookup_field(name, 1.0);
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::vector<std::string> builtin_field_names() {
    std::vector<std::string> names{"gentle", "sin_pi_x", "sin_cos"};
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) names.push_back("e" + std::to_string(i) + std::to_string(j));
    return names;
}

}  // namespace curvedcs::cli
