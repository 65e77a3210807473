#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvedcs/field.hpp"

namespace curvedcs::cli {

struct FieldRegistryEntry {
    ScalarField field;
    std::optional<Lipschitz> lipschitz;  // valid on [0,h]^2
};

// Built-in names:
//   gentle      1/3 exp(-81/16 ((x-1/2)^2 + (y-1/2)^2))
//   eIJ         x^I y^J for I, J in 0..4 (e.g. e21)
//   sin_pi_x    sin(pi x)
//   sin_cos     sin(pi x) cos(pi y)
// and inline polynomials "poly:I,J,c;I,J,c;..." (sum of c x^I y^J).
// Lipschitz constants depend on the domain size h. Throws
// curvedcs::Error(Errc::invalid_parameter) for unknown names.
FieldRegistryEntry lookup_field(const std::string& name, double h);

bool field_exists(const std::string& name);

std::vector<std::string> builtin_field_names();

}  // namespace curvedcs::cli
