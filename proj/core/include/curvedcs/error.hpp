#pragma once

#include <stdexcept>
#include <string>

namespace curvedcs {

enum class Errc {
    invalid_parameter,
    degenerate_input,
    out_of_range,
    out_of_domain,
    length_mismatch,
    undefined_sum,
    non_convergence,
    invariant_violation,
    missing_derivative,
    negative_gap,
};

const char* to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

}  // namespace curvedcs
