#include "curvedcs/error.hpp"

namespace curvedcs {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_parameter: return "invalid parameter";
        case Errc::degenerate_input: return "degenerate input";
        case Errc::out_of_range: return "out of range";
        case Errc::out_of_domain: return "out of domain";
        case Errc::length_mismatch: return "length mismatch";
        case Errc::undefined_sum: return "undefined sum";
        case Errc::non_convergence: return "non-convergence";
        case Errc::invariant_violation: return "invariant violation";
        case Errc::missing_derivative: return "missing derivative";
        case Errc::negative_gap: return "negative moment gap";
    }
    return "unknown error";
}

}  // namespace curvedcs
