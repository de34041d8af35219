#pragma once

#include "hilb/poly.hpp"

#include <string>

namespace hilb {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Textual polynomial format: `coeff*var^e*...` terms joined by +/-,
// e.g. "x^2*y - 1/2*y + 3". Printing and parsing round-trip exactly.
std::string to_string(const Poly& p);
Poly parse_poly(const Context& ctx, const std::string& text);

std::string to_string(const Mono& m, const Context& ctx);

} // namespace hilb
