#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ffsieve/field.hpp"
#include "ffsieve/poly.hpp"

namespace ffsieve {

/// Canonical text: terms in descending degree joined by " + ", e.g. `2*t^3 + t + 1`.
/// Coefficients are least nonnegative residues; extension-field coefficients outside the
/// prime subfield print as `[c_{e-1},...,c_0]`. A unit coefficient on a non-constant
/// term is omitted. The zero polynomial prints as `0`.
std::string to_string(const Field& F, const Poly& f);
std::string to_string(const Field& F, Elem c);

/// Parses the canonical format plus a few conveniences: `-` between terms, optional `*`,
/// integer coefficients reduced mod p, repeated degrees summed.
/// Throws std::invalid_argument on malformed input.
Poly parse_poly(const Field& F, std::string_view text);
Elem parse_elem(const Field& F, std::string_view text);

/// Comma-separated list; commas inside `[...]` belong to coefficients.
std::vector<Poly> parse_poly_list(const Field& F, std::string_view text);

}  // namespace ffsieve
