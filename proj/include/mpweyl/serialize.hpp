#pragma once

#include <string>

#include "json.hpp"
#include "mpweyl/algebra.hpp"
#include "mpweyl/modules.hpp"

// Stable serializations of algebra elements and module vectors. Term order
// follows the canonical monomial/index order, JSON keys keep insertion order,
// so identical inputs always produce identical bytes.

namespace mpweyl {

// Grammar-compatible text: terms joined by " + ", each term
// "coeff * rho1^a * sigma1^b * x1^u * y1^v * ..." with unit exponents and the
// unit coefficient omitted. The output reparses under parse_expression.
std::string element_to_text(const AlgebraElement& e);

// {"terms": [{"monomial": {"rho": [..], "sigma": [..], "x": [..], "y": [..]},
//             "coeff": {"num": "...", "den": "..."}}]}
// with one entry per index 1..n in each exponent array.
nlohmann::ordered_json element_to_json(const AlgebraElement& e, int n);

nlohmann::ordered_json scalar_to_json(const Scalar& c);

// {"terms": [{"index": [k..] or {"k": [..], "l": [..]},
//             "coeff": {"num": "...", "den": "..."}}]}
nlohmann::ordered_json vector_to_json(const ModuleVector& v);

std::string vector_to_text(const ModuleVector& v);

}  // namespace mpweyl
