#pragma once

#include <json.hpp>

#include <variant>

#include "charform/poly.hpp"

namespace charform {

/// Wire form of a polynomial:
///   {"mode":"exact","coeffs":["a0","a1",...]}    rationals as "p/q" text
///   {"mode":"approx","coeffs":[[re,im],...]}     coefficients ascending
nlohmann::ordered_json poly_json(const Polynomial<Rat>& p);
nlohmann::ordered_json poly_json(const Polynomial<Cplx>& p);

using AnyPolynomial = std::variant<Polynomial<Rat>, Polynomial<Cplx>>;

/// Parses either mode. Throws std::invalid_argument on schema violations
/// (unknown mode, empty coefficient list, malformed entries).
AnyPolynomial parse_poly_json(const nlohmann::json& j);

}  // namespace charform
