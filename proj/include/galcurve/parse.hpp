#pragma once

#include <string>

#include "galcurve/poly.hpp"

namespace galcurve {

// Text grammar shared by the CLI, curve files, and tests: a sum of terms like
//   2*X^3*Y + Z^4 - g^2*X*Y^2
// Integer coefficients are reduced into the field; g denotes the extension
// generator (rejected over prime fields and the rationals).  Ternary forms
// use variables X, Y, Z; binary forms use s, t.  Every term must have the
// same total degree.
TernaryForm parse_ternary(const Field* f, const std::string& text);
BinaryForm parse_binary(const Field* f, const std::string& text);

}  // namespace galcurve
