#pragma once

#include <string>

#include "grank/tensor.hpp"

namespace grank {

// Text format: header "t3 a b c", one "i j k coeff" line per entry (0-based
// indices, arbitrary-precision integer coefficients), '#' comment lines.
// Emission is canonical (entries sorted by (i,j,k)) so files round-trip
// byte-identically.
Tensor3 parse_tensor_file(const std::string& text);
std::string emit_tensor_file(const Tensor3& t);

Tensor3 read_tensor_file(const std::string& path);
void write_tensor_file(const std::string& path, const Tensor3& t);

}  // namespace grank
