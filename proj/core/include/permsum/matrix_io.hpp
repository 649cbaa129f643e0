#pragma once

#include <string>

#include "permsum/matrix.hpp"

namespace permsum {

// Matrix document format (JSON, UTF-8):
//   { "n": <int>, "entries": [ [ [re, im], ... n items ] ... n rows ] }
// Parsing rejects n <= 0, ragged rows, missing fields and non-finite
// numbers. Serialization emits 17 significant digits so that every double
// round-trips bit-exactly.

DenseMatrix parse_matrix(const std::string& text);
std::string serialize_matrix(const DenseMatrix& m);

DenseMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const DenseMatrix& m);

// Shared by the file writers: shortest-of("%.17g") rendering of a double.
std::string format_double(double value);

}  // namespace permsum
