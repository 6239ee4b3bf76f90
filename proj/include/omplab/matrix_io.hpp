#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "omplab/matrix.hpp"

namespace omplab {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line_, int column_);
};

// Text format, one matrix per file:
//   rows cols
//   <cols entries of row 0>
//   ...
// Every number is written as the shortest decimal that parses back to the
// same double, so a save/load round trip is exact.
DenseMatrix load_matrix(const std::string& path);
void save_matrix(const DenseMatrix& a, const std::string& path);

// Vector format: a line with the length, then the entries (one per line on
// output; any whitespace layout on input).
std::vector<double> load_vector(const std::string& path);
void save_vector(const std::vector<double>& v, const std::string& path);

// Shortest round-trip decimal form of v.
std::string format_double(double v);

} // namespace omplab
