#pragma once

#include <string>
#include <string_view>

#include "radiuslab/matrix.hpp"

namespace radiuslab {

// {"n": 2, "re": [[...], [...]], "im": [[...], [...]]}, row-major. "im" may be
// omitted for real matrices. Values are written with 17 significant digits.
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(std::string_view text);

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

}  // namespace radiuslab
