#pragma once

#include "json.hpp"
#include "radiuslab/matrix.hpp"

namespace radiuslab::detail {

using Json = nlohmann::ordered_json;

// Same layout as the matrix file format.
Json matrix_json(const ComplexMatrix& m);

}  // namespace radiuslab::detail
