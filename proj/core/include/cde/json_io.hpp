#ifndef CDE_JSON_IO_HPP
#define CDE_JSON_IO_HPP

#include <json.hpp>

#include "cde/tensor.hpp"

// JSON wire format shared by the CLI and any external consumer:
//   {"rows": n, "cols": m, "entries": [[re, im], ...]}   (row-major)
// Doubles are emitted with shortest round-trip precision.

namespace cde {

nlohmann::json matrix_to_json(const CMatrix& a);
CMatrix matrix_from_json(const nlohmann::json& j);

// Vectors travel as n-by-1 matrices.
nlohmann::json vector_to_json(const CVector& v);
CVector vector_from_json(const nlohmann::json& j);

}  // namespace cde

#endif
