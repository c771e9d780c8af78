#include "cde/json_io.hpp"

#include <stdexcept>

namespace cde {

nlohmann::json matrix_to_json(const CMatrix& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      entries.push_back({a(i, j).real(), a(i, j).imag()});
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

CMatrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& entries = j.at("entries");
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix_from_json: dimensions must be positive");
  if (static_cast<Eigen::Index>(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix_from_json: entries.length != rows*cols");
  CMatrix a(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j2 = 0; j2 < cols; ++j2, ++k)
      a(i, j2) = Cx(entries[k][0].get<double>(), entries[k][1].get<double>());
  require_finite(a, "matrix_from_json");
  return a;
}

nlohmann::json vector_to_json(const CVector& v) {
  return matrix_to_json(v);
}

CVector vector_from_json(const nlohmann::json& j) {
  CMatrix a = matrix_from_json(j);
  if (a.cols() != 1) throw std::invalid_argument("vector_from_json: expected a single column");
  return a.col(0);
}

}  // namespace cde
