#include "burau/json_io.hpp"

#include <fstream>

#include "burau/errors.hpp"

namespace burau {

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw error("matrix JSON must be an object with 'dim' and 'entries'");
  }
  const int dim = j.at("dim").get<int>();
  if (dim < 0) throw error("matrix JSON: negative dimension");
  const auto& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw error("matrix JSON: 'entries' must be an array of dim rows");
  }
  IntMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    const auto& row = rows.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw error("matrix JSON: row " + std::to_string(r) + " has the wrong length");
    }
    for (int c = 0; c < dim; ++c) {
      const auto& cell = row.at(c);
      try {
        if (cell.is_string()) {
          m.at(r, c) = BigInt(cell.get<std::string>());
        } else if (cell.is_number_integer()) {
          m.at(r, c) = cell.get<long long>();
        } else {
          throw error("matrix JSON: entries must be decimal strings or integers");
        }
      } catch (const std::exception&) {
        throw error("matrix JSON: bad entry at (" + std::to_string(r) + "," + std::to_string(c) +
                    ")");
      }
    }
  }
  return m;
}

IntMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open matrix file: " + path.string());
  nlohmann::json j;
  in >> j;
  return matrix_from_json(j);
}

nlohmann::json modmatrix_to_json(const ModMatrix& m) {
  nlohmann::json j = matrix_to_json(lift_plain(m));
  j["modulus"] = m.modulus();
  return j;
}

}  // namespace burau
