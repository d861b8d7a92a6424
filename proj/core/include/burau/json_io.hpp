#pragma once

#include <json.hpp>

#include <filesystem>

#include "burau/int_matrix.hpp"
#include "burau/modmatrix.hpp"

namespace burau {

// Shared matrix JSON format:
//   {"dim": n, "entries": [["...","..."], ...]}
// with entries as decimal integer strings (arbitrary precision safe).
// matrix_from_json also accepts plain JSON numbers for convenience.
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);
IntMatrix read_matrix_file(const std::filesystem::path& path);

// Mod matrices serialize with an extra "modulus" field.
nlohmann::json modmatrix_to_json(const ModMatrix& m);

}  // namespace burau
