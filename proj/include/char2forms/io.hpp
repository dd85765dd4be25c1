#pragma once

#include <string>

#include <json.hpp>

#include "char2forms/canon.hpp"
#include "char2forms/lie.hpp"
#include "char2forms/matrix.hpp"
#include "char2forms/super.hpp"

namespace char2forms {

/// Text format: header "n m", then n lines of n lowercase-hex entries.
/// Round-trips bit-exactly.
std::string matrix_to_text(const Matrix& m);
Matrix matrix_from_text(const std::string& text);

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json supermatrix_to_json(const SuperMatrix& m);
nlohmann::json algebra_to_json(const AlgebraBasis& g);
nlohmann::json super_algebra_to_json(const SuperAlgebraBasis& g);
nlohmann::json fingerprint_to_json(const Fingerprint& fp);

}  // namespace char2forms
