#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tropical/det.hpp"
#include "tropical/matrix.hpp"
#include "tropical/reduce.hpp"
#include "tropical/solve.hpp"

namespace trop {

struct System {
	Matrix a;
	/// Right-hand side as a column, when the input has one.
	std::optional<Matrix> b;
};

/// Text system format: one matrix row per line with whitespace-separated
/// scalars, then optionally a blank line and the right-hand side on a single
/// line. `#` starts a comment. Errors carry 1-based line/column positions:
/// Parse for malformed text, ShapeMismatch for ragged rows or a right-hand
/// side of the wrong length, Value for numbers outside the semiring.
System parse_system(std::string_view text, Semiring s);
System parse_system(std::istream& in, Semiring s);

/// A single matrix block; rejects a right-hand side.
Matrix parse_matrix(std::string_view text, Semiring s);
/// A single line of scalars as a column vector.
Matrix parse_vector(std::string_view text, Semiring s);

/// Rows on separate lines with right-aligned columns; parse_matrix reads it
/// back exactly.
std::string format_matrix(const Matrix& a);
/// Entries of a vector on one line.
std::string format_vector(const Matrix& v);

std::string_view to_string(SolveStatus status);
std::string_view to_string(SystemShape shape);

nlohmann::json to_json(const Matrix& a);
/// Vectors as a flat list of strings.
nlohmann::json vector_to_json(const Matrix& v);
nlohmann::json to_json(const DetResult& det, Semiring s);
nlohmann::json to_json(const SolveReport& report);
nlohmann::json to_json(const Reduction& reduction, Semiring s);
nlohmann::json to_json(const ReducedSystem& reduced);
nlohmann::json to_json(const std::vector<Violation>& violations, Semiring s);

} // namespace trop
