#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropical/matrix.hpp"

namespace trop {

/// A removed row or column written as a combination of the kept ones:
/// vector(index) = (+)_k kept(k) (x) coefficients[k].
struct Combination {
	std::size_t index;
	std::vector<Scalar> coefficients;
};

struct Reduction {
	std::vector<std::size_t> kept;
	std::vector<Combination> removed;
};

/// Coefficients c with target = (+)_k generators[k] (x) c_k, if any exist.
/// Uses the greatest coefficients admissible for each generator, so the
/// answer is exact: absent means target is outside the span. Generators
/// that are entirely neutral get a neutral coefficient.
std::optional<std::vector<Scalar>> is_combination(const Matrix& target, const std::vector<Matrix>& generators);

/// Removes columns that lie in the span of the other surviving columns.
/// Columns are tested from last to first, so on ties the earliest columns
/// are the ones kept. Coefficients are expressed over the final kept set.
Reduction column_reduce(const Matrix& a);
/// Dual of column_reduce on the rows.
Reduction row_reduce(const Matrix& a);

enum class ReduceOrder { RowsFirst, ColumnsFirst };

struct ReducedSystem {
	std::vector<std::size_t> kept_rows;
	std::vector<std::size_t> kept_cols;
	/// Removed columns over kept columns.
	std::vector<Combination> eta;
	/// Removed rows over kept rows.
	std::vector<Combination> xi;
	Matrix a_bar;
	Matrix b_bar;
	/// Every removed equation's right-hand side follows its row combination.
	bool consistent = true;
	std::size_t original_cols = 0;
};

/// Row and column reduction of A x = b. When `consistent` is false the
/// original system has no solution.
ReducedSystem reduce_system(const Matrix& a, const Matrix& b, ReduceOrder order = ReduceOrder::RowsFirst);

/// Maps a solution of the reduced system back to the original variables:
/// kept variables copy y, each removed variable takes the greatest value
/// that keeps every kept equation unchanged. A removed column with only
/// neutral coefficients is unconstrained and is set to neutral. Throws
/// InconsistentSystem on an inconsistent reduction.
Matrix lift_solution(const ReducedSystem& r, const Matrix& y);

} // namespace trop
