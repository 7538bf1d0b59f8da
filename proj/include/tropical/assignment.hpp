#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropical/matrix.hpp"

namespace trop {

struct Assignment {
	/// (x)-product of the selected entries; neutral when every permutation
	/// hits a neutral entry.
	Scalar value;
	/// row -> column, lexicographically smallest among optimal assignments.
	std::vector<std::size_t> columns;
};

/// Optimal assignment on a square matrix, where "optimal" means greatest in
/// the natural order of the semiring, i.e. maximal (+)-selected (x)-product.
/// Neutral entries are forbidden cells.
///
/// The finite elements of every supported semiring form a totally ordered
/// abelian group under (x), and the shortest-augmenting-path Hungarian method
/// only needs the group operations and the order, so the same O(n^3) code
/// serves all four semirings with exact arithmetic. For max-plus and min-plus
/// the entries are first scaled to integers by their common denominator and
/// solved in machine integers when no overflow is possible. Dual potentials are
/// kept so the lexicographically smallest optimum can be recovered from the
/// tight cells afterwards.
Assignment optimal_assignment(const Matrix& a);

} // namespace trop
