#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropical/det.hpp"
#include "tropical/matrix.hpp"

namespace trop {

enum class SolveStatus { MaximalSolution, ConditionsViolated, DetNotUnit };

enum class SystemShape { Square, Wide, Tall };

/// A failed solvability inequality (AA^-)_ij <= b_i (x) b_j^-1.
struct Violation {
	std::size_t i;
	std::size_t j;
	Scalar lhs;
	Scalar rhs;
};

struct SolveReport {
	SolveStatus status = SolveStatus::ConditionsViolated;
	SystemShape shape = SystemShape::Square;

	/// Present iff status is MaximalSolution; then A (x) x_star == b.
	std::optional<Matrix> x_star;
	/// The pseudo-inverse answer when it does not solve the system.
	std::optional<Matrix> candidate;
	/// A (x) candidate, for diagnostics.
	std::optional<Matrix> residual;

	/// Pseudo-inverse and A A^- of the square system that was solved (A
	/// itself, A A^T or A^T A).
	std::optional<Matrix> a_pinv;
	std::optional<Matrix> gram;
	/// Non-square systems: the square system matrix and right-hand side.
	std::optional<Matrix> square_matrix;
	std::optional<Matrix> square_rhs;
	/// Wide systems: the maximal solution of A A^T Y = b.
	std::optional<Matrix> y_star;

	std::vector<Violation> violations;
	/// Present only with MaximalSolution, when uniqueness is decidable.
	std::optional<bool> unique;

	/// False for wide systems: A^T Y* is a solution, not necessarily maximal.
	bool maximal = true;
	/// Tall systems: the square system A^T A X = A^T b was solved but its
	/// answer does not satisfy A X = b (b is not an eigenvector of
	/// A (A^T A)^- A^T for eigenvalue one).
	bool not_a_solution = false;
	/// Row reduction found a dependent equation whose right-hand side does
	/// not follow the same combination.
	bool inconsistent = false;

	/// Original indices of the equations / variables of the system that was
	/// actually solved, after preprocessing and optional reduction.
	std::vector<std::size_t> system_rows;
	std::vector<std::size_t> system_cols;
	/// Variables set to the neutral element by preprocessing.
	std::vector<std::size_t> forced;
};

/// Result of removing the equations with a neutral right-hand side.
struct PreprocessedSystem {
	std::vector<std::size_t> kept_rows;
	std::vector<std::size_t> kept_cols;
	/// Variables forced to the neutral element.
	std::vector<std::size_t> forced;
	/// Residual matrix on kept rows and columns; absent when no column
	/// survives, in which case the system has no solution.
	std::optional<Matrix> a;
	/// Regular right-hand side on the kept rows.
	Matrix b;
};

/// Greatest x with A (x) x <= b, together with the columns that impose no
/// bound (entirely neutral columns); those are reported as neutral in `x`.
struct PrincipalSolution {
	Matrix x;
	std::vector<std::size_t> unbounded;
};

PreprocessedSystem preprocess_regular(const Matrix& a, const Matrix& b);

/// A^- = det_eps(A)^-1 (x) adj_eps(A). Throws DetNotUnit when det is neutral.
Matrix pseudo_inverse(const Matrix& a, DetMethod method = DetMethod::Auto);

/// A A^- as the product A (x) pseudo_inverse(A).
Matrix gram(const Matrix& a, DetMethod method = DetMethod::Auto);
/// A A^- from row-replaced determinants:
/// (A A^-)_ij = det_eps(A)^-1 (x) det_eps(A with row j replaced by row i).
Matrix gram_by_row_replacement(const Matrix& a, DetMethod method = DetMethod::Auto);
/// A^- A, used for the uniqueness test.
Matrix gram_left(const Matrix& a, DetMethod method = DetMethod::Auto);

/// Every ordered pair i != j with (AA^-)_ij (x) b_j > b_i. Empty means
/// A^- b is the maximal solution.
std::vector<Violation> solvability_conditions(const Matrix& a, const Matrix& b);

SolveReport solve_square(const Matrix& a, const Matrix& b);

/// Component j is det_eps(A with column j replaced by b) (x) det_eps(A)^-1.
/// Never forms A^-; equals A^- (x) b whether or not the system is solvable.
Matrix cramer_solve(const Matrix& a, const Matrix& b);

/// Residuation: x_j = meet over i with a_ij finite of b_i (x) a_ij^-1.
/// Requires a regular b. A (x) x <= b always; the system is solvable iff
/// equality holds, and then x is the maximal solution.
PrincipalSolution principal_solution(const Matrix& a, const Matrix& b);

/// Same bound without the regularity requirement; neutral entries of b
/// force the variables they touch to neutral.
PrincipalSolution residuate(const Matrix& a, const Matrix& b);

/// m < n: solves A A^T Y = b and returns X = A^T Y*.
SolveReport solve_wide(const Matrix& a, const Matrix& b);
/// n < m: solves A^T A X = A^T b and checks A X* = b.
SolveReport solve_tall(const Matrix& a, const Matrix& b);

/// True iff M (x) x == lambda (x) x. x may contain neutral entries.
bool is_eigenpair(const Matrix& m, const Scalar& lambda, const Matrix& x);

struct SolveOptions {
	/// Remove dependent rows and columns before dispatching on shape.
	bool reduce_first = false;
	/// Reduction order: columns before rows when set.
	bool columns_first = false;
};

/// Full pipeline: removes neutral right-hand sides, optionally reduces,
/// dispatches on shape and maps the answer back to the original variables.
/// Throws EmptySystem when every equation has a neutral right-hand side.
SolveReport solve(const Matrix& a, const Matrix& b, const SolveOptions& options = {});

} // namespace trop
