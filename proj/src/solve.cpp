#include "tropical/solve.hpp"

#include <string>

#include "tropical/reduce.hpp"

namespace trop {

namespace {

void require_system(const Matrix& a, const Matrix& b)
{
	if (a.semiring() != b.semiring())
		throw Error(ErrorKind::ShapeMismatch, "matrix and right-hand side use different semirings");
	if (!b.is_column() || b.rows() != a.rows())
		throw Error(ErrorKind::ShapeMismatch, "right-hand side must be a column of length " + std::to_string(a.rows()));
}

void require_regular(const Matrix& b)
{
	if (!b.is_regular())
		throw Error(ErrorKind::NotRegular, "right-hand side has neutral entries");
}

void require_square(const Matrix& a, const char* op)
{
	if (!a.is_square())
		throw Error(ErrorKind::ShapeMismatch, std::string(op) + " needs a square matrix");
}

Scalar unit_det(const Matrix& a, DetMethod method)
{
	auto d = det_eps(a, method).value;
	if (d.is_neutral())
		throw Error(ErrorKind::DetNotUnit, "determinant is the neutral element");
	return d;
}

SolveReport det_not_unit(SystemShape shape)
{
	SolveReport report;
	report.status = SolveStatus::DetNotUnit;
	report.shape = shape;
	return report;
}

} // namespace

PreprocessedSystem preprocess_regular(const Matrix& a, const Matrix& b)
{
	require_system(a, b);
	const auto s = a.semiring();
	std::vector<char> forced(a.cols(), false);
	std::vector<std::size_t> kept_rows;
	for (std::size_t i = 0; i < a.rows(); ++i) {
		if (b(i, 0).is_finite()) {
			kept_rows.push_back(i);
			continue;
		}
		// a_ij (x) x_j must be neutral for every j.
		for (std::size_t j = 0; j < a.cols(); ++j)
			if (a(i, j).is_finite())
				forced[j] = true;
	}
	if (kept_rows.empty())
		throw Error(ErrorKind::EmptySystem, "every equation has a neutral right-hand side");

	PreprocessedSystem out{kept_rows, {}, {}, std::nullopt, Matrix(s, kept_rows.size(), 1)};
	for (std::size_t j = 0; j < a.cols(); ++j)
		(forced[j] ? out.forced : out.kept_cols).push_back(j);
	if (!out.kept_cols.empty())
		out.a = a.select(out.kept_rows, out.kept_cols);
	const std::vector<std::size_t> first_col{0};
	out.b = b.select(out.kept_rows, first_col);
	return out;
}

Matrix pseudo_inverse(const Matrix& a, DetMethod method)
{
	require_square(a, "pseudo_inverse");
	const auto d = unit_det(a, method);
	return scale(a.semiring().inv(d), adj_eps(a, EpsFunction::identity(), method));
}

Matrix gram(const Matrix& a, DetMethod method)
{
	return multiply(a, pseudo_inverse(a, method));
}

Matrix gram_by_row_replacement(const Matrix& a, DetMethod method)
{
	require_square(a, "gram");
	const auto s = a.semiring();
	const auto d = unit_det(a, method);
	const auto n = a.rows();
	std::vector<Scalar> entries;
	entries.reserve(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			entries.push_back(s.div(det_eps(row_replace(a, i, j), method).value, d));
	return Matrix(s, n, n, std::move(entries));
}

Matrix gram_left(const Matrix& a, DetMethod method)
{
	return multiply(pseudo_inverse(a, method), a);
}

namespace {

std::vector<Violation> violations_of(const Matrix& g, const Matrix& b)
{
	const auto s = b.semiring();
	std::vector<Violation> out;
	for (std::size_t i = 0; i < g.rows(); ++i) {
		for (std::size_t j = 0; j < g.cols(); ++j) {
			if (i == j)
				continue;
			auto rhs = s.div(b(i, 0), b(j, 0));
			if (!s.leq(g(i, j), rhs))
				out.push_back({i, j, g(i, j), std::move(rhs)});
		}
	}
	return out;
}

} // namespace

std::vector<Violation> solvability_conditions(const Matrix& a, const Matrix& b)
{
	require_square(a, "solvability_conditions");
	require_system(a, b);
	require_regular(b);
	return violations_of(gram(a), b);
}

SolveReport solve_square(const Matrix& a, const Matrix& b)
{
	require_square(a, "solve_square");
	require_system(a, b);
	require_regular(b);

	if (det_eps(a).value.is_neutral())
		return det_not_unit(SystemShape::Square);

	const auto s = a.semiring();
	SolveReport report;
	report.shape = SystemShape::Square;
	report.a_pinv = pseudo_inverse(a);
	report.gram = multiply(a, *report.a_pinv);
	report.violations = violations_of(*report.gram, b);
	auto x = multiply(*report.a_pinv, b);

	if (!report.violations.empty()) {
		report.status = SolveStatus::ConditionsViolated;
		report.residual = multiply(a, x);
		report.candidate = std::move(x);
		return report;
	}

	// x* is the only solution iff every inequality (A^-A)_kl (x) x*_l <= x*_k
	// with k != l is strict.
	const auto left = multiply(*report.a_pinv, a);
	bool unique = true;
	for (std::size_t k = 0; k < left.rows() && unique; ++k)
		for (std::size_t l = 0; l < left.cols() && unique; ++l)
			if (k != l && !s.less(s.mul(left(k, l), x(l, 0)), x(k, 0)))
				unique = false;

	report.status = SolveStatus::MaximalSolution;
	report.unique = unique;
	report.x_star = std::move(x);
	return report;
}

Matrix cramer_solve(const Matrix& a, const Matrix& b)
{
	require_square(a, "cramer_solve");
	require_system(a, b);
	require_regular(b);
	const auto s = a.semiring();
	const auto d = unit_det(a, DetMethod::Auto);
	std::vector<Scalar> x;
	x.reserve(a.cols());
	for (std::size_t j = 0; j < a.cols(); ++j)
		x.push_back(s.div(det_eps(col_replace_with(a, j, b)).value, d));
	return Matrix::column(s, std::move(x));
}

PrincipalSolution residuate(const Matrix& a, const Matrix& b)
{
	require_system(a, b);
	const auto s = a.semiring();
	std::vector<Scalar> x(a.cols());
	std::vector<std::size_t> unbounded;
	for (std::size_t j = 0; j < a.cols(); ++j) {
		std::optional<Scalar> bound;
		for (std::size_t i = 0; i < a.rows(); ++i) {
			if (a(i, j).is_neutral())
				continue;
			auto q = s.div(b(i, 0), a(i, j));
			bound = bound ? s.meet(*bound, q) : q;
		}
		if (bound)
			x[j] = std::move(*bound);
		else
			unbounded.push_back(j);
	}
	return {Matrix::column(s, std::move(x)), std::move(unbounded)};
}

PrincipalSolution principal_solution(const Matrix& a, const Matrix& b)
{
	require_system(a, b);
	require_regular(b);
	return residuate(a, b);
}

SolveReport solve_wide(const Matrix& a, const Matrix& b)
{
	require_system(a, b);
	require_regular(b);
	if (a.rows() >= a.cols())
		throw Error(ErrorKind::InvalidArgument, "solve_wide needs fewer equations than variables");

	const auto at = transpose(a);
	const auto square = multiply(a, at);
	auto sub = solve_square(square, b);

	SolveReport report;
	report.shape = SystemShape::Wide;
	report.status = sub.status;
	report.maximal = false;
	report.square_matrix = square;
	report.square_rhs = b;
	report.a_pinv = std::move(sub.a_pinv);
	report.gram = std::move(sub.gram);
	report.violations = std::move(sub.violations);

	if (sub.status == SolveStatus::MaximalSolution) {
		report.y_star = sub.x_star;
		report.x_star = multiply(at, *sub.x_star);
	}
	else if (sub.status == SolveStatus::ConditionsViolated) {
		report.candidate = multiply(at, *sub.candidate);
		report.residual = multiply(a, *report.candidate);
	}
	return report;
}

SolveReport solve_tall(const Matrix& a, const Matrix& b)
{
	require_system(a, b);
	require_regular(b);
	if (a.cols() >= a.rows())
		throw Error(ErrorKind::InvalidArgument, "solve_tall needs fewer variables than equations");

	const auto at = transpose(a);
	const auto square = multiply(at, a);
	const auto rhs = multiply(at, b);
	// An entirely neutral column makes both the square matrix singular and
	// the right-hand side irregular; report the former.
	if (det_eps(square).value.is_neutral()) {
		auto report = det_not_unit(SystemShape::Tall);
		report.square_matrix = square;
		report.square_rhs = rhs;
		return report;
	}
	auto sub = solve_square(square, rhs);

	SolveReport report;
	report.shape = SystemShape::Tall;
	report.status = sub.status;
	report.square_matrix = square;
	report.square_rhs = rhs;
	report.a_pinv = std::move(sub.a_pinv);
	report.gram = std::move(sub.gram);
	report.violations = std::move(sub.violations);

	if (sub.status == SolveStatus::MaximalSolution) {
		auto image = multiply(a, *sub.x_star);
		if (image == b) {
			report.x_star = std::move(sub.x_star);
			report.unique = sub.unique;
		}
		else {
			report.status = SolveStatus::ConditionsViolated;
			report.not_a_solution = true;
			report.candidate = std::move(sub.x_star);
			report.residual = std::move(image);
		}
	}
	else {
		report.candidate = std::move(sub.candidate);
		report.residual = multiply(a, *report.candidate);
	}
	return report;
}

bool is_eigenpair(const Matrix& m, const Scalar& lambda, const Matrix& x)
{
	require_square(m, "is_eigenpair");
	if (!x.is_column() || x.rows() != m.rows() || x.semiring() != m.semiring())
		throw Error(ErrorKind::ShapeMismatch, "eigenvector length does not match the matrix");
	return multiply(m, x) == scale(lambda, x);
}

namespace {

Matrix embed(const Matrix& x, const std::vector<std::size_t>& cols, std::size_t n)
{
	std::vector<Scalar> full(n);
	for (std::size_t k = 0; k < cols.size(); ++k)
		full[cols[k]] = x(k, 0);
	return Matrix::column(x.semiring(), std::move(full));
}

std::vector<std::size_t> pick(const std::vector<std::size_t>& outer, const std::vector<std::size_t>& inner)
{
	std::vector<std::size_t> out;
	out.reserve(inner.size());
	for (auto k : inner)
		out.push_back(outer[k]);
	return out;
}

} // namespace

SolveReport solve(const Matrix& a, const Matrix& b, const SolveOptions& options)
{
	require_system(a, b);
	auto pre = preprocess_regular(a, b);
	const auto s = a.semiring();

	if (!pre.a) {
		SolveReport report;
		report.status = SolveStatus::ConditionsViolated;
		report.shape = a.rows() == a.cols() ? SystemShape::Square
		               : a.rows() < a.cols() ? SystemShape::Wide
		                                     : SystemShape::Tall;
		report.forced = pre.forced;
		report.system_rows = pre.kept_rows;
		report.candidate = Matrix(s, a.cols(), 1);
		report.residual = multiply(a, *report.candidate);
		return report;
	}

	Matrix system = *pre.a;
	Matrix rhs = pre.b;
	auto rows = pre.kept_rows;
	auto cols = pre.kept_cols;
	std::optional<ReducedSystem> reduced;
	if (options.reduce_first) {
		reduced = reduce_system(system, rhs, options.columns_first ? ReduceOrder::ColumnsFirst : ReduceOrder::RowsFirst);
		if (!reduced->consistent) {
			SolveReport report;
			report.status = SolveStatus::ConditionsViolated;
			report.inconsistent = true;
			report.forced = pre.forced;
			report.system_rows = pick(rows, reduced->kept_rows);
			report.system_cols = pick(cols, reduced->kept_cols);
			return report;
		}
		system = reduced->a_bar;
		rhs = reduced->b_bar;
	}
	const auto system_rows = reduced ? pick(rows, reduced->kept_rows) : rows;
	const auto system_cols = reduced ? pick(cols, reduced->kept_cols) : cols;

	SolveReport report = system.rows() == system.cols() ? solve_square(system, rhs)
	                     : system.rows() < system.cols() ? solve_wide(system, rhs)
	                                                     : solve_tall(system, rhs);

	// Back to the variables of the preprocessed system, then to the original.
	auto lift = [&](const Matrix& y) {
		auto x = reduced ? lift_solution(*reduced, y) : y;
		return embed(x, cols, a.cols());
	};
	if (report.x_star) {
		report.x_star = lift(*report.x_star);
		if (reduced && !reduced->eta.empty())
			report.unique.reset();
	}
	if (report.candidate) {
		report.candidate = lift(*report.candidate);
		report.residual = multiply(a, *report.candidate);
	}

	const auto& index_map = report.shape == SystemShape::Tall ? system_cols : system_rows;
	for (auto& v : report.violations) {
		v.i = index_map[v.i];
		v.j = index_map[v.j];
	}
	report.system_rows = system_rows;
	report.system_cols = system_cols;
	report.forced = pre.forced;
	return report;
}

} // namespace trop
