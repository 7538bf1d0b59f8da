#include "tropical/reduce.hpp"

#include <numeric>
#include <string>

#include "tropical/solve.hpp"

namespace trop {

std::optional<std::vector<Scalar>> is_combination(const Matrix& target, const std::vector<Matrix>& generators)
{
	if (!target.is_column())
		throw Error(ErrorKind::ShapeMismatch, "target must be a column vector");
	if (generators.empty())
		return std::nullopt;
	const auto s = target.semiring();
	const auto m = target.rows();
	std::vector<Scalar> entries(m * generators.size());
	for (std::size_t k = 0; k < generators.size(); ++k) {
		const auto& g = generators[k];
		if (!g.is_column() || g.rows() != m || g.semiring() != s)
			throw Error(ErrorKind::ShapeMismatch, "generator " + std::to_string(k) + " does not match the target");
		for (std::size_t i = 0; i < m; ++i)
			entries[i * generators.size() + k] = g(i, 0);
	}
	const Matrix basis(s, m, generators.size(), std::move(entries));
	auto bound = residuate(basis, target);
	if (multiply(basis, bound.x) != target)
		return std::nullopt;
	return std::vector<Scalar>(bound.x.entries().begin(), bound.x.entries().end());
}

namespace {

Matrix column_of(const Matrix& a, std::size_t j)
{
	return Matrix::column(a.semiring(), a.column_values(j));
}

std::vector<Matrix> columns_of(const Matrix& a, const std::vector<std::size_t>& indices)
{
	std::vector<Matrix> out;
	out.reserve(indices.size());
	for (auto j : indices)
		out.push_back(column_of(a, j));
	return out;
}

std::vector<std::size_t> iota(std::size_t n)
{
	std::vector<std::size_t> out(n);
	std::iota(out.begin(), out.end(), std::size_t{0});
	return out;
}

} // namespace

Reduction column_reduce(const Matrix& a)
{
	std::vector<char> alive(a.cols(), true);
	for (std::size_t j = a.cols(); j-- > 0;) {
		std::vector<std::size_t> others;
		for (std::size_t k = 0; k < a.cols(); ++k)
			if (k != j && alive[k])
				others.push_back(k);
		if (!others.empty() && is_combination(column_of(a, j), columns_of(a, others)))
			alive[j] = false;
	}

	Reduction out;
	for (std::size_t j = 0; j < a.cols(); ++j)
		if (alive[j])
			out.kept.push_back(j);
	// The span of the survivors never shrinks, so every removed column is a
	// combination of the final kept set.
	const auto kept = columns_of(a, out.kept);
	for (std::size_t j = 0; j < a.cols(); ++j) {
		if (alive[j])
			continue;
		auto coefficients = is_combination(column_of(a, j), kept);
		if (!coefficients)
			throw Error(ErrorKind::InvalidArgument, "column reduction lost a dependency");
		out.removed.push_back({j, std::move(*coefficients)});
	}
	return out;
}

Reduction row_reduce(const Matrix& a)
{
	return column_reduce(transpose(a));
}

ReducedSystem reduce_system(const Matrix& a, const Matrix& b, ReduceOrder order)
{
	if (!b.is_column() || b.rows() != a.rows() || b.semiring() != a.semiring())
		throw Error(ErrorKind::ShapeMismatch, "right-hand side must be a column of length " + std::to_string(a.rows()));
	if (!b.is_regular())
		throw Error(ErrorKind::NotRegular, "right-hand side has neutral entries");

	const auto all_rows = iota(a.rows());
	const auto all_cols = iota(a.cols());

	Reduction rows, cols;
	if (order == ReduceOrder::RowsFirst) {
		rows = row_reduce(a);
		auto partial = a.select(rows.kept, all_cols);
		cols = column_reduce(partial);
	}
	else {
		cols = column_reduce(a);
		auto partial = a.select(all_rows, cols.kept);
		rows = row_reduce(partial);
	}

	const auto s = a.semiring();
	bool consistent = true;
	for (const auto& removed : rows.removed) {
		Scalar combined = s.zero();
		for (std::size_t k = 0; k < rows.kept.size(); ++k)
			combined = s.add(combined, s.mul(b(rows.kept[k], 0), removed.coefficients[k]));
		if (combined != b(removed.index, 0))
			consistent = false;
	}

	const std::vector<std::size_t> first_col{0};
	return ReducedSystem{
	    rows.kept,
	    cols.kept,
	    std::move(cols.removed),
	    std::move(rows.removed),
	    a.select(rows.kept, cols.kept),
	    b.select(rows.kept, first_col),
	    consistent,
	    a.cols(),
	};
}

Matrix lift_solution(const ReducedSystem& r, const Matrix& y)
{
	if (!r.consistent)
		throw Error(ErrorKind::InconsistentSystem, "reduced system is inconsistent; nothing to lift");
	if (!y.is_column() || y.rows() != r.kept_cols.size())
		throw Error(ErrorKind::ShapeMismatch, "reduced solution must have " + std::to_string(r.kept_cols.size()) +
		                                          " entries");
	const auto s = y.semiring();
	std::vector<Scalar> x(r.original_cols);
	for (std::size_t k = 0; k < r.kept_cols.size(); ++k)
		x[r.kept_cols[k]] = y(k, 0);
	for (const auto& removed : r.eta) {
		std::optional<Scalar> bound;
		for (std::size_t k = 0; k < r.kept_cols.size(); ++k) {
			const auto& eta = removed.coefficients[k];
			if (eta.is_neutral())
				continue;
			auto candidate = s.div(y(k, 0), eta);
			bound = bound ? s.meet(*bound, candidate) : candidate;
		}
		x[removed.index] = bound.value_or(s.zero());
	}
	return Matrix::column(s, std::move(x));
}

} // namespace trop
