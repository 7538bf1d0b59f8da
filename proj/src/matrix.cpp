#include "tropical/matrix.hpp"

#include <string>
#include <utility>

namespace trop {

namespace {

void check_same_shape(const Matrix& a, const Matrix& b, const char* op)
{
	if (a.semiring() != b.semiring())
		throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": semirings differ");
	if (a.rows() != b.rows() || a.cols() != b.cols())
		throw Error(ErrorKind::ShapeMismatch,
		            std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
		                " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " differ");
}

} // namespace

Matrix::Matrix(Semiring s, std::size_t rows, std::size_t cols)
    : Matrix(s, rows, cols, std::vector<Scalar>(rows * cols))
{
}

Matrix::Matrix(Semiring s, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : semiring_(s), rows_(rows), cols_(cols), entries_(std::move(entries))
{
	if (rows_ == 0 || cols_ == 0)
		throw Error(ErrorKind::ShapeMismatch, "matrix dimensions must be at least 1x1");
	if (entries_.size() != rows_ * cols_)
		throw Error(ErrorKind::ShapeMismatch, "entry count does not match dimensions");
	for (const auto& e : entries_)
		if (!semiring_.is_valid(e))
			throw Error(ErrorKind::Value, "entry is not an element of " + std::string(semiring_.name()));
}

Matrix Matrix::from_rows(Semiring s, const std::vector<std::vector<Scalar>>& rows)
{
	if (rows.empty())
		throw Error(ErrorKind::ShapeMismatch, "matrix needs at least one row");
	const auto cols = rows.front().size();
	std::vector<Scalar> entries;
	entries.reserve(rows.size() * cols);
	for (const auto& r : rows) {
		if (r.size() != cols)
			throw Error(ErrorKind::ShapeMismatch, "ragged rows");
		entries.insert(entries.end(), r.begin(), r.end());
	}
	return Matrix(s, rows.size(), cols, std::move(entries));
}

Matrix Matrix::identity(Semiring s, std::size_t n)
{
	Matrix out(s, n, n);
	for (std::size_t i = 0; i < n; ++i)
		out.entries_[i * n + i] = s.one();
	return out;
}

Matrix Matrix::column(Semiring s, std::vector<Scalar> entries)
{
	const auto n = entries.size();
	return Matrix(s, n, 1, std::move(entries));
}

Matrix Matrix::row(Semiring s, std::vector<Scalar> entries)
{
	const auto n = entries.size();
	return Matrix(s, 1, n, std::move(entries));
}

std::size_t Matrix::size() const
{
	if (cols_ == 1)
		return rows_;
	if (rows_ == 1)
		return cols_;
	throw Error(ErrorKind::ShapeMismatch, "not a vector");
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const
{
	if (i >= rows_ || j >= cols_)
		throw Error(ErrorKind::IndexOutOfRange, "index (" + std::to_string(i) + ", " + std::to_string(j) +
		                                            ") outside " + std::to_string(rows_) + "x" +
		                                            std::to_string(cols_));
	return (*this)(i, j);
}

const Scalar& Matrix::operator[](std::size_t k) const
{
	if (k >= size())
		throw Error(ErrorKind::IndexOutOfRange, "vector index " + std::to_string(k) + " out of range");
	return entries_[k];
}

Matrix Matrix::with(std::size_t i, std::size_t j, Scalar value) const
{
	at(i, j);
	if (!semiring_.is_valid(value))
		throw Error(ErrorKind::Value, "entry is not an element of " + std::string(semiring_.name()));
	Matrix out = *this;
	out.entries_[i * cols_ + j] = std::move(value);
	return out;
}

std::vector<Scalar> Matrix::row_values(std::size_t i) const
{
	at(i, 0);
	return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
	        entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Scalar> Matrix::column_values(std::size_t j) const
{
	at(0, j);
	std::vector<Scalar> out;
	out.reserve(rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		out.push_back((*this)(i, j));
	return out;
}

bool Matrix::is_regular() const
{
	for (const auto& e : entries_)
		if (e.is_neutral())
			return false;
	return true;
}

Matrix Matrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const
{
	std::vector<Scalar> entries;
	entries.reserve(rows.size() * cols.size());
	for (auto i : rows)
		for (auto j : cols)
			entries.push_back(at(i, j));
	return Matrix(semiring_, rows.size(), cols.size(), std::move(entries));
}

bool operator==(const Matrix& a, const Matrix& b)
{
	return a.semiring_ == b.semiring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix add(const Matrix& a, const Matrix& b)
{
	check_same_shape(a, b, "add");
	const auto s = a.semiring();
	std::vector<Scalar> out;
	out.reserve(a.entries().size());
	for (std::size_t k = 0; k < a.entries().size(); ++k)
		out.push_back(s.add(a.entries()[k], b.entries()[k]));
	return Matrix(s, a.rows(), a.cols(), std::move(out));
}

Matrix multiply(const Matrix& a, const Matrix& b)
{
	if (a.semiring() != b.semiring())
		throw Error(ErrorKind::ShapeMismatch, "multiply: semirings differ");
	if (a.cols() != b.rows())
		throw Error(ErrorKind::ShapeMismatch, "multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
		                                          std::to_string(b.rows()) + " differ");
	const auto s = a.semiring();
	std::vector<Scalar> out;
	out.reserve(a.rows() * b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i) {
		for (std::size_t j = 0; j < b.cols(); ++j) {
			Scalar acc = s.zero();
			for (std::size_t k = 0; k < a.cols(); ++k)
				acc = s.add(acc, s.mul(a(i, k), b(k, j)));
			out.push_back(std::move(acc));
		}
	}
	return Matrix(s, a.rows(), b.cols(), std::move(out));
}

Matrix scale(const Scalar& lambda, const Matrix& a)
{
	const auto s = a.semiring();
	if (!s.is_valid(lambda))
		throw Error(ErrorKind::Value, "scalar is not an element of " + std::string(s.name()));
	std::vector<Scalar> out;
	out.reserve(a.entries().size());
	for (const auto& e : a.entries())
		out.push_back(s.mul(lambda, e));
	return Matrix(s, a.rows(), a.cols(), std::move(out));
}

Matrix transpose(const Matrix& a)
{
	std::vector<Scalar> out;
	out.reserve(a.entries().size());
	for (std::size_t j = 0; j < a.cols(); ++j)
		for (std::size_t i = 0; i < a.rows(); ++i)
			out.push_back(a(i, j));
	return Matrix(a.semiring(), a.cols(), a.rows(), std::move(out));
}

bool leq(const Matrix& a, const Matrix& b)
{
	check_same_shape(a, b, "leq");
	const auto s = a.semiring();
	for (std::size_t k = 0; k < a.entries().size(); ++k)
		if (!s.leq(a.entries()[k], b.entries()[k]))
			return false;
	return true;
}

} // namespace trop
