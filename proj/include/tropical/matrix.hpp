#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tropical/scalar.hpp"

namespace trop {

/// Dense row-major matrix over a fixed semiring. Vectors are matrices with a
/// single column (or a single row). Indices are 0-based.
class Matrix {
public:
	/// rows x cols matrix filled with the neutral element.
	Matrix(Semiring s, std::size_t rows, std::size_t cols);
	Matrix(Semiring s, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

	static Matrix from_rows(Semiring s, const std::vector<std::vector<Scalar>>& rows);
	static Matrix identity(Semiring s, std::size_t n);
	static Matrix column(Semiring s, std::vector<Scalar> entries);
	static Matrix row(Semiring s, std::vector<Scalar> entries);

	Semiring semiring() const noexcept { return semiring_; }
	std::size_t rows() const noexcept { return rows_; }
	std::size_t cols() const noexcept { return cols_; }
	bool is_square() const noexcept { return rows_ == cols_; }
	bool is_column() const noexcept { return cols_ == 1; }
	/// Length of a row or column vector; throws ShapeMismatch otherwise.
	std::size_t size() const;

	const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
	/// Bounds-checked access.
	const Scalar& at(std::size_t i, std::size_t j) const;
	/// Entry k of a row or column vector.
	const Scalar& operator[](std::size_t k) const;

	/// Returns a copy with entry (i, j) replaced; the value must be valid
	/// for the semiring.
	Matrix with(std::size_t i, std::size_t j, Scalar value) const;

	std::span<const Scalar> entries() const noexcept { return entries_; }
	std::vector<Scalar> row_values(std::size_t i) const;
	std::vector<Scalar> column_values(std::size_t j) const;

	/// True iff no entry is the neutral element.
	bool is_regular() const;

	/// Submatrix on the given row and column index lists (in order).
	Matrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

	friend bool operator==(const Matrix& a, const Matrix& b);

private:
	Semiring semiring_;
	std::size_t rows_;
	std::size_t cols_;
	std::vector<Scalar> entries_;
};

/// Entrywise (+).
Matrix add(const Matrix& a, const Matrix& b);
/// Tropical product: (ab)_ij = (+)_k a_ik (x) b_kj.
Matrix multiply(const Matrix& a, const Matrix& b);
/// Entrywise lambda (x) a_ij.
Matrix scale(const Scalar& lambda, const Matrix& a);
Matrix transpose(const Matrix& a);
/// Entrywise natural order. Two matrices can be incomparable.
bool leq(const Matrix& a, const Matrix& b);

} // namespace trop
