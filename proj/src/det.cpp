#include "tropical/det.hpp"

#include <numeric>
#include <string>

#include "tropical/assignment.hpp"

namespace trop {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images))
{
	std::vector<char> seen(images_.size(), false);
	for (auto k : images_) {
		if (k >= images_.size() || seen[k])
			throw Error(ErrorKind::InvalidArgument, "not a permutation");
		seen[k] = true;
	}
}

Permutation Permutation::identity(std::size_t n)
{
	std::vector<std::size_t> images(n);
	std::iota(images.begin(), images.end(), std::size_t{0});
	return Permutation(std::move(images));
}

std::size_t Permutation::inversions() const
{
	std::size_t count = 0;
	for (std::size_t i = 0; i < images_.size(); ++i)
		for (std::size_t j = i + 1; j < images_.size(); ++j)
			if (images_[i] > images_[j])
				++count;
	return count;
}

Scalar permutation_product(const Matrix& a, const Permutation& sigma)
{
	if (!a.is_square() || sigma.size() != a.rows())
		throw Error(ErrorKind::ShapeMismatch, "permutation size does not match matrix");
	const auto s = a.semiring();
	Scalar out = s.one();
	for (std::size_t i = 0; i < sigma.size(); ++i)
		out = s.mul(out, a(i, sigma(i)));
	return out;
}

namespace {

void require_square(const Matrix& a, const char* op)
{
	if (!a.is_square())
		throw Error(ErrorKind::ShapeMismatch, std::string(op) + " needs a square matrix, got " +
		                                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

// Depth-first enumeration of all permutations in lexicographic order with an
// incremental product. Branches whose partial product is neutral are pruned:
// they cannot improve on anything.
class PermutationExpansion {
public:
	explicit PermutationExpansion(const Matrix& a)
	    : a_(a), s_(a.semiring()), n_(a.rows()), used_(n_, false), current_(n_),
	      best_witness_(Permutation::identity(n_).images())
	{
		visit(0, s_.one(), 0);
	}

	DetResult result() const
	{
		Permutation witness(best_witness_);
		const auto parity = witness.is_even() ? Parity::Even : Parity::Odd;
		return {best_, std::move(witness), parity};
	}
	SignedDet signed_det() const { return {best_even_, best_odd_}; }

private:
	void visit(std::size_t row, const Scalar& partial, std::size_t inversions)
	{
		if (row == n_) {
			if (s_.less(best_, partial)) {
				best_ = partial;
				best_witness_ = current_;
			}
			auto& slot = inversions % 2 == 0 ? best_even_ : best_odd_;
			slot = s_.add(slot, partial);
			return;
		}
		for (std::size_t col = 0; col < n_; ++col) {
			if (used_[col] || a_(row, col).is_neutral())
				continue;
			std::size_t added = 0;
			for (std::size_t k = col + 1; k < n_; ++k)
				added += used_[k];
			used_[col] = true;
			current_[row] = col;
			visit(row + 1, s_.mul(partial, a_(row, col)), inversions + added);
			used_[col] = false;
		}
	}

	const Matrix& a_;
	Semiring s_;
	std::size_t n_;
	std::vector<char> used_;
	std::vector<std::size_t> current_;
	Scalar best_;
	std::vector<std::size_t> best_witness_;
	Scalar best_even_;
	Scalar best_odd_;
};

void check_reference_size(const Matrix& a)
{
	if (a.rows() > kReferenceDetLimit)
		throw Error(ErrorKind::SizeExceeded, "permutation expansion is limited to n <= " +
		                                         std::to_string(kReferenceDetLimit) + ", got n = " +
		                                         std::to_string(a.rows()));
}

} // namespace

SignedDet pos_neg_det(const Matrix& a)
{
	require_square(a, "pos_neg_det");
	check_reference_size(a);
	return PermutationExpansion(a).signed_det();
}

DetResult det_eps(const Matrix& a, DetMethod method)
{
	require_square(a, "det_eps");
	if (method == DetMethod::Reference) {
		check_reference_size(a);
		return PermutationExpansion(a).result();
	}
	auto assignment = optimal_assignment(a);
	Permutation witness(std::move(assignment.columns));
	const auto parity = witness.is_even() ? Parity::Even : Parity::Odd;
	return {std::move(assignment.value), std::move(witness), parity};
}

Matrix minor(const Matrix& a, std::size_t i, std::size_t j)
{
	require_square(a, "minor");
	if (a.rows() < 2)
		throw Error(ErrorKind::InvalidArgument, "minor needs n >= 2");
	a.at(i, j);
	std::vector<std::size_t> rows, cols;
	for (std::size_t k = 0; k < a.rows(); ++k) {
		if (k != i)
			rows.push_back(k);
		if (k != j)
			cols.push_back(k);
	}
	return a.select(rows, cols);
}

Matrix row_replace(const Matrix& a, std::size_t from, std::size_t to)
{
	require_square(a, "row_replace");
	a.at(from, 0);
	a.at(to, 0);
	std::vector<std::size_t> rows(a.rows()), cols(a.cols());
	std::iota(rows.begin(), rows.end(), std::size_t{0});
	std::iota(cols.begin(), cols.end(), std::size_t{0});
	rows[to] = from;
	return a.select(rows, cols);
}

Matrix col_replace(const Matrix& a, std::size_t from, std::size_t to)
{
	require_square(a, "col_replace");
	a.at(0, from);
	a.at(0, to);
	std::vector<std::size_t> rows(a.rows()), cols(a.cols());
	std::iota(rows.begin(), rows.end(), std::size_t{0});
	std::iota(cols.begin(), cols.end(), std::size_t{0});
	cols[to] = from;
	return a.select(rows, cols);
}

Matrix col_replace_with(const Matrix& a, std::size_t j, const Matrix& b)
{
	a.at(0, j);
	if (!b.is_column() || b.rows() != a.rows())
		throw Error(ErrorKind::ShapeMismatch, "replacement column has the wrong length");
	if (b.semiring() != a.semiring())
		throw Error(ErrorKind::ShapeMismatch, "replacement column is over a different semiring");
	std::vector<Scalar> entries(a.entries().begin(), a.entries().end());
	for (std::size_t i = 0; i < a.rows(); ++i)
		entries[i * a.cols() + j] = b(i, 0);
	return Matrix(a.semiring(), a.rows(), a.cols(), std::move(entries));
}

Matrix adj_eps(const Matrix& a, EpsFunction eps, DetMethod method)
{
	require_square(a, "adj_eps");
	const auto s = a.semiring();
	const auto n = a.rows();
	if (n == 1)
		return Matrix::identity(s, 1);
	std::vector<Scalar> entries;
	entries.reserve(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			entries.push_back(eps.power(static_cast<unsigned>(i + j), det_eps(minor(a, j, i), method).value));
	return Matrix(s, n, n, std::move(entries));
}

} // namespace trop
