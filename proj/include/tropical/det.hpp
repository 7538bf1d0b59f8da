#pragma once

#include <cstddef>
#include <vector>

#include "tropical/matrix.hpp"

namespace trop {

/// Bijection on {0..n-1}, stored as i -> images[i].
class Permutation {
public:
	Permutation() = default;
	/// Throws InvalidArgument unless `images` is a bijection.
	explicit Permutation(std::vector<std::size_t> images);
	static Permutation identity(std::size_t n);

	std::size_t size() const noexcept { return images_.size(); }
	std::size_t operator()(std::size_t i) const { return images_.at(i); }
	const std::vector<std::size_t>& images() const noexcept { return images_; }

	std::size_t inversions() const;
	bool is_even() const { return inversions() % 2 == 0; }

	friend bool operator==(const Permutation&, const Permutation&) = default;

private:
	std::vector<std::size_t> images_;
};

enum class Parity { Even, Odd };

struct DetResult {
	Scalar value;
	/// Lexicographically smallest permutation attaining `value`. When the
	/// value is neutral every permutation attains it, so this is the identity.
	Permutation witness;
	Parity parity = Parity::Even;
};

/// |A|+ and |A|-: the (+)-sum of (x)-products over even and odd permutations.
struct SignedDet {
	Scalar positive;
	Scalar negative;
};

enum class DetMethod {
	/// Assignment solver for every size.
	Auto,
	/// Full permutation enumeration, n <= kReferenceDetLimit.
	Reference,
	Assignment,
};

inline constexpr std::size_t kReferenceDetLimit = 9;

/// (x)-product of the entries a_{i, sigma(i)}.
Scalar permutation_product(const Matrix& a, const Permutation& sigma);

/// Reference path only; throws SizeExceeded above kReferenceDetLimit.
SignedDet pos_neg_det(const Matrix& a);

/// epsilon-determinant under the identity epsilon-function, i.e. the (+)-sum
/// over all permutations. Both methods return the same value and witness.
DetResult det_eps(const Matrix& a, DetMethod method = DetMethod::Auto);

/// A with row i and column j removed. Requires n >= 2.
Matrix minor(const Matrix& a, std::size_t i, std::size_t j);

/// Row `to` overwritten by row `from`.
Matrix row_replace(const Matrix& a, std::size_t from, std::size_t to);
/// Column `to` overwritten by column `from`.
Matrix col_replace(const Matrix& a, std::size_t from, std::size_t to);
/// Column j overwritten by the vector b.
Matrix col_replace_with(const Matrix& a, std::size_t j, const Matrix& b);

/// epsilon-adjoint: entry (i, j) is eps^(i+j)(det_eps(A(j|i))). A 1x1 matrix
/// has the adjoint [1].
Matrix adj_eps(const Matrix& a, EpsFunction eps = EpsFunction::identity(), DetMethod method = DetMethod::Auto);

} // namespace trop
