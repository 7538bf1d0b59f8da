#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "tropical/matrix.hpp"

namespace trop::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi)
{
	return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p)
{
	return std::bernoulli_distribution(p)(rng);
}

inline bool is_multiplicative(Semiring s)
{
	return s.kind() == SemiringKind::MaxTimes || s.kind() == SemiringKind::MinTimes;
}

/// Finite element: integer in [lo, hi] for the additive kinds, a positive
/// rational p/q with p, q in 1..9 for the multiplicative ones.
inline Scalar random_finite(Rng& rng, Semiring s, int lo = -9, int hi = 9)
{
	if (is_multiplicative(s))
		return Scalar::rational(uniform_int(rng, 1, 9), uniform_int(rng, 1, 9));
	return Scalar(uniform_int(rng, lo, hi));
}

inline Scalar random_scalar(Rng& rng, Semiring s, double neutral_prob, int lo = -9, int hi = 9)
{
	if (chance(rng, neutral_prob))
		return Scalar::neutral();
	return random_finite(rng, s, lo, hi);
}

inline Matrix random_matrix(Rng& rng, Semiring s, std::size_t rows, std::size_t cols, double neutral_prob = 0.0,
                            int lo = -9, int hi = 9)
{
	std::vector<Scalar> entries;
	for (std::size_t k = 0; k < rows * cols; ++k)
		entries.push_back(random_scalar(rng, s, neutral_prob, lo, hi));
	return Matrix(s, rows, cols, std::move(entries));
}

inline Matrix random_vector(Rng& rng, Semiring s, std::size_t n, double neutral_prob = 0.0, int lo = -9, int hi = 9)
{
	return random_matrix(rng, s, n, 1, neutral_prob, lo, hi);
}

// ---------------------------------------------------------------------------
// Independent oracle on machine integers. Only integer-valued max-plus and
// min-plus matrices are supported; min-plus is mapped to max-plus by negation.

using IntEntry = std::optional<std::int64_t>;
using IntMatrix = std::vector<std::vector<IntEntry>>;

inline bool is_min_kind(Semiring s)
{
	return s.kind() == SemiringKind::MinPlus || s.kind() == SemiringKind::MinTimes;
}

inline IntEntry to_int(const Scalar& x, Semiring s)
{
	if (x.is_neutral())
		return std::nullopt;
	const auto& q = x.value();
	const std::int64_t v = q.get_num().get_si();
	return is_min_kind(s) ? -v : v;
}

inline Scalar from_int(const IntEntry& x, Semiring s)
{
	if (!x)
		return Scalar::neutral();
	return Scalar(static_cast<long>(is_min_kind(s) ? -*x : *x));
}

inline IntMatrix to_ints(const Matrix& a)
{
	IntMatrix out(a.rows(), std::vector<IntEntry>(a.cols()));
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j)
			out[i][j] = to_int(a(i, j), a.semiring());
	return out;
}

inline Matrix from_ints(const IntMatrix& m, Semiring s)
{
	std::vector<Scalar> entries;
	for (const auto& row : m)
		for (const auto& x : row)
			entries.push_back(from_int(x, s));
	return Matrix(s, m.size(), m.front().size(), std::move(entries));
}

inline IntEntry int_max(IntEntry a, IntEntry b)
{
	if (!a)
		return b;
	if (!b)
		return a;
	return std::max(*a, *b);
}

inline IntEntry int_mul(IntEntry a, IntEntry b)
{
	if (!a || !b)
		return std::nullopt;
	return *a + *b;
}

/// Max over all permutations of the sum along the permutation.
inline IntEntry brute_det(const IntMatrix& a)
{
	const auto n = a.size();
	std::vector<std::size_t> sigma(n);
	std::iota(sigma.begin(), sigma.end(), 0);
	IntEntry best;
	do {
		IntEntry sum = 0;
		for (std::size_t i = 0; i < n && sum; ++i)
			sum = int_mul(sum, a[i][sigma[i]]);
		best = int_max(best, sum);
	} while (std::next_permutation(sigma.begin(), sigma.end()));
	return best;
}

inline IntMatrix int_product(const IntMatrix& a, const IntMatrix& b)
{
	IntMatrix out(a.size(), std::vector<IntEntry>(b.front().size()));
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.front().size(); ++j)
			for (std::size_t k = 0; k < b.size(); ++k)
				out[i][j] = int_max(out[i][j], int_mul(a[i][k], b[k][j]));
	return out;
}

/// Greatest x with A x <= b for a regular b, by the min-of-differences
/// formula; columns with no finite entry come back neutral.
inline std::vector<IntEntry> int_principal(const IntMatrix& a, const std::vector<std::int64_t>& b)
{
	const auto cols = a.front().size();
	std::vector<IntEntry> x(cols);
	for (std::size_t j = 0; j < cols; ++j)
		for (std::size_t i = 0; i < a.size(); ++i)
			if (a[i][j]) {
				const auto bound = b[i] - *a[i][j];
				x[j] = x[j] ? std::min(*x[j], bound) : bound;
			}
	return x;
}

struct OracleVerdict {
	bool solvable;
	Matrix principal;
};

/// Solvability of A x = b for a regular integer b, decided on machine
/// integers without touching the library's solver.
inline OracleVerdict oracle_solve(const Matrix& a, const Matrix& b)
{
	const auto s = a.semiring();
	const auto ai = to_ints(a);
	std::vector<std::int64_t> bi;
	for (std::size_t k = 0; k < b.size(); ++k)
		bi.push_back(*to_int(b[k], s));
	const auto x = int_principal(ai, bi);
	bool solvable = true;
	for (std::size_t i = 0; i < ai.size(); ++i) {
		IntEntry lhs;
		for (std::size_t j = 0; j < x.size(); ++j)
			lhs = int_max(lhs, int_mul(ai[i][j], x[j]));
		solvable = solvable && lhs == IntEntry(bi[i]);
	}
	IntMatrix column;
	for (const auto& v : x)
		column.push_back({v});
	return {solvable, from_ints(column, s)};
}

/// Random square matrix with a finite determinant.
inline Matrix random_nonsingular(Rng& rng, Semiring s, std::size_t n, double neutral_prob, int lo = -9, int hi = 9)
{
	for (;;) {
		auto a = random_matrix(rng, s, n, n, neutral_prob, lo, hi);
		if (is_multiplicative(s))
			return a.is_regular() ? a : random_matrix(rng, s, n, n, 0.0, lo, hi);
		if (brute_det(to_ints(a)))
			return a;
	}
}

} // namespace trop::testing
