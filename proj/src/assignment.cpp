#include "tropical/assignment.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>

namespace trop {

namespace {

// Ordered abelian group on semiring scalars, written multiplicatively.
struct ScalarGroup {
	using T = Scalar;
	Semiring s;

	T one() const { return s.one(); }
	T mul(const T& a, const T& b) const { return s.mul(a, b); }
	T div(const T& a, const T& b) const { return s.div(a, b); }
	bool less(const T& a, const T& b) const { return s.less(a, b); }
};

// Integers under +, ordered numerically.
struct IntGroup {
	using T = std::int64_t;

	T one() const { return 0; }
	T mul(T a, T b) const { return a + b; }
	T div(T a, T b) const { return a - b; }
	bool less(T a, T b) const { return a < b; }
};

template <class T>
using CostMatrix = std::vector<std::vector<std::optional<T>>>;

// Reroutes the current perfect matching of the tight graph so that row `row`
// takes column `col`. Rows and columns marked fixed are left untouched.
bool reroute(std::size_t row, std::size_t col, const std::vector<std::vector<char>>& tight,
             const std::vector<char>& fixed_col, std::vector<std::size_t>& match_row,
             std::vector<std::size_t>& match_col)
{
	const auto n = match_row.size();
	const auto target = match_row[row];
	std::vector<char> visited(n, false);

	std::function<bool(std::size_t)> extend = [&](std::size_t r) -> bool {
		for (std::size_t k = 0; k < n; ++k) {
			if (!tight[r][k] || fixed_col[k] || k == col || visited[k])
				continue;
			visited[k] = true;
			if (k == target || extend(match_col[k])) {
				match_row[r] = k;
				match_col[k] = r;
				return true;
			}
		}
		return false;
	};

	if (!extend(match_col[col]))
		return false;
	match_row[row] = col;
	match_col[col] = row;
	return true;
}

// Shortest augmenting path Hungarian method minimizing the cost product.
// `cost` is 1-based; row/column 0 is the virtual root. Returns the
// lexicographically smallest optimal row -> column map, or nullopt when every
// permutation uses a forbidden cell.
template <class G>
std::optional<std::vector<std::size_t>> hungarian(const G& g, const CostMatrix<typename G::T>& cost, std::size_t n)
{
	using T = typename G::T;
	std::vector<T> u(n + 1, g.one()), v(n + 1, g.one());
	std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);

	for (std::size_t i = 1; i <= n; ++i) {
		p[0] = i;
		std::size_t j0 = 0;
		std::vector<std::optional<T>> minv(n + 1);
		std::vector<char> used(n + 1, false);
		do {
			used[j0] = true;
			const auto i0 = p[j0];
			std::optional<T> delta;
			std::size_t j1 = 0;
			for (std::size_t j = 1; j <= n; ++j) {
				if (used[j])
					continue;
				if (cost[i0][j]) {
					T cur = g.div(g.div(*cost[i0][j], u[i0]), v[j]);
					if (!minv[j] || g.less(cur, *minv[j])) {
						minv[j] = std::move(cur);
						way[j] = j0;
					}
				}
				if (minv[j] && (!delta || g.less(*minv[j], *delta))) {
					delta = minv[j];
					j1 = j;
				}
			}
			// No free column reachable by alternating paths.
			if (!delta)
				return std::nullopt;
			for (std::size_t j = 0; j <= n; ++j) {
				if (used[j]) {
					u[p[j]] = g.mul(u[p[j]], *delta);
					v[j] = g.div(v[j], *delta);
				}
				else if (minv[j]) {
					minv[j] = g.div(*minv[j], *delta);
				}
			}
			j0 = j1;
		} while (p[j0] != 0);
		do {
			const auto j1 = way[j0];
			p[j0] = p[j1];
			j0 = j1;
		} while (j0 != 0);
	}

	// Complementary slackness: a permutation is optimal iff it only uses
	// cells whose reduced cost is one.
	std::vector<std::vector<char>> tight(n, std::vector<char>(n, false));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			tight[i][j] = cost[i + 1][j + 1] && *cost[i + 1][j + 1] == g.mul(u[i + 1], v[j + 1]);

	std::vector<std::size_t> match_row(n), match_col(n);
	for (std::size_t j = 1; j <= n; ++j) {
		match_row[p[j] - 1] = j - 1;
		match_col[j - 1] = p[j] - 1;
	}

	std::vector<char> fixed_col(n, false);
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j) {
			if (!tight[i][j] || fixed_col[j])
				continue;
			if (match_row[i] == j || reroute(i, j, tight, fixed_col, match_row, match_col)) {
				fixed_col[j] = true;
				break;
			}
		}
	}
	return match_row;
}

// For the additive semirings, the finite entries scaled by the common
// denominator are integers, and scaling preserves the order of sums. Returns
// nullopt when the scaled costs might overflow.
std::optional<CostMatrix<std::int64_t>> integer_costs(const Matrix& a)
{
	const auto s = a.semiring();
	const auto n = a.rows();
	mpz_class scale = 1;
	for (const auto& x : a.entries())
		if (x.is_finite())
			mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.value().get_den_mpz_t());

	// Path sums stay below n * 2 * bound during the search.
	const mpz_class bound = mpz_class(1) << 40;
	const bool maximize = s.kind() == SemiringKind::MaxPlus;
	CostMatrix<std::int64_t> cost(n + 1, std::vector<std::optional<std::int64_t>>(n + 1));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const auto& x = a(i, j);
			if (x.is_neutral())
				continue;
			const mpz_class scaled = x.value().get_num() * (scale / x.value().get_den());
			if (abs(scaled) >= bound || n > 1000)
				return std::nullopt;
			const auto w = scaled.get_si();
			cost[i + 1][j + 1] = maximize ? -w : w;
		}
	return cost;
}

} // namespace

Assignment optimal_assignment(const Matrix& a)
{
	if (!a.is_square())
		throw Error(ErrorKind::ShapeMismatch, "assignment needs a square matrix");
	const auto s = a.semiring();
	const auto n = a.rows();

	std::optional<std::vector<std::size_t>> columns;
	const bool additive = s.kind() == SemiringKind::MaxPlus || s.kind() == SemiringKind::MinPlus;
	std::optional<CostMatrix<std::int64_t>> fast = additive ? integer_costs(a) : std::nullopt;
	if (fast) {
		columns = hungarian(IntGroup{}, *fast, n);
	}
	else {
		// Costs are inverted weights so that minimizing the cost product in
		// the natural order maximizes the weight product.
		CostMatrix<Scalar> cost(n + 1, std::vector<std::optional<Scalar>>(n + 1));
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				if (a(i, j).is_finite())
					cost[i + 1][j + 1] = s.inv(a(i, j));
		columns = hungarian(ScalarGroup{s}, cost, n);
	}

	if (!columns) {
		std::vector<std::size_t> identity(n);
		std::iota(identity.begin(), identity.end(), std::size_t{0});
		return {s.zero(), std::move(identity)};
	}
	Scalar value = s.one();
	for (std::size_t i = 0; i < n; ++i)
		value = s.mul(value, a(i, (*columns)[i]));
	return {std::move(value), std::move(*columns)};
}

} // namespace trop
