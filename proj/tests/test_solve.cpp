#include <doctest.h>

#include "support.hpp"
#include "tropical/io.hpp"
#include "tropical/solve.hpp"

using namespace trop;
using namespace trop::testing;

namespace {

const Semiring mp = Semiring::max_plus();
const Scalar N = Scalar::neutral();

Matrix m(std::vector<std::vector<Scalar>> rows)
{
	return Matrix::from_rows(mp, rows);
}

Matrix v(std::vector<Scalar> entries)
{
	return Matrix::column(mp, std::move(entries));
}

const Matrix kA2 = m({{1, -6, 2, -5}, {4, 5, 1, -2}, {7, -1, 3, 0}, {-2, -9, -5, 0}});
const Matrix kB2 = v({2, 7, 3, -4});
const Matrix kA3 = m({{5, 2, 8, 10}, {4, 1, 7, 9}, {3, 7, 9, 11}, {-1, 0, 2, 4}});
const Matrix kB3 = v({7, 4, 8, 1});
const Matrix kA8 = m({{5, 2, 6}, {4, 1, 4}, {3, 7, 14}});
const Matrix kB8 = v({5, 4, 13});
const Matrix kTall = m({{2, 5, -2}, {1, 4, 3}, {7, 8, 1}, {0, 1, 4}});
const Matrix kTallB = v({8, 3, 5, 2});

ErrorKind kind_of(auto&& f)
{
	try {
		f();
	}
	catch (const Error& e) {
		return e.kind();
	}
	return ErrorKind::InvalidArgument;
}

// Every x over the candidate grid {b_i / a_ij} u {neutral} with A x = b.
std::vector<Matrix> grid_solutions(const Matrix& a, const Matrix& b)
{
	const auto s = a.semiring();
	std::vector<std::vector<Scalar>> candidates(a.cols());
	for (std::size_t j = 0; j < a.cols(); ++j) {
		candidates[j].push_back(N);
		for (std::size_t i = 0; i < a.rows(); ++i)
			if (a(i, j).is_finite())
				candidates[j].push_back(s.div(b[i], a(i, j)));
	}
	std::vector<Matrix> out;
	std::vector<std::size_t> pick(a.cols(), 0);
	for (;;) {
		std::vector<Scalar> x;
		for (std::size_t j = 0; j < a.cols(); ++j)
			x.push_back(candidates[j][pick[j]]);
		const auto column = Matrix::column(s, x);
		if (multiply(a, column) == b && std::find(out.begin(), out.end(), column) == out.end())
			out.push_back(column);
		std::size_t j = 0;
		while (j < pick.size() && ++pick[j] == candidates[j].size())
			pick[j++] = 0;
		if (j == pick.size())
			break;
	}
	return out;
}

} // namespace

TEST_CASE("pseudo-inverse and gram of known systems")
{
	CHECK(pseudo_inverse(kA2) == m({{-6, -13, -7, -7}, {-6, -5, -8, -7}, {-2, -13, -8, -7}, {-7, -14, -9, 0}}));
	CHECK(gram(kA2) == m({{0, -11, -6, -5}, {-1, 0, -3, -2}, {1, -6, 0, 0}, {-7, -14, -9, 0}}));
	CHECK(pseudo_inverse(kA3) == m({{-5, -4, -6, 1}, {-6, -5, -7, 0}, {-8, -7, -9, -2}, {-10, -9, -11, -4}}));
	CHECK(gram(kA3) == m({{0, 1, -1, 6}, {-1, 0, -2, 5}, {1, 2, 0, 7}, {-6, -5, -7, 0}}));
	CHECK(pseudo_inverse(kA8) == m({{-5, -4, -13}, {-2, -1, -10}, {-9, -8, -14}}));
	CHECK(gram(kA8) == m({{0, 1, -8}, {-1, 0, -9}, {5, 6, 0}}));
	CHECK(pseudo_inverse(Matrix::identity(mp, 3)) == Matrix::identity(mp, 3));
	CHECK(kind_of([] { pseudo_inverse(m({{1, 2}, {N, N}})); }) == ErrorKind::DetNotUnit);
	CHECK(kind_of([] { gram(m({{1, 2, 3}})); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("square solve")
{
	const auto ok = solve_square(kA2, kB2);
	REQUIRE(ok.status == SolveStatus::MaximalSolution);
	CHECK(*ok.x_star == v({-4, 2, 0, -4}));
	CHECK(ok.violations.empty());
	CHECK(ok.unique.has_value());

	const auto bad = solve_square(kA3, kB3);
	REQUIRE(bad.status == SolveStatus::ConditionsViolated);
	CHECK_FALSE(bad.x_star);
	CHECK(*bad.candidate == v({2, 1, -1, -3}));
	CHECK(*bad.residual == v({7, 6, 8, 1}));
	CHECK_FALSE(bad.unique);
	for (const auto& viol : bad.violations)
		CHECK((viol.i == 1 || viol.j == 1));

	CHECK(*solve_square(kA8, kB8).x_star == v({0, 3, -1}));
	CHECK(solve_square(m({{1, 2}, {N, N}}), v({1, 1})).status == SolveStatus::DetNotUnit);
	CHECK(solvability_conditions(m({{4}}), v({-3})).empty());
}

TEST_CASE("Cramer and principal solution on known systems")
{
	CHECK(cramer_solve(kA8, kB8) == v({0, 3, -1}));
	CHECK(cramer_solve(kA2, kB2) == v({-4, 2, 0, -4}));
	CHECK(cramer_solve(kA3, kB3) == v({2, 1, -1, -3}));
	CHECK(principal_solution(kA2, kB2).x == v({-4, 2, 0, -4}));
	CHECK(principal_solution(kA8, kB8).x == v({0, 3, -1}));
	CHECK(principal_solution(kA3, kB3).x == v({0, 1, -3, -5}));
	CHECK(principal_solution(Matrix::identity(mp, 3), v({4, -1, 2})).x == v({4, -1, 2}));
	const auto unbounded = principal_solution(m({{1, N}, {2, N}}), v({3, 3}));
	CHECK(unbounded.unbounded == std::vector<std::size_t>{1});
	CHECK(unbounded.x[1].is_neutral());
	CHECK(kind_of([] { principal_solution(kA2, v({1, N, 1, 1})); }) == ErrorKind::NotRegular);
}

TEST_CASE("preprocessing removes neutral right-hand sides")
{
	const auto p = preprocess_regular(m({{0, N}, {0, 0}}), v({N, 5}));
	CHECK(p.kept_rows == std::vector<std::size_t>{1});
	CHECK(p.kept_cols == std::vector<std::size_t>{1});
	CHECK(p.forced == std::vector<std::size_t>{0});
	REQUIRE(p.a);
	CHECK(*p.a == m({{0}}));
	CHECK(p.b == v({5}));

	const auto q = preprocess_regular(m({{N, N}, {1, 2}}), v({N, 5}));
	CHECK(q.forced.empty());
	CHECK(q.kept_cols.size() == 2);

	const auto same = preprocess_regular(kA2, kB2);
	CHECK(*same.a == kA2);
	CHECK(kind_of([] { preprocess_regular(kA2, v({N, N, N, N})); }) == ErrorKind::EmptySystem);
}

TEST_CASE("wide systems")
{
	const auto a = m({{-4, 7, 12, -3, 0}, {3, 2, 8, 3, -1}, {-9, 1, 6, 0, 2}, {2, 8, -5, 1, -3}});
	const auto b = v({14, 10, 8, 11});
	const auto r = solve_wide(a, b);
	REQUIRE(r.status == SolveStatus::MaximalSolution);
	CHECK_FALSE(r.maximal);
	CHECK(*r.y_star == v({-10, -6, -4, -5}));
	CHECK(*r.x_star == v({-3, 3, 2, -3, -2}));
	CHECK(multiply(a, *r.x_star) == b);
	CHECK(*r.square_matrix == m({{24, 20, 18, 15}, {20, 16, 14, 10}, {18, 14, 12, 9}, {15, 10, 9, 16}}));

	const auto single = solve_wide(m({{1, 3, 2}}), v({5}));
	CHECK(*single.y_star == v({-1}));
	CHECK(*single.x_star == v({0, 2, 1}));
	CHECK(kind_of([] { solve_wide(kA2, kB2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("tall systems")
{
	const auto r = solve_tall(kTall, kTallB);
	CHECK(r.status == SolveStatus::ConditionsViolated);
	CHECK(r.not_a_solution);
	CHECK(*r.square_matrix == m({{14, 15, 8}, {15, 16, 9}, {8, 9, 8}}));
	CHECK(*r.square_rhs == v({12, 13, 6}));
	CHECK(*r.gram == m({{0, -1, 0}, {1, 0, 1}, {-6, -7, 0}}));
	CHECK(*r.candidate == v({-2, -3, -2}));
	CHECK(*r.residual == v({2, 1, 5, 2}));
	CHECK(kind_of([] { solve_tall(kA2, kB2); }) == ErrorKind::InvalidArgument);

	const auto projector = multiply(multiply(kTall, pseudo_inverse(multiply(transpose(kTall), kTall))), transpose(kTall));
	CHECK_FALSE(is_eigenpair(projector, mp.one(), kTallB));

	// A planted right-hand side does not guarantee success: the maximal
	// solution of the normal system can lie strictly above every solution of
	// A x = b. Success must still mean an exact, maximal solution.
	Rng rng(17);
	int solved = 0, flagged = 0;
	for (int t = 0; t < 200; ++t) {
		const auto cols = static_cast<std::size_t>(uniform_int(rng, 1, 3));
		const auto a = random_matrix(rng, mp, cols + static_cast<std::size_t>(uniform_int(rng, 1, 2)), cols);
		const auto b = multiply(a, random_vector(rng, mp, cols));
		const auto report = solve_tall(a, b);
		const auto oracle = oracle_solve(a, b);
		REQUIRE(oracle.solvable);
		if (report.status == SolveStatus::MaximalSolution) {
			REQUIRE(*report.x_star == oracle.principal);
			++solved;
		}
		else if (report.not_a_solution) {
			REQUIRE(leq(oracle.principal, *report.candidate));
			++flagged;
		}
		else {
			// The normal system is solvable but fails its conditions.
			REQUIRE_FALSE(report.violations.empty());
		}
	}
	CHECK(solved > 0);
	CHECK(flagged > 0);
}

TEST_CASE("eigenpairs")
{
	CHECK(is_eigenpair(Matrix::identity(mp, 3), mp.one(), v({1, N, 4})));
	CHECK(is_eigenpair(m({{0, 0}, {0, 0}}), mp.one(), v({0, 0})));
	CHECK_FALSE(is_eigenpair(m({{0, 0}, {0, 0}}), mp.one(), v({0, 1})));
	CHECK(kind_of([] { is_eigenpair(Matrix::identity(mp, 2), Scalar(0), v({1, 2, 3})); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("gram invariants on random matrices")
{
	Rng rng(21);
	for (auto s : {Semiring::max_plus(), Semiring::min_plus(), Semiring::min_times()}) {
		CAPTURE(s.name());
		for (int t = 0; t < 150; ++t) {
			const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 5));
			const auto a = random_nonsingular(rng, s, n, 0.2);
			const auto g = gram(a);
			REQUIRE(g == gram_by_row_replacement(a));
			const auto gl = gram_left(a);
			for (std::size_t i = 0; i < n; ++i) {
				REQUIRE(g(i, i) == s.one());
				REQUIRE(gl(i, i) == s.one());
			}
			const auto b = random_vector(rng, s, n);
			REQUIRE(cramer_solve(a, b) == multiply(pseudo_inverse(a), b));
		}
	}
}

TEST_CASE("maximality and uniqueness against grid search")
{
	Rng rng(23);
	int unique = 0, several = 0;
	for (int t = 0; t < 300; ++t) {
		const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
		const auto a = random_nonsingular(rng, mp, n, 0.15, -5, 5);
		const auto x0 = random_vector(rng, mp, n, 0.0, -5, 5);
		const auto b = multiply(a, x0);
		const auto r = solve_square(a, b);
		if (r.status != SolveStatus::MaximalSolution)
			continue;
		REQUIRE(multiply(a, *r.x_star) == b);
		REQUIRE(leq(x0, *r.x_star));
		const auto solutions = grid_solutions(a, b);
		for (const auto& x : solutions)
			REQUIRE(leq(x, *r.x_star));
		REQUIRE(r.unique.has_value());
		CAPTURE(format_matrix(a));
		REQUIRE(*r.unique == (solutions.size() == 1));
		(*r.unique ? unique : several)++;
	}
	CHECK(unique > 0);
	CHECK(several > 0);
}

TEST_CASE("solve pipeline")
{
	const auto square = solve(kA2, kB2);
	CHECK(square.shape == SystemShape::Square);
	CHECK(*square.x_star == v({-4, 2, 0, -4}));

	const auto tall = solve(kTall, kTallB);
	CHECK(tall.shape == SystemShape::Tall);
	CHECK(tall.not_a_solution);

	const auto forced = solve(m({{0, N}, {0, 0}}), v({N, 5}));
	REQUIRE(forced.status == SolveStatus::MaximalSolution);
	CHECK(forced.forced == std::vector<std::size_t>{0});
	CHECK(*forced.x_star == v({N, 5}));

	// A dependent third column is dropped before solving.
	const auto dep = m({{3, 6, 5}, {-5, 0, -2}, {4, 1, 6}});
	const auto b = multiply(dep, v({0, 0, N}));
	SolveOptions options;
	options.reduce_first = true;
	const auto reduced = solve(dep, b, options);
	REQUIRE(reduced.status == SolveStatus::MaximalSolution);
	CHECK(multiply(dep, *reduced.x_star) == b);
	CHECK(reduced.system_cols.size() == 2);

	CHECK(kind_of([] { solve(kA2, v({N, N, N, N})); }) == ErrorKind::EmptySystem);
}

TEST_CASE("pipeline agrees with the oracle on random shapes")
{
	Rng rng(29);
	for (int t = 0; t < 300; ++t) {
		const auto rows = static_cast<std::size_t>(uniform_int(rng, 1, 4));
		const auto cols = static_cast<std::size_t>(uniform_int(rng, 1, 4));
		const auto a = random_matrix(rng, mp, rows, cols, 0.1);
		auto b = multiply(a, random_vector(rng, mp, cols));
		if (t % 2)
			b = random_vector(rng, mp, rows);
		if (!b.is_regular())
			continue;
		SolveOptions options;
		options.reduce_first = t % 3 == 0;
		SolveReport r;
		try {
			r = solve(a, b, options);
		}
		catch (const Error& e) {
			REQUIRE(e.kind() == ErrorKind::DetNotUnit);
			continue;
		}
		if (r.status == SolveStatus::MaximalSolution) {
			REQUIRE(multiply(a, *r.x_star) == b);
			REQUIRE(oracle_solve(a, b).solvable);
			if (r.maximal)
				REQUIRE(*r.x_star == oracle_solve(a, b).principal);
		}
	}
}
