#include "tropical/cli.hpp"

#include <fstream>
#include <iostream>

#include "tropical/io.hpp"

namespace trop::cli {

namespace {

std::string indices_line(const std::vector<std::size_t>& indices)
{
	std::string out;
	for (auto k : indices) {
		if (!out.empty())
			out += ' ';
		out += std::to_string(k + 1);
	}
	return out.empty() ? "-" : out;
}

void print_json(std::ostream& out, const nlohmann::json& j)
{
	out << j.dump(2) << '\n';
}

void print_violations(std::ostream& out, const std::vector<Violation>& violations, Semiring s)
{
	out << "violations (i j lhs rhs, failing lhs <= rhs):\n";
	for (const auto& v : violations)
		out << "  " << v.i + 1 << ' ' << v.j + 1 << ' ' << format_scalar(v.lhs, s) << ' ' << format_scalar(v.rhs, s)
		    << '\n';
}

void print_combinations(std::ostream& out, const char* label, const std::vector<Combination>& combos,
                        const std::vector<std::size_t>& kept, Semiring s)
{
	for (const auto& c : combos) {
		out << label << ' ' << c.index + 1 << " =";
		bool first = true;
		for (std::size_t k = 0; k < kept.size(); ++k) {
			if (c.coefficients[k].is_neutral())
				continue;
			out << (first ? " " : " (+) ") << label[0] << kept[k] + 1 << " (x) " << format_scalar(c.coefficients[k], s);
			first = false;
		}
		if (first)
			out << ' ' << neutral_token(s);
		out << '\n';
	}
}

const Matrix& require_rhs(const System& system)
{
	if (!system.b)
		throw Error(ErrorKind::Parse, "this command needs a right-hand side after a blank line");
	return *system.b;
}

int run_det(const CliConfig& config, const System& system, std::ostream& out)
{
	const auto s = config.semiring;
	const auto det = det_eps(system.a);
	if (config.format == OutputFormat::Structured) {
		auto j = to_json(det, s);
		if (config.verbose && system.a.rows() <= kReferenceDetLimit) {
			const auto signed_det = pos_neg_det(system.a);
			j["positive"] = format_scalar(signed_det.positive, s);
			j["negative"] = format_scalar(signed_det.negative, s);
		}
		print_json(out, j);
		return kExitOk;
	}
	std::vector<std::size_t> witness = det.witness.images();
	out << "det: " << format_scalar(det.value, s) << '\n';
	out << "witness: " << indices_line(witness) << '\n';
	out << "parity: " << (det.parity == Parity::Even ? "even" : "odd") << '\n';
	if (config.verbose && system.a.rows() <= kReferenceDetLimit) {
		const auto signed_det = pos_neg_det(system.a);
		out << "positive: " << format_scalar(signed_det.positive, s) << '\n';
		out << "negative: " << format_scalar(signed_det.negative, s) << '\n';
	}
	return kExitOk;
}

int run_adj(const CliConfig& config, const System& system, std::ostream& out)
{
	const auto adj = adj_eps(system.a);
	if (config.format == OutputFormat::Structured)
		print_json(out, {{"adj", to_json(adj)}});
	else
		out << format_matrix(adj);
	return kExitOk;
}

int run_pinv(const CliConfig& config, const System& system, std::ostream& out)
{
	const auto pinv = pseudo_inverse(system.a);
	const auto g = multiply(system.a, pinv);
	if (config.format == OutputFormat::Structured) {
		print_json(out, {{"pinv", to_json(pinv)}, {"gram", to_json(g)}});
		return kExitOk;
	}
	out << format_matrix(pinv);
	if (config.verbose)
		out << "gram:\n" << format_matrix(g);
	return kExitOk;
}

int run_check(const CliConfig& config, const System& system, std::ostream& out)
{
	const auto& b = require_rhs(system);
	const auto violations = solvability_conditions(system.a, b);
	if (config.format == OutputFormat::Structured) {
		print_json(out, {{"solvable", violations.empty()},
		                 {"gram", to_json(gram(system.a))},
		                 {"violations", to_json(violations, config.semiring)}});
	}
	else {
		out << "gram:\n" << format_matrix(gram(system.a));
		if (violations.empty())
			out << "all conditions hold\n";
		else
			print_violations(out, violations, config.semiring);
	}
	return violations.empty() ? kExitOk : kExitUnsolved;
}

int run_reduce(const CliConfig& config, const System& system, std::ostream& out)
{
	const auto s = config.semiring;
	if (!system.b) {
		const auto rows = row_reduce(system.a);
		const auto cols = column_reduce(system.a);
		if (config.format == OutputFormat::Structured) {
			print_json(out, {{"rows", to_json(rows, s)}, {"cols", to_json(cols, s)}});
			return kExitOk;
		}
		out << "kept rows: " << indices_line(rows.kept) << '\n';
		out << "kept cols: " << indices_line(cols.kept) << '\n';
		print_combinations(out, "R", rows.removed, rows.kept, s);
		print_combinations(out, "C", cols.removed, cols.kept, s);
		return kExitOk;
	}

	const auto reduced = reduce_system(system.a, *system.b);
	if (config.format == OutputFormat::Structured) {
		print_json(out, to_json(reduced));
	}
	else {
		out << "kept rows: " << indices_line(reduced.kept_rows) << '\n';
		out << "kept cols: " << indices_line(reduced.kept_cols) << '\n';
		print_combinations(out, "R", reduced.xi, reduced.kept_rows, s);
		print_combinations(out, "C", reduced.eta, reduced.kept_cols, s);
		out << "consistent: " << (reduced.consistent ? "true" : "false") << '\n';
		out << "reduced matrix:\n" << format_matrix(reduced.a_bar);
		out << "reduced rhs: " << format_vector(reduced.b_bar) << '\n';
	}
	return reduced.consistent ? kExitOk : kExitUnsolved;
}

int run_solve(const CliConfig& config, const System& system, std::ostream& out)
{
	const auto s = config.semiring;
	const auto& b = require_rhs(system);
	SolveOptions options;
	options.reduce_first = config.reduce_first;
	const auto report = solve(system.a, b, options);

	// Cross-check the square path with Cramer's rule on the input system.
	std::optional<Matrix> cramer;
	std::optional<Matrix> direct;
	if (config.verbose && system.a.is_square() && b.is_regular() && det_eps(system.a).value.is_finite()) {
		cramer = cramer_solve(system.a, b);
		direct = multiply(pseudo_inverse(system.a), b);
	}

	if (config.format == OutputFormat::Structured) {
		auto j = to_json(report);
		j["command"] = "solve";
		j["semiring"] = s.name();
		if (cramer) {
			j["cramer"] = vector_to_json(*cramer);
			j["cramer_agrees"] = *cramer == *direct;
		}
		print_json(out, j);
		return exit_code(report);
	}

	out << "status: " << to_string(report.status) << '\n';
	out << "shape: " << to_string(report.shape) << '\n';
	if (!report.forced.empty())
		out << "forced to " << neutral_token(s) << ": " << indices_line(report.forced) << '\n';
	if (report.inconsistent)
		out << "note: a dependent equation contradicts its right-hand side\n";
	if (report.x_star)
		out << "x*: " << format_vector(*report.x_star) << '\n';
	if (report.x_star && !report.maximal)
		out << "note: a solution, not necessarily maximal\n";
	if (report.unique)
		out << "unique: " << (*report.unique ? "true" : "false") << '\n';
	if (report.y_star)
		out << "y*: " << format_vector(*report.y_star) << '\n';
	if (report.candidate)
		out << "candidate: " << format_vector(*report.candidate) << '\n';
	if (report.residual)
		out << "residual: " << format_vector(*report.residual) << '\n';
	if (report.not_a_solution)
		out << "note: the nearest square system was solved; its answer does not satisfy A x = b\n";
	if (!report.violations.empty())
		print_violations(out, report.violations, s);
	if (config.verbose) {
		if (report.square_matrix)
			out << "square system matrix:\n" << format_matrix(*report.square_matrix);
		if (report.a_pinv)
			out << "pseudo-inverse:\n" << format_matrix(*report.a_pinv);
		if (report.gram)
			out << "gram:\n" << format_matrix(*report.gram);
		if (cramer)
			out << "cramer: " << format_vector(*cramer) << (*cramer == *direct ? " (agrees)" : " (DISAGREES)")
			    << '\n';
	}
	return exit_code(report);
}

int dispatch(const CliConfig& config, std::istream& in, std::ostream& out)
{
	std::ifstream file;
	std::istream* source = &in;
	if (!config.input_path.empty() && config.input_path != "-") {
		file.open(config.input_path);
		if (!file)
			throw Error(ErrorKind::InvalidArgument, "cannot open " + config.input_path);
		source = &file;
	}
	const auto system = parse_system(*source, config.semiring);

	switch (config.command) {
	case Command::Det: return run_det(config, system, out);
	case Command::Adj: return run_adj(config, system, out);
	case Command::Pinv: return run_pinv(config, system, out);
	case Command::Solve: return run_solve(config, system, out);
	case Command::Reduce: return run_reduce(config, system, out);
	case Command::Check: return run_check(config, system, out);
	}
	return kExitInput;
}

} // namespace

std::optional<Command> command_from_name(std::string_view name)
{
	if (name == "det")
		return Command::Det;
	if (name == "adj")
		return Command::Adj;
	if (name == "pinv")
		return Command::Pinv;
	if (name == "solve")
		return Command::Solve;
	if (name == "reduce")
		return Command::Reduce;
	if (name == "check")
		return Command::Check;
	return std::nullopt;
}

int exit_code(const SolveReport& report)
{
	switch (report.status) {
	case SolveStatus::MaximalSolution: return kExitOk;
	case SolveStatus::ConditionsViolated: return kExitUnsolved;
	case SolveStatus::DetNotUnit: return kExitDetNotUnit;
	}
	return kExitInput;
}

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err)
{
	try {
		return dispatch(config, in, out);
	}
	catch (const Error& e) {
		err << "error: " << to_string(e.kind());
		if (e.line() > 0)
			err << " at line " << e.line() << ", column " << e.column();
		err << ": " << e.what() << '\n';
		return e.kind() == ErrorKind::DetNotUnit ? kExitDetNotUnit : kExitInput;
	}
}

} // namespace trop::cli
