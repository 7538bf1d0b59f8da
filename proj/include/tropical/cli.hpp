#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "tropical/scalar.hpp"
#include "tropical/solve.hpp"

namespace trop::cli {

enum class Command { Det, Adj, Pinv, Solve, Reduce, Check };
enum class OutputFormat { Text, Structured };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnsolved = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDetNotUnit = 3;

struct CliConfig {
	Command command = Command::Solve;
	Semiring semiring = Semiring::max_plus();
	/// Empty means read the input stream passed to run().
	std::string input_path;
	OutputFormat format = OutputFormat::Text;
	bool reduce_first = false;
	bool verbose = false;
};

std::optional<Command> command_from_name(std::string_view name);

/// 0 for MaximalSolution, 1 for ConditionsViolated, 3 for DetNotUnit.
int exit_code(const SolveReport& report);

/// Runs one command and returns the process exit status: 0 success, 1 no
/// solution (violated conditions or inconsistent reduction), 2 input error,
/// 3 determinant not a unit.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace trop::cli
