#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "tropical/cli.hpp"

int main(int argc, char** argv)
{
	using namespace trop::cli;

	CLI::App app{"Solve linear systems over tropical semifields"};
	app.set_version_flag("--version", "tropsolve 0.1.0");

	std::string command;
	std::string semiring = "max-plus";
	std::string format = "text";
	CliConfig config;

	app.add_option("command", command, "det | adj | pinv | solve | reduce | check")
	    ->required()
	    ->check(CLI::IsMember({"det", "adj", "pinv", "solve", "reduce", "check"}));
	app.add_option("--semiring", semiring, "Scalar semiring")
	    ->check(CLI::IsMember({"max-plus", "min-plus", "max-times", "min-times"}))
	    ->capture_default_str();
	app.add_option("--format", format, "Output format")
	    ->check(CLI::IsMember({"text", "structured"}))
	    ->capture_default_str();
	app.add_option("--input", config.input_path, "System file (default: standard input)");
	app.add_flag("--reduce-first", config.reduce_first, "Remove dependent rows and columns before solving");
	app.add_flag("--verbose", config.verbose, "Print intermediate matrices and cross-checks");

	try {
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : kExitInput;
	}

	config.command = *command_from_name(command);
	config.semiring = *trop::semiring_from_name(semiring);
	config.format = format == "structured" ? OutputFormat::Structured : OutputFormat::Text;
	return run(config, std::cin, std::cout, std::cerr);
}
