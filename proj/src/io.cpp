#include "tropical/io.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <sstream>

namespace trop {

namespace {

struct Token {
	std::string_view text;
	std::size_t column;
};

struct Line {
	std::size_t number;
	std::vector<Token> tokens;
};

std::vector<Token> tokenize(std::string_view line)
{
	if (auto hash = line.find('#'); hash != std::string_view::npos)
		line = line.substr(0, hash);
	std::vector<Token> out;
	std::size_t k = 0;
	while (k < line.size()) {
		while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k])))
			++k;
		const auto start = k;
		while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k])))
			++k;
		if (k > start)
			out.push_back({line.substr(start, k - start), start + 1});
	}
	return out;
}

// Groups non-blank lines into blocks separated by blank lines.
std::vector<std::vector<Line>> blocks_of(std::string_view text)
{
	std::vector<std::vector<Line>> blocks;
	bool in_block = false;
	std::size_t number = 0;
	while (!text.empty() || number == 0) {
		++number;
		const auto end = text.find('\n');
		auto raw = text.substr(0, end);
		text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
		auto tokens = tokenize(raw);
		if (tokens.empty()) {
			in_block = false;
		}
		else {
			if (!in_block)
				blocks.emplace_back();
			blocks.back().push_back({number, std::move(tokens)});
			in_block = true;
		}
		if (text.empty())
			break;
	}
	return blocks;
}

Scalar scalar_at(const Token& token, std::size_t line, Semiring s)
{
	try {
		return parse_scalar(token.text, s);
	}
	catch (const Error& e) {
		throw Error(e.kind(), e.what(), line, token.column);
	}
}

Matrix matrix_of(const std::vector<Line>& block, Semiring s)
{
	const auto cols = block.front().tokens.size();
	std::vector<Scalar> entries;
	entries.reserve(block.size() * cols);
	for (const auto& line : block) {
		if (line.tokens.size() != cols)
			throw Error(ErrorKind::ShapeMismatch,
			            "row has " + std::to_string(line.tokens.size()) + " entries, expected " + std::to_string(cols),
			            line.number, line.tokens.front().column);
		for (const auto& token : line.tokens)
			entries.push_back(scalar_at(token, line.number, s));
	}
	return Matrix(s, block.size(), cols, std::move(entries));
}

nlohmann::json indices_to_json(const std::vector<std::size_t>& indices)
{
	auto out = nlohmann::json::array();
	for (auto k : indices)
		out.push_back(k + 1);
	return out;
}

template <class T, class F>
nlohmann::json optional_to_json(const std::optional<T>& value, F convert)
{
	return value ? convert(*value) : nlohmann::json(nullptr);
}

nlohmann::json combinations_to_json(const std::vector<Combination>& combos, Semiring s)
{
	auto out = nlohmann::json::array();
	for (const auto& c : combos) {
		auto coefficients = nlohmann::json::array();
		for (const auto& x : c.coefficients)
			coefficients.push_back(format_scalar(x, s));
		out.push_back({{"index", c.index + 1}, {"coefficients", coefficients}});
	}
	return out;
}

} // namespace

System parse_system(std::string_view text, Semiring s)
{
	const auto blocks = blocks_of(text);
	if (blocks.empty())
		throw Error(ErrorKind::Parse, "empty input", 1, 1);
	if (blocks.size() > 2)
		throw Error(ErrorKind::Parse, "expected a matrix and at most one right-hand side", blocks[2].front().number, 1);

	System out{matrix_of(blocks[0], s), std::nullopt};
	if (blocks.size() == 2) {
		const auto& rhs = blocks[1];
		if (rhs.size() != 1)
			throw Error(ErrorKind::Parse, "right-hand side must be a single line", rhs[1].number, 1);
		const auto& line = rhs.front();
		if (line.tokens.size() != out.a.rows())
			throw Error(ErrorKind::ShapeMismatch,
			            "right-hand side has " + std::to_string(line.tokens.size()) + " entries, expected " +
			                std::to_string(out.a.rows()),
			            line.number, line.tokens.front().column);
		std::vector<Scalar> b;
		for (const auto& token : line.tokens)
			b.push_back(scalar_at(token, line.number, s));
		out.b = Matrix::column(s, std::move(b));
	}
	return out;
}

System parse_system(std::istream& in, Semiring s)
{
	std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
	return parse_system(text, s);
}

Matrix parse_matrix(std::string_view text, Semiring s)
{
	auto system = parse_system(text, s);
	if (system.b)
		throw Error(ErrorKind::Parse, "expected a single matrix block");
	return std::move(system.a);
}

Matrix parse_vector(std::string_view text, Semiring s)
{
	auto row = parse_matrix(text, s);
	if (row.rows() != 1)
		throw Error(ErrorKind::Parse, "expected a single line");
	return transpose(row);
}

std::string format_matrix(const Matrix& a)
{
	const auto s = a.semiring();
	std::vector<std::string> cells;
	std::vector<std::size_t> width(a.cols(), 0);
	for (std::size_t i = 0; i < a.rows(); ++i) {
		for (std::size_t j = 0; j < a.cols(); ++j) {
			cells.push_back(format_scalar(a(i, j), s));
			width[j] = std::max(width[j], cells.back().size());
		}
	}
	std::string out;
	for (std::size_t i = 0; i < a.rows(); ++i) {
		for (std::size_t j = 0; j < a.cols(); ++j) {
			const auto& cell = cells[i * a.cols() + j];
			if (j > 0)
				out += ' ';
			out.append(width[j] - cell.size(), ' ');
			out += cell;
		}
		out += '\n';
	}
	return out;
}

std::string format_vector(const Matrix& v)
{
	std::string out;
	for (std::size_t k = 0; k < v.size(); ++k) {
		if (k > 0)
			out += ' ';
		out += format_scalar(v[k], v.semiring());
	}
	return out;
}

std::string_view to_string(SolveStatus status)
{
	switch (status) {
	case SolveStatus::MaximalSolution: return "MaximalSolution";
	case SolveStatus::ConditionsViolated: return "ConditionsViolated";
	case SolveStatus::DetNotUnit: return "DetNotUnit";
	}
	return "Unknown";
}

std::string_view to_string(SystemShape shape)
{
	switch (shape) {
	case SystemShape::Square: return "square";
	case SystemShape::Wide: return "wide";
	case SystemShape::Tall: return "tall";
	}
	return "unknown";
}

nlohmann::json to_json(const Matrix& a)
{
	auto out = nlohmann::json::array();
	for (std::size_t i = 0; i < a.rows(); ++i) {
		auto row = nlohmann::json::array();
		for (std::size_t j = 0; j < a.cols(); ++j)
			row.push_back(format_scalar(a(i, j), a.semiring()));
		out.push_back(std::move(row));
	}
	return out;
}

nlohmann::json vector_to_json(const Matrix& v)
{
	auto out = nlohmann::json::array();
	for (std::size_t k = 0; k < v.size(); ++k)
		out.push_back(format_scalar(v[k], v.semiring()));
	return out;
}

nlohmann::json to_json(const DetResult& det, Semiring s)
{
	auto witness = nlohmann::json::array();
	for (auto k : det.witness.images())
		witness.push_back(k + 1);
	return {
	    {"det", format_scalar(det.value, s)},
	    {"witness", witness},
	    {"parity", det.parity == Parity::Even ? "even" : "odd"},
	};
}

nlohmann::json to_json(const std::vector<Violation>& violations, Semiring s)
{
	auto out = nlohmann::json::array();
	for (const auto& v : violations)
		out.push_back({
		    {"i", v.i + 1},
		    {"j", v.j + 1},
		    {"lhs", format_scalar(v.lhs, s)},
		    {"rhs", format_scalar(v.rhs, s)},
		});
	return out;
}

nlohmann::json to_json(const SolveReport& r)
{
	auto matrix = [](const Matrix& m) { return to_json(m); };
	auto vector = [](const Matrix& m) { return vector_to_json(m); };
	// Only the matrices know the semiring; violations exist only when the
	// gram matrix does.
	const auto s = r.gram ? r.gram->semiring() : Semiring::max_plus();
	return {
	    {"status", to_string(r.status)},
	    {"shape", to_string(r.shape)},
	    {"x_star", optional_to_json(r.x_star, vector)},
	    {"candidate", optional_to_json(r.candidate, vector)},
	    {"residual", optional_to_json(r.residual, vector)},
	    {"a_pinv", optional_to_json(r.a_pinv, matrix)},
	    {"gram", optional_to_json(r.gram, matrix)},
	    {"square_matrix", optional_to_json(r.square_matrix, matrix)},
	    {"square_rhs", optional_to_json(r.square_rhs, vector)},
	    {"y_star", optional_to_json(r.y_star, vector)},
	    {"violations", to_json(r.violations, s)},
	    {"unique", r.unique ? nlohmann::json(*r.unique) : nlohmann::json(nullptr)},
	    {"maximal", r.maximal},
	    {"not_a_solution", r.not_a_solution},
	    {"inconsistent", r.inconsistent},
	    {"system_rows", indices_to_json(r.system_rows)},
	    {"system_cols", indices_to_json(r.system_cols)},
	    {"forced", indices_to_json(r.forced)},
	};
}

nlohmann::json to_json(const Reduction& reduction, Semiring s)
{
	return {
	    {"kept", indices_to_json(reduction.kept)},
	    {"removed", combinations_to_json(reduction.removed, s)},
	};
}

nlohmann::json to_json(const ReducedSystem& r)
{
	const auto s = r.a_bar.semiring();
	return {
	    {"kept_rows", indices_to_json(r.kept_rows)},
	    {"kept_cols", indices_to_json(r.kept_cols)},
	    {"eta", combinations_to_json(r.eta, s)},
	    {"xi", combinations_to_json(r.xi, s)},
	    {"a_bar", to_json(r.a_bar)},
	    {"b_bar", vector_to_json(r.b_bar)},
	    {"consistent", r.consistent},
	};
}

} // namespace trop
