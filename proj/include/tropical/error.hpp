#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trop {

enum class ErrorKind {
	ShapeMismatch,
	NotAUnit,
	DetNotUnit,
	SizeExceeded,
	IndexOutOfRange,
	EmptySystem,
	NotRegular,
	InconsistentSystem,
	InvalidArgument,
	Parse,
	Value,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported as an Error carrying
/// its kind. Parse errors also carry a 1-based line and column (0 when not
/// applicable).
class Error : public std::runtime_error {
public:
	Error(ErrorKind kind, const std::string& what, std::size_t line = 0, std::size_t column = 0);

	ErrorKind kind() const noexcept { return kind_; }
	std::size_t line() const noexcept { return line_; }
	std::size_t column() const noexcept { return column_; }

private:
	ErrorKind kind_;
	std::size_t line_;
	std::size_t column_;
};

} // namespace trop
