#include "tropical/error.hpp"

namespace trop {

std::string_view to_string(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::ShapeMismatch: return "ShapeMismatch";
	case ErrorKind::NotAUnit: return "NotAUnit";
	case ErrorKind::DetNotUnit: return "DetNotUnit";
	case ErrorKind::SizeExceeded: return "SizeExceeded";
	case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
	case ErrorKind::EmptySystem: return "EmptySystem";
	case ErrorKind::NotRegular: return "NotRegular";
	case ErrorKind::InconsistentSystem: return "InconsistentSystem";
	case ErrorKind::InvalidArgument: return "InvalidArgument";
	case ErrorKind::Parse: return "ParseError";
	case ErrorKind::Value: return "ValueError";
	}
	return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what), kind_(kind), line_(line), column_(column)
{
}

} // namespace trop
