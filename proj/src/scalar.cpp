#include "tropical/scalar.hpp"

#include <cctype>
#include <utility>

namespace trop {

Scalar::Scalar(mpq_class value) : value_(std::move(value))
{
	value_->canonicalize();
}

Scalar Scalar::rational(long num, long den)
{
	if (den == 0)
		throw Error(ErrorKind::Value, "zero denominator");
	return Scalar(mpq_class(num, den));
}

const mpq_class& Scalar::value() const
{
	if (!value_)
		throw Error(ErrorKind::NotAUnit, "neutral element has no finite value");
	return *value_;
}

bool operator==(const Scalar& a, const Scalar& b)
{
	if (a.is_neutral() || b.is_neutral())
		return a.is_neutral() == b.is_neutral();
	return *a.value_ == *b.value_;
}

std::string_view Semiring::name() const noexcept
{
	switch (kind_) {
	case SemiringKind::MaxPlus: return "max-plus";
	case SemiringKind::MinPlus: return "min-plus";
	case SemiringKind::MaxTimes: return "max-times";
	case SemiringKind::MinTimes: return "min-times";
	}
	return "max-plus";
}

bool Semiring::is_valid(const Scalar& a) const
{
	if (a.is_neutral() || additive())
		return true;
	return sgn(a.value()) > 0;
}

Scalar Semiring::one() const
{
	return Scalar(additive() ? 0 : 1);
}

Scalar Semiring::add(const Scalar& a, const Scalar& b) const
{
	if (a.is_neutral())
		return b;
	if (b.is_neutral())
		return a;
	if (numeric_max())
		return a.value() >= b.value() ? a : b;
	return a.value() <= b.value() ? a : b;
}

Scalar Semiring::mul(const Scalar& a, const Scalar& b) const
{
	if (a.is_neutral() || b.is_neutral())
		return Scalar::neutral();
	if (additive())
		return Scalar(mpq_class(a.value() + b.value()));
	return Scalar(mpq_class(a.value() * b.value()));
}

Scalar Semiring::inv(const Scalar& a) const
{
	if (a.is_neutral())
		throw Error(ErrorKind::NotAUnit, "the neutral element has no multiplicative inverse");
	if (additive())
		return Scalar(mpq_class(-a.value()));
	return Scalar(mpq_class(1 / a.value()));
}

Scalar Semiring::div(const Scalar& a, const Scalar& b) const
{
	if (b.is_neutral())
		throw Error(ErrorKind::NotAUnit, "division by the neutral element");
	if (a.is_neutral())
		return a;
	if (additive())
		return Scalar(mpq_class(a.value() - b.value()));
	return Scalar(mpq_class(a.value() / b.value()));
}

Scalar Semiring::pow(const Scalar& a, unsigned n) const
{
	Scalar out = one();
	for (unsigned k = 0; k < n; ++k)
		out = mul(out, a);
	return out;
}

bool Semiring::leq(const Scalar& a, const Scalar& b) const
{
	if (a.is_neutral())
		return true;
	if (b.is_neutral())
		return false;
	return numeric_max() ? a.value() <= b.value() : a.value() >= b.value();
}

Scalar Semiring::meet(const Scalar& a, const Scalar& b) const
{
	return leq(a, b) ? a : b;
}

std::optional<Semiring> semiring_from_name(std::string_view name)
{
	if (name == "max-plus")
		return Semiring::max_plus();
	if (name == "min-plus")
		return Semiring::min_plus();
	if (name == "max-times")
		return Semiring::max_times();
	if (name == "min-times")
		return Semiring::min_times();
	return std::nullopt;
}

Scalar EpsFunction::apply(const Scalar& a) const
{
	return a;
}

Scalar EpsFunction::power(unsigned k, const Scalar& a) const
{
	// Involutive: only the parity of k matters.
	return k % 2 == 0 ? a : apply(a);
}

std::string_view neutral_token(Semiring s)
{
	switch (s.kind()) {
	case SemiringKind::MaxPlus: return "-inf";
	case SemiringKind::MinPlus: return "inf";
	case SemiringKind::MaxTimes: return "0";
	case SemiringKind::MinTimes: return "inf";
	}
	return "-inf";
}

namespace {

bool is_neutral_token(std::string_view token, Semiring s)
{
	switch (s.kind()) {
	case SemiringKind::MaxPlus: return token == "-inf";
	case SemiringKind::MaxTimes: return token == "0" || token == "-inf";
	case SemiringKind::MinPlus:
	case SemiringKind::MinTimes: return token == "inf" || token == "+inf";
	}
	return false;
}

bool all_digits(std::string_view s)
{
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

// Parses [+-]?digits, [+-]?digits/digits or [+-]?digits.digits into an exact
// rational. Returns nullopt when the token is not a number.
std::optional<mpq_class> parse_number(std::string_view token)
{
	std::string_view body = token;
	bool negative = false;
	if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
		negative = body.front() == '-';
		body.remove_prefix(1);
	}
	if (body.empty())
		return std::nullopt;

	mpq_class out;
	if (auto slash = body.find('/'); slash != std::string_view::npos) {
		auto num = body.substr(0, slash);
		auto den = body.substr(slash + 1);
		if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den))
			return std::nullopt;
		mpz_class d{std::string(den)};
		if (d == 0)
			return std::nullopt;
		out = mpq_class(mpz_class(std::string(num)), d);
	}
	else if (auto dot = body.find('.'); dot != std::string_view::npos) {
		auto whole = body.substr(0, dot);
		auto frac = body.substr(dot + 1);
		if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac))
			return std::nullopt;
		mpz_class scale;
		mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
		out = mpq_class(mpz_class(std::string(whole) + std::string(frac)), scale);
	}
	else {
		if (!all_digits(body))
			return std::nullopt;
		out = mpq_class(mpz_class(std::string(body)));
	}
	out.canonicalize();
	if (negative)
		out = -out;
	return out;
}

} // namespace

Scalar parse_scalar(std::string_view token, Semiring s)
{
	if (is_neutral_token(token, s))
		return Scalar::neutral();
	auto number = parse_number(token);
	if (!number) {
		if (token == "-inf" || token == "inf" || token == "+inf")
			throw Error(ErrorKind::Value, "token '" + std::string(token) + "' is not an element of " +
			                                  std::string(s.name()));
		throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(token) + "'");
	}
	Scalar out(*number);
	if (!s.is_valid(out))
		throw Error(ErrorKind::Value, "value '" + std::string(token) + "' is not an element of " +
		                                  std::string(s.name()));
	return out;
}

std::string format_scalar(const Scalar& a, Semiring s)
{
	if (a.is_neutral())
		return std::string(neutral_token(s));
	return a.value().get_str();
}

} // namespace trop
