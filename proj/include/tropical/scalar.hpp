#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "tropical/error.hpp"

namespace trop {

/// Element of a tropical semifield: either the additive identity (the
/// "neutral" element, e.g. -inf in max-plus) or a finite exact rational.
class Scalar {
public:
	/// Constructs the neutral element.
	Scalar() = default;
	explicit Scalar(mpq_class value);
	Scalar(long value) : Scalar(mpq_class(value)) {}
	Scalar(int value) : Scalar(mpq_class(value)) {}

	static Scalar neutral() { return Scalar(); }
	/// Exact rational num/den; den must be nonzero.
	static Scalar rational(long num, long den);

	bool is_neutral() const noexcept { return !value_.has_value(); }
	bool is_finite() const noexcept { return value_.has_value(); }

	/// Payload of a finite scalar. Throws NotAUnit on the neutral element.
	const mpq_class& value() const;

	friend bool operator==(const Scalar& a, const Scalar& b);

private:
	std::optional<mpq_class> value_;
};

enum class SemiringKind { MaxPlus, MinPlus, MaxTimes, MinTimes };

/// One of the four idempotent semifields. Addition is max or min, product is
/// + or x. The natural order is a <= b iff a (+) b == b, so for the min
/// variants it is the reverse of the numeric order on finite values and the
/// neutral element is always the bottom.
class Semiring {
public:
	constexpr Semiring() = default;
	constexpr explicit Semiring(SemiringKind kind) : kind_(kind) {}

	static constexpr Semiring max_plus() { return Semiring(SemiringKind::MaxPlus); }
	static constexpr Semiring min_plus() { return Semiring(SemiringKind::MinPlus); }
	static constexpr Semiring max_times() { return Semiring(SemiringKind::MaxTimes); }
	static constexpr Semiring min_times() { return Semiring(SemiringKind::MinTimes); }

	constexpr SemiringKind kind() const noexcept { return kind_; }
	std::string_view name() const noexcept;

	/// Finite payloads must be strictly positive for the multiplicative kinds.
	bool is_valid(const Scalar& a) const;

	Scalar zero() const { return Scalar::neutral(); }
	Scalar one() const;

	Scalar add(const Scalar& a, const Scalar& b) const;
	Scalar mul(const Scalar& a, const Scalar& b) const;
	/// Multiplicative inverse; throws NotAUnit for the neutral element.
	Scalar inv(const Scalar& a) const;
	/// a (x) inv(b).
	Scalar div(const Scalar& a, const Scalar& b) const;
	/// a (x) a (x) ... (n factors); pow(a, 0) is one().
	Scalar pow(const Scalar& a, unsigned n) const;

	bool leq(const Scalar& a, const Scalar& b) const;
	bool less(const Scalar& a, const Scalar& b) const { return !leq(b, a); }
	/// Greatest lower bound in the natural order.
	Scalar meet(const Scalar& a, const Scalar& b) const;

	friend constexpr bool operator==(Semiring a, Semiring b) { return a.kind_ == b.kind_; }

private:
	constexpr bool numeric_max() const noexcept
	{
		return kind_ == SemiringKind::MaxPlus || kind_ == SemiringKind::MaxTimes;
	}
	constexpr bool additive() const noexcept
	{
		return kind_ == SemiringKind::MaxPlus || kind_ == SemiringKind::MinPlus;
	}

	SemiringKind kind_ = SemiringKind::MaxPlus;
};

std::optional<Semiring> semiring_from_name(std::string_view name);

/// Involutive map used by the epsilon-determinant. Only the identity is
/// provided.
class EpsFunction {
public:
	enum class Kind { Identity };

	constexpr EpsFunction() = default;
	static constexpr EpsFunction identity() { return EpsFunction(); }

	constexpr Kind kind() const noexcept { return kind_; }
	Scalar apply(const Scalar& a) const;
	/// The k-fold composition.
	Scalar power(unsigned k, const Scalar& a) const;

private:
	Kind kind_ = Kind::Identity;
};

/// Text form of a scalar: integers, `a/b` rationals, decimals like `2.5`,
/// and the neutral token of the semiring (`-inf` for max-plus, `inf` for the
/// min kinds, `0` for max-times). Throws Parse for malformed tokens and Value
/// for well-formed numbers that are not elements of `s`.
Scalar parse_scalar(std::string_view token, Semiring s);
std::string format_scalar(const Scalar& a, Semiring s);
std::string_view neutral_token(Semiring s);

} // namespace trop
