#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rnnfsm {

// All weights flow through the toolkit as exact arbitrary-precision
// rationals. mpq_class keeps values reduced with a positive denominator
// under arithmetic, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact value or comparison could not be produced and the interval
// fallback could not separate it at the configured precision.
class ExactnessUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A declared-consistent model accumulated strictly more than unit mass.
class InconsistencyDetected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses "p/q" or "p" with optional sign. The denominator must be positive
// and nonzero; the result is stored reduced.
Rational parse_rational(std::string_view text);

// Formats as "p/q", omitting "/q" when the denominator is 1.
std::string format_rational(const Rational& value);

Rational pow_rational(const Rational& base, unsigned long exponent);

// 2^exponent for any (possibly negative) integer exponent.
Rational pow2(long exponent);

// log2 of the value when it is an exact integer power of two.
std::optional<long> log2_exact(const Rational& value);

bool is_integer(const Rational& value);

Rational abs_rational(const Rational& value);

}  // namespace rnnfsm
