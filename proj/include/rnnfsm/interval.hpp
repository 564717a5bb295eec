#pragma once

#include <optional>

#include "rnnfsm/rational.hpp"

namespace rnnfsm {

// Closed interval with exact rational endpoints. Endpoint arithmetic is
// itself exact; width only ever enters through pow2_enclosure on a
// non-integer exponent.
struct Interval {
    Rational lower;
    Rational upper;
    unsigned precision_bits = 0;

    Interval() = default;
    Interval(Rational lo, Rational hi, unsigned bits = 0);

    static Interval point(Rational value);

    bool is_point() const { return lower == upper; }
    Rational width() const { return upper - lower; }
    bool contains(const Rational& value) const { return lower <= value && value <= upper; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// Divisor must not contain zero.
Interval operator/(const Interval& a, const Interval& b);

Interval abs_interval(const Interval& a);

// nullopt when the interval straddles the threshold.
std::optional<bool> interval_greater_than(const Interval& a, const Rational& threshold);
std::optional<bool> interval_greater_equal(const Interval& a, const Rational& threshold);

// Certified enclosure of 2^x. Exact (a point) when x is an integer; otherwise
// a dyadic enclosure of width 2^-precision_bits that narrows monotonically as
// precision_bits grows.
Interval pow2_enclosure(const Rational& exponent, unsigned precision_bits);

}  // namespace rnnfsm
