#include "rnnfsm/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace rnnfsm {

Interval::Interval(Rational lo, Rational hi, unsigned bits)
    : lower(std::move(lo)), upper(std::move(hi)), precision_bits(bits) {
    if (lower > upper) {
        throw std::invalid_argument("interval endpoints out of order");
    }
}

Interval Interval::point(Rational value) {
    Interval result;
    result.lower = value;
    result.upper = std::move(value);
    return result;
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lower + b.lower, a.upper + b.upper,
                    std::max(a.precision_bits, b.precision_bits));
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lower - b.upper, a.upper - b.lower,
                    std::max(a.precision_bits, b.precision_bits));
}

Interval operator*(const Interval& a, const Interval& b) {
    const Rational p1 = a.lower * b.lower;
    const Rational p2 = a.lower * b.upper;
    const Rational p3 = a.upper * b.lower;
    const Rational p4 = a.upper * b.upper;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                    std::max(std::max(p1, p2), std::max(p3, p4)),
                    std::max(a.precision_bits, b.precision_bits));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.lower <= 0 && b.upper >= 0) {
        throw std::domain_error("interval division by an interval containing zero");
    }
    const Interval reciprocal(1 / b.upper, 1 / b.lower, b.precision_bits);
    return a * reciprocal;
}

Interval abs_interval(const Interval& a) {
    if (a.lower >= 0) {
        return a;
    }
    if (a.upper <= 0) {
        return Interval(-a.upper, -a.lower, a.precision_bits);
    }
    return Interval(Rational(0), std::max(Rational(-a.lower), a.upper), a.precision_bits);
}

std::optional<bool> interval_greater_than(const Interval& a, const Rational& threshold) {
    if (a.lower > threshold) {
        return true;
    }
    if (a.upper <= threshold) {
        return false;
    }
    return std::nullopt;
}

std::optional<bool> interval_greater_equal(const Interval& a, const Rational& threshold) {
    if (a.lower >= threshold) {
        return true;
    }
    if (a.upper < threshold) {
        return false;
    }
    return std::nullopt;
}

Interval pow2_enclosure(const Rational& exponent, unsigned precision_bits) {
    const Integer& p = exponent.get_num();
    const Integer& q = exponent.get_den();
    if (q == 1) {
        if (!p.fits_slong_p()) {
            throw std::overflow_error("pow2 exponent too large");
        }
        return Interval::point(pow2(p.get_si()));
    }

    // Effective denominator exponent: large enough that q*B + p >= 0.
    Integer shift = precision_bits;
    if (p < 0) {
        Integer bump;
        mpz_cdiv_q(bump.get_mpz_t(), Integer(-p).get_mpz_t(), q.get_mpz_t());
        shift += bump;
    }
    const Integer e = shift * q + p;
    if (!e.fits_ulong_p() || !q.fits_ulong_p() || !shift.fits_ulong_p()) {
        throw std::overflow_error("pow2 enclosure exponent too large");
    }

    // root = floor((2^e)^(1/q)) gives floor(2^(p/q) * 2^shift) exactly.
    Integer power_of_two = 1;
    mpz_mul_2exp(power_of_two.get_mpz_t(), power_of_two.get_mpz_t(), e.get_ui());
    Integer root, remainder;
    mpz_rootrem(root.get_mpz_t(), remainder.get_mpz_t(), power_of_two.get_mpz_t(), q.get_ui());

    Integer denominator = 1;
    mpz_mul_2exp(denominator.get_mpz_t(), denominator.get_mpz_t(), shift.get_ui());
    Rational lower(root, denominator);
    lower.canonicalize();
    if (remainder == 0) {
        return Interval(lower, lower, precision_bits);
    }
    Rational upper(root + 1, denominator);
    upper.canonicalize();
    return Interval(std::move(lower), std::move(upper), precision_bits);
}

}  // namespace rnnfsm
