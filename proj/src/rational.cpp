#include "rnnfsm/rational.hpp"

namespace rnnfsm {

Rational parse_rational(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }
    const auto slash = text.find('/');
    const std::string num(text.substr(0, slash));
    std::string den = "1";
    if (slash != std::string_view::npos) {
        den = std::string(text.substr(slash + 1));
        if (den.empty() || num.empty()) {
            throw ParseError("malformed rational literal: '" + std::string(text) + "'");
        }
    }
    Integer n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
        throw ParseError("malformed rational literal: '" + std::string(text) + "'");
    }
    if (d <= 0) {
        throw ParseError("denominator must be positive in '" + std::string(text) + "'");
    }
    Rational result(n, d);
    result.canonicalize();
    return result;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow_rational(const Rational& base, unsigned long exponent) {
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    // base is canonical, so num^k / den^k already is.
    return result;
}

Rational pow2(long exponent) {
    Rational result = 1;
    if (exponent >= 0) {
        mpz_mul_2exp(result.get_num_mpz_t(), result.get_num_mpz_t(),
                     static_cast<unsigned long>(exponent));
    } else {
        mpz_mul_2exp(result.get_den_mpz_t(), result.get_den_mpz_t(),
                     static_cast<unsigned long>(-exponent));
    }
    return result;
}

std::optional<long> log2_exact(const Rational& value) {
    if (value <= 0) {
        return std::nullopt;
    }
    const Integer& num = value.get_num();
    const Integer& den = value.get_den();
    if (num == 1) {
        // 1 / 2^k
        const auto bits = mpz_sizeinbase(den.get_mpz_t(), 2);
        if (mpz_scan1(den.get_mpz_t(), 0) == bits - 1) {
            return -static_cast<long>(bits - 1);
        }
        return std::nullopt;
    }
    if (den == 1) {
        const auto bits = mpz_sizeinbase(num.get_mpz_t(), 2);
        if (mpz_scan1(num.get_mpz_t(), 0) == bits - 1) {
            return static_cast<long>(bits - 1);
        }
        return std::nullopt;
    }
    return std::nullopt;
}

bool is_integer(const Rational& value) {
    return value.get_den() == 1;
}

Rational abs_rational(const Rational& value) {
    return value < 0 ? Rational(-value) : value;
}

}  // namespace rnnfsm
