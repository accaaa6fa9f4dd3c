#include "burnoff/bigint.hpp"

#include "burnoff/errors.hpp"

#include <string>

namespace burnoff {

namespace {

/* Divides out every factor f from x; returns how many were removed. */
int strip_factor(BigInt& x, unsigned long f) {
    int count = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), f)) {
        mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), f);
        ++count;
    }
    return count;
}

std::string digits_with_point(const BigInt& digits, long point_from_right) {
    std::string s = digits.get_str();
    if (point_from_right <= 0) {
        s.append(static_cast<std::size_t>(-point_from_right), '0');
        return s;
    }
    if (static_cast<long>(s.size()) <= point_from_right)
        s.insert(0, static_cast<std::size_t>(point_from_right) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<std::size_t>(point_from_right), ".");
    /* drop trailing zeros in the fractional part, then a bare point */
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

} // namespace

std::string decimal_string(const Rational& value, int sig_digits) {
    if (sig_digits < 1) throw precondition_error("sig_digits must be positive");
    if (sgn(value) < 0) throw precondition_error("decimal_string expects a nonnegative value");
    if (sgn(value) == 0) return "0";

    BigInt num = value.get_num();
    BigInt den = value.get_den();

    BigInt rest = den;
    const int twos = strip_factor(rest, 2);
    const int fives = strip_factor(rest, 5);
    if (rest == 1) {
        /* terminating expansion: num/den * 10^k is an integer for
         * k = max(twos, fives) */
        const int k = std::max(twos, fives);
        BigInt scaled = num;
        BigInt pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(k));
        scaled *= pow10;
        mpz_divexact(scaled.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
        return digits_with_point(scaled, k);
    }

    /* non-terminating: round to sig_digits significant digits. First find
     * the decimal exponent e with 10^e <= value < 10^(e+1). */
    long e = 0;
    BigInt ten_num = num, ten_den = den;
    if (num >= den) {
        while (ten_num >= 10 * ten_den) {
            ten_den *= 10;
            ++e;
        }
    } else {
        while (ten_num < ten_den) {
            ten_num *= 10;
            --e;
        }
    }

    /* digits = round(value / 10^(e - sig_digits + 1)), in [10^(d-1), 10^d] */
    const long shift = e - sig_digits + 1;
    BigInt scaled_num = num, scaled_den = den;
    if (shift <= 0) {
        BigInt pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        scaled_num *= pow10;
    } else {
        BigInt pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        scaled_den *= pow10;
    }
    BigInt digits, rem;
    mpz_fdiv_qr(digits.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(),
                scaled_den.get_mpz_t());
    if (2 * rem >= scaled_den) ++digits;

    long exponent = e;
    {
        /* rounding can carry into one more digit (e.g. 999999.5 -> 1000000) */
        BigInt cap;
        mpz_ui_pow_ui(cap.get_mpz_t(), 10, static_cast<unsigned long>(sig_digits));
        if (digits >= cap) {
            mpz_divexact_ui(digits.get_mpz_t(), digits.get_mpz_t(), 10);
            ++exponent;
        }
    }

    if (exponent >= -4 && exponent <= 8)
        return digits_with_point(digits, sig_digits - 1 - exponent);

    /* scientific notation: d.ddddd e exponent */
    std::string mant = digits_with_point(digits, sig_digits - 1);
    return mant + "e" + std::to_string(exponent);
}

} // namespace burnoff
