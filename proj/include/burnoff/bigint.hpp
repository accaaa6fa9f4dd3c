#ifndef BURNOFF_BIGINT_HPP
#define BURNOFF_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace burnoff {

/// Arbitrary-precision integer. Spanning-tree counts grow like n^(n-2), so
/// every counting result in the library uses this type, never a fixed width.
using BigInt = mpz_class;

/// Exact rational, always kept in canonical (reduced) form by GMP.
using Rational = mpq_class;

/// Render a nonnegative rational in decimal: exact digits when the reduced
/// denominator is of the form 2^a * 5^b (terminating expansion), otherwise
/// rounded to `sig_digits` significant digits (round half away from zero).
/// Plain fixed-point notation for magnitudes between 1e-4 and 1e9, scientific
/// notation ("1.23456e-7") outside that window.
std::string decimal_string(const Rational& value, int sig_digits = 6);

} // namespace burnoff

#endif
