#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hofseq {

/// Arbitrary-precision natural number (always used with non-negative values).
using BigNat = mpz_class;
/// Arbitrary-precision signed integer.
using BigInt = mpz_class;
/// Exact rational number.
using Rational = mpq_class;

inline int sign_of(const BigInt& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sign_of(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

inline bool fits_uint64(const BigNat& n) {
  return mpz_sgn(n.get_mpz_t()) >= 0 && mpz_fits_ulong_p(n.get_mpz_t());
}

inline std::uint64_t to_uint64(const BigNat& n) {
  if (!fits_uint64(n)) throw std::overflow_error("BigNat does not fit in 64 bits");
  return mpz_get_ui(n.get_mpz_t());
}

inline BigNat pow_uint(const BigNat& base, unsigned long e) {
  BigNat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigNat pow10(unsigned long e) { return pow_uint(BigNat(10), e); }

/// 2^e as an exact rational, e may be negative.
Rational pow2_rational(long e);

/// Parses "42", "-3/7", "0.25", "1.5e-40" into an exact rational.
Rational parse_rational(const std::string& text);

enum class RoundDir { Down, Up, Nearest };

/// Decimal scientific rendering ("d.ddd...e±k") of an exact rational with
/// `digits` significant digits and an explicit rounding direction.
/// Down/Up refer to the numeric order (toward -inf / +inf).
std::string decimal_string(const Rational& q, std::size_t digits, RoundDir dir);

}  // namespace hofseq
