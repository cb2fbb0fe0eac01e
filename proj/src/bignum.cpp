#include "hofseq/bignum.hpp"

#include <cctype>

namespace hofseq {

Rational pow2_rational(long e) {
  Rational r;
  if (e >= 0) {
    mpq_set_ui(r.get_mpq_t(), 1, 1);
    mpz_mul_2exp(mpq_numref(r.get_mpq_t()), mpq_numref(r.get_mpq_t()),
                 static_cast<unsigned long>(e));
  } else {
    mpq_set_ui(r.get_mpq_t(), 1, 1);
    mpz_mul_2exp(mpq_denref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()),
                 static_cast<unsigned long>(-e));
  }
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (text.find('/') != std::string::npos) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
      throw std::invalid_argument("bad rational literal: " + text);
    mpq_canonicalize(q.get_mpq_t());
    if (sign_of(Rational(q)) != 0 && mpz_sgn(mpq_denref(q.get_mpq_t())) <= 0)
      throw std::invalid_argument("bad rational literal: " + text);
    return q;
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = (text[i] == '-');
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.'); ++i) {
    if (text[i] == '.') {
      if (seen_dot) throw std::invalid_argument("bad rational literal: " + text);
      seen_dot = true;
    } else {
      digits.push_back(text[i]);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad rational literal: " + text);
  long exp10 = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E')
      throw std::invalid_argument("bad rational literal: " + text);
    exp10 = std::stol(text.substr(i + 1));
  }

  BigInt mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long e = exp10 - frac_digits;
  Rational q(mantissa);
  if (e >= 0)
    q *= Rational(pow10(static_cast<unsigned long>(e)));
  else
    q /= Rational(pow10(static_cast<unsigned long>(-e)));
  mpq_canonicalize(q.get_mpq_t());
  return q;
}

namespace {

// number of decimal digits of |z|, z != 0
std::size_t digit_count(const BigInt& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 10);
}

}  // namespace

std::string decimal_string(const Rational& q, std::size_t digits, RoundDir dir) {
  if (digits == 0) throw std::invalid_argument("decimal_string: digits must be positive");
  int sg = sign_of(q);
  if (sg == 0) return "0";
  bool negative = sg < 0;
  // On the negative side, rounding toward -inf means rounding |q| up.
  RoundDir mag_dir = dir;
  if (negative && dir == RoundDir::Down) mag_dir = RoundDir::Up;
  else if (negative && dir == RoundDir::Up) mag_dir = RoundDir::Down;

  BigInt num = abs(BigInt(q.get_num()));
  BigInt den = q.get_den();

  // decimal exponent e with 10^e <= num/den < 10^{e+1}
  long e = static_cast<long>(digit_count(num)) - static_cast<long>(digit_count(den));
  auto le_pow10 = [&](long ex) {  // 10^ex <= num/den ?
    if (ex >= 0) return BigInt(den * pow10(static_cast<unsigned long>(ex))) <= num;
    return den <= BigInt(num * pow10(static_cast<unsigned long>(-ex)));
  };
  while (!le_pow10(e)) --e;
  while (le_pow10(e + 1)) ++e;

  // mantissa integer with `digits` digits: round(num/den * 10^{digits-1-e})
  long shift = static_cast<long>(digits) - 1 - e;
  BigInt n2 = num, d2 = den;
  if (shift >= 0)
    n2 *= pow10(static_cast<unsigned long>(shift));
  else
    d2 *= pow10(static_cast<unsigned long>(-shift));
  BigInt m, rem;
  mpz_fdiv_qr(m.get_mpz_t(), rem.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
  if (rem != 0) {
    if (mag_dir == RoundDir::Up) {
      m += 1;
    } else if (mag_dir == RoundDir::Nearest) {
      if (BigInt(2 * rem) >= d2) m += 1;
    }
  }
  std::string ms = m.get_str();
  if (ms.size() > digits) {  // carried into an extra digit (all nines)
    ms.pop_back();
    ++e;
  }
  std::string out;
  if (negative) out.push_back('-');
  out.push_back(ms[0]);
  if (ms.size() > 1) {
    out.push_back('.');
    out.append(ms.begin() + 1, ms.end());
  }
  out.push_back('e');
  out += (e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
  return out;
}

}  // namespace hofseq
