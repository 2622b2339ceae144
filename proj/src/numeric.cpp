#include "hampow/numeric.hpp"

#include <cctype>

namespace hampow {

Integer binom_integer(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial_integer(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

std::uint64_t binom_u64(long n, long k) {
  Integer b = binom_integer(n, k);
  if (!b.fits_ulong_p() && mpz_sizeinbase(b.get_mpz_t(), 2) > 64)
    throw std::overflow_error("binomial coefficient exceeds 64 bits");
  return mpz_get_ui(b.get_mpz_t());
}

std::uint64_t factorial_u64(long n) {
  if (n > 20) throw std::overflow_error("factorial exceeds 64 bits");
  Integer f = factorial_integer(n);
  return mpz_get_ui(f.get_mpz_t());
}

Rational rational_pow(const Rational& p, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), p.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), p.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
      throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    Integer z;
    if (mpz_set_str(z.get_mpz_t(), text.c_str(), 10) != 0)
      throw std::invalid_argument("bad integer literal: " + text);
    return Rational(z);
  }
  // decimal: shift the point out
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad decimal literal: " + text);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i == 0 && (digits[i] == '-' || digits[i] == '+')) continue;
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw std::invalid_argument("bad decimal literal: " + text);
  }
  Integer num;
  if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
    throw std::invalid_argument("bad decimal literal: " + text);
  Integer den = 1;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double ln_of_integer(const Integer& z) {
  if (z <= 0) throw std::invalid_argument("ln of nonpositive integer");
  signed long exp2;
  double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(d) + static_cast<double>(exp2) * M_LN2;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  std::uint64_t h = mix64(mix64(mix64(seed) ^ stream) ^ counter);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace hampow
