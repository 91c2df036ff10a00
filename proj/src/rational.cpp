#include "slzeta/rational.hpp"

#include <stdexcept>

namespace slzeta {

std::string to_fraction_string(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  return reduced.get_num().get_str() + "/" + reduced.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  Rational out;
  if (text.empty() || out.set_str(std::string(text), 10) != 0 ||
      out.get_den() == 0) {
    throw std::invalid_argument("not a fraction: '" + std::string(text) + "'");
  }
  out.canonicalize();
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt pow2(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace slzeta
