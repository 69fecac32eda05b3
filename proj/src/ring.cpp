#include "extbar/ring.hpp"

#include <cctype>

namespace extbar {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::prime_field(long p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  return Ring(p);
}

Ring Ring::parse(const std::string& text) {
  if (text == "Z") return integers();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0)
    digits = text.substr(3);
  else if (text.rfind("F_", 0) == 0)
    digits = text.substr(2);
  else if (text.rfind("F", 0) == 0)
    digits = text.substr(1);
  if (digits.empty()) throw std::invalid_argument("unknown ring: " + text);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("unknown ring: " + text);
  return prime_field(std::stol(digits));
}

std::string Ring::name() const { return p_ == 0 ? "Z" : "F_" + std::to_string(p_); }

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

long p_valuation(const BigInt& x, long p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  BigInt y = abs(x);
  long v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
    y /= p;
    ++v;
  }
  return v;
}

}  // namespace extbar
