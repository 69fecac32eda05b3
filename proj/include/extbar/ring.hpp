#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace extbar {

using BigInt = mpz_class;

// Raised when a structural identity that must hold by construction fails
// (for instance a differential that does not square to zero).
class InternalAssertion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_prime(long n);

// Coefficient ring: the integers, or the prime field F_p.
class Ring {
 public:
  static Ring integers() { return Ring(0); }
  static Ring prime_field(long p);
  // Accepts "Z", "Fp:p", "F_p" or "Fp" followed by digits.
  static Ring parse(const std::string& text);

  bool is_field() const { return p_ != 0; }
  long characteristic() const { return p_; }

  void reduce(BigInt& x) const {
    if (p_ != 0) {
      x %= p_;
      if (x < 0) x += p_;
    }
  }
  BigInt normalized(BigInt x) const {
    reduce(x);
    return x;
  }

  std::string name() const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Ring& a, const Ring& b) { return a.p_ != b.p_; }

 private:
  explicit Ring(long p) : p_(p) {}
  long p_;
};

BigInt binomial(long n, long k);
BigInt factorial(long n);

// Exponent of the largest power of p dividing x (x nonzero).
long p_valuation(const BigInt& x, long p);

}  // namespace extbar
