#pragma once

// Exact coefficient fields. Groebner-style computations need exact zero
// tests, so everything runs over arbitrary-precision rationals or a prime
// field; floating point is deliberately absent.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pbwelim {

// Field of rationals backed by GMP. Elements are kept canonical (lowest
// terms, positive denominator); zero is 0/1.
class Rationals {
 public:
  using Elem = mpq_class;

  static constexpr bool is_prime = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }

  Elem from_fraction(const std::string& num, const std::string& den) const {
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    Elem q(n, d);
    q.canonicalize();
    return q;
  }

  Elem from_fraction(long num, long den) const {
    return from_fraction(std::to_string(num), std::to_string(den));
  }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string describe() const { return "QQ"; }

  bool operator==(const Rationals&) const = default;
};

// Prime field GF(p) for p < 2^31; elements are canonical representatives
// in [0, p). Primality is checked at construction.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  static constexpr bool is_prime = true;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime_number(p)) {
      throw std::invalid_argument("modulus " + std::to_string(p) +
                                  " is not prime");
    }
    if (p >= (std::uint64_t{1} << 31)) {
      throw std::invalid_argument("modulus too large (need p < 2^31)");
    }
  }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }

  // Coefficients in input files are rational literals; they are reduced
  // mod p here. The denominator must be a unit mod p.
  Elem from_fraction(const std::string& num, const std::string& den) const {
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class nr = n % pz;
    if (nr < 0) nr += pz;
    mpz_class dr = d % pz;
    if (dr < 0) dr += pz;
    if (dr == 0) {
      throw std::invalid_argument("denominator not invertible mod " +
                                  std::to_string(p_));
    }
    return mul(static_cast<Elem>(nr.get_ui()), inv(static_cast<Elem>(dr.get_ui())));
  }

  Elem from_fraction(long num, long den) const {
    return from_fraction(std::to_string(num), std::to_string(den));
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow_mod(a, p_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string describe() const { return "GF " + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

  static bool is_prime_number(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t q = 3; q * q <= p; q += 2) {
      if (p % q == 0) return false;
    }
    return true;
  }

 private:
  Elem pow_mod(Elem base, std::uint64_t exp) const {
    Elem acc = one();
    Elem b = base % p_;
    while (exp) {
      if (exp & 1) acc = mul(acc, b);
      b = mul(b, b);
      exp >>= 1;
    }
    return acc;
  }

  std::uint64_t p_;
};

}  // namespace pbwelim
