#pragma once

#include <compare>
#include <cstdint>
#include <set>

namespace mild2 {

// Deterministic for every 64-bit n. Throws InputError for n < 2.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// An odd prime p >= 3. Construction validates primality.
class OddPrime {
 public:
  explicit OddPrime(std::uint64_t value);

  std::uint64_t value() const { return value_; }
  bool is_one_mod_four() const { return value_ % 4 == 1; }

  auto operator<=>(const OddPrime&) const = default;

 private:
  std::uint64_t value_;
};

/// Legendre symbol (a/p) in {-1, 0, 1}, via Euler's criterion.
int legendre(std::int64_t a, OddPrime p);

// Möbius function by trial-division factorization. Throws InputError for n == 0.
int mobius(std::uint64_t n);

/// Smallest prime q >= start with q = residue (mod modulus) and q not in `avoid`.
/// Throws BoundExceeded if no such prime is <= bound, InputError on a bad class.
OddPrime next_prime_in_class(std::uint64_t start, std::uint64_t residue, std::uint64_t modulus,
                             const std::set<std::uint64_t>& avoid, std::uint64_t bound);

}  // namespace mild2
