#include "mild2/arith.hpp"

#include <array>
#include <numeric>
#include <string>

#include "mild2/errors.hpp"

namespace mild2 {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) throw InputError("is_prime: n must be >= 2, got " + std::to_string(n));
  // The first twelve primes are a complete witness set below 3.3e24.
  static constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

OddPrime::OddPrime(std::uint64_t value) : value_(value) {
  if (value < 3 || value % 2 == 0 || !is_prime(value)) {
    throw InputError("not an odd prime: " + std::to_string(value));
  }
}

int legendre(std::int64_t a, OddPrime p) {
  const auto m = static_cast<std::int64_t>(p.value());
  std::int64_t r = a % m;
  if (r < 0) r += m;
  if (r == 0) return 0;
  std::uint64_t e = pow_mod(static_cast<std::uint64_t>(r), (p.value() - 1) / 2, p.value());
  return e == 1 ? 1 : -1;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw InputError("mobius: n must be >= 1");
  int sign = 1;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

OddPrime next_prime_in_class(std::uint64_t start, std::uint64_t residue, std::uint64_t modulus,
                             const std::set<std::uint64_t>& avoid, std::uint64_t bound) {
  if (modulus == 0 || residue == 0 || residue >= modulus || std::gcd(residue, modulus) != 1) {
    throw InputError("next_prime_in_class: need 0 < residue < modulus and gcd(residue, modulus) = 1");
  }
  std::uint64_t q = start;
  if (q % modulus != residue) q += (residue + modulus - q % modulus) % modulus;
  for (; q <= bound; q += modulus) {
    if (q < 3 || q % 2 == 0 || avoid.count(q)) continue;
    if (is_prime(q)) return OddPrime(q);
  }
  throw BoundExceeded("no prime = " + std::to_string(residue) + " mod " + std::to_string(modulus) +
                      " in [" + std::to_string(start) + ", " + std::to_string(bound) + "]");
}

}  // namespace mild2
