#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mild2/arith.hpp"

namespace mild2 {

// Generator and prime indices are 0-based in the API and 1-based in every rendering.

/// Distinct odd primes p_1, ..., p_n in a fixed order.
class OrderedPrimeSet {
 public:
  OrderedPrimeSet() = default;
  explicit OrderedPrimeSet(std::vector<OddPrime> primes);
  static OrderedPrimeSet from_values(const std::vector<std::uint64_t>& values);

  std::size_t size() const { return primes_.size(); }
  const OddPrime& operator[](std::size_t i) const { return primes_[i]; }
  const std::vector<OddPrime>& primes() const { return primes_; }
  std::vector<std::uint64_t> values() const;

  bool operator==(const OrderedPrimeSet&) const = default;

 private:
  std::vector<OddPrime> primes_;
};

/// a_i = [p_i = 3 mod 4]; ell[i][j] = [p_i is a non-square mod p_j], diagonal 0.
struct LinkingData {
  std::vector<std::uint8_t> a;
  std::vector<std::vector<std::uint8_t>> ell;

  bool operator==(const LinkingData&) const = default;
};

/// Degree-2 element sum s_i xi_i^2 + sum_{i<j} c_ij [xi_i, xi_j] over F_2.
class QuadraticRelator {
 public:
  QuadraticRelator() = default;
  explicit QuadraticRelator(int d, std::optional<int> owner = std::nullopt);

  int d() const { return d_; }
  std::optional<int> owner() const { return owner_; }
  void set_owner(std::optional<int> owner) { owner_ = owner; }

  bool square(int i) const { return squares_[i] != 0; }
  void set_square(int i, bool v) { squares_[i] = v; }

  // Symmetric access: comm(i, j) == comm(j, i); comm(i, i) is always 0.
  bool comm(int i, int j) const;
  void set_comm(int i, int j, bool v);
  void toggle_comm(int i, int j) { set_comm(i, j, !comm(i, j)); }

  bool is_zero() const;
  // True when every term involves generator i: only xi_i^2 and [xi_i, xi_j].
  bool has_koch_shape(int i) const;

  // Drops generator t and renumbers the generators after it.
  QuadraticRelator without_generator(int t) const;

  bool operator==(const QuadraticRelator& o) const {
    return d_ == o.d_ && squares_ == o.squares_ && comms_ == o.comms_;
  }

 private:
  std::size_t pair_index(int i, int j) const;

  int d_ = 0;
  std::optional<int> owner_;
  std::vector<std::uint8_t> squares_;
  std::vector<std::uint8_t> comms_;  // strict upper triangle, row-major
};

struct Provenance {
  std::vector<std::uint64_t> primes;   // source prime set, empty when read from a bare file
  std::vector<int> labels;             // original 0-based label of each current generator
  std::vector<int> eliminated;         // original 0-based labels removed, in order
};

struct Presentation {
  int d = 0;
  std::vector<QuadraticRelator> relators;
  std::optional<std::vector<std::uint8_t>> product_relation;
  Provenance provenance;
};

LinkingData linking_data(const OrderedPrimeSet& primes);
Presentation koch_presentation(const OrderedPrimeSet& primes);

// Largest index t with product_relation[t] = 1, if any.
std::optional<int> default_elimination_index(const Presentation& p);

/// Removes generator t and relator t using x_t = prod_j x_j^{c_j} mod F_2.
/// Throws EliminationError when the product relation is absent, zero, or has c_t = 0.
Presentation eliminate_generator(const Presentation& p, std::optional<int> t = std::nullopt);

// Canonical text: "x4^2[x4,x1][x4,x3]"; owner square first, then owner commutators by
// ascending partner, then any remaining terms in (i, j) order. Zero renders as "1".
std::string relator_text(const QuadraticRelator& r);
std::string product_relation_text(const std::vector<std::uint8_t>& exponents);
// One "r_i = ..." line per relator, then "r = ..." when a product relation is present.
// `prime` adds the reduced-presentation mark: "r'_i = ...".
std::string presentation_text(const Presentation& p, bool prime = false);

/// Primes = 1 mod 4 ascending, then primes = 3 mod 4 ascending; an empty class is filled
/// with the smallest prime of that class not already present (5 or 3 in practice).
OrderedPrimeSet normalize_seed(const std::set<std::uint64_t>& seed);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the auxiliary primes q_1', ..., q_m' and the closing prime q_{m+1} against a
/// normalized seed (q_1, ..., q_m). Every violation is reported.
ValidationReport validate_augmentation(const OrderedPrimeSet& seed, const std::vector<OddPrime>& q_aux,
                                       OddPrime q_last);

// (q_1', q_1, q_2', q_2, ..., q_m', q_m, q_{m+1})
OrderedPrimeSet interleave(const OrderedPrimeSet& seed, const std::vector<OddPrime>& q_aux, OddPrime q_last);

}  // namespace mild2
