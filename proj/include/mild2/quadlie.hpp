#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mild2/linking.hpp"
#include "mild2/series.hpp"

namespace mild2 {

enum class Ring { F2, F2pi };
std::string to_string(Ring ring);

/// Generators xi_1..xi_d with weights sorted nondecreasing; the weight-one letters come first.
class WeightedAlphabet {
 public:
  WeightedAlphabet() = default;
  explicit WeightedAlphabet(std::vector<int> weights);
  static WeightedAlphabet uniform(int d) { return WeightedAlphabet(std::vector<int>(d, 1)); }

  int size() const { return static_cast<int>(weights_.size()); }
  int weight(int i) const { return weights_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  // Number of weight-one generators (m).
  int weight_one_count() const { return m_; }

  bool operator==(const WeightedAlphabet&) const = default;

 private:
  std::vector<int> weights_;
  int m_ = 0;
};

/// pi^pi_exponent * word. Ordered by degree, then pi-exponent, then word.
struct Monomial {
  int degree = 0;
  int pi = 0;
  std::vector<std::uint8_t> word;

  auto operator<=>(const Monomial&) const = default;
};

/// Degree-truncated free associative algebra over F_2 or F_2[pi] (pi central of degree 1).
class Algebra {
 public:
  Algebra(WeightedAlphabet alphabet, Ring ring, int max_degree, bool strict = false);
  static std::shared_ptr<const Algebra> create(WeightedAlphabet alphabet, Ring ring, int max_degree,
                                               bool strict = false) {
    return std::make_shared<const Algebra>(std::move(alphabet), ring, max_degree, strict);
  }

  const WeightedAlphabet& alphabet() const { return alphabet_; }
  Ring ring() const { return ring_; }
  int max_degree() const { return max_degree_; }
  // Strict algebras throw instead of silently truncating.
  bool strict() const { return strict_; }

  int word_weight(const std::vector<std::uint8_t>& word) const;

  bool operator==(const Algebra& o) const {
    return alphabet_ == o.alphabet_ && ring_ == o.ring_ && max_degree_ == o.max_degree_;
  }

 private:
  WeightedAlphabet alphabet_;
  Ring ring_;
  int max_degree_;
  bool strict_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Element of an Algebra; coefficients are F_2, so a term is present or absent.
class NcPoly {
 public:
  explicit NcPoly(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  static NcPoly zero(AlgebraPtr algebra) { return NcPoly(std::move(algebra)); }
  static NcPoly one(AlgebraPtr algebra);
  static NcPoly generator(AlgebraPtr algebra, int i);
  // pi^pi * word; dropped (or rejected, if strict) above the truncation degree.
  static NcPoly monomial(AlgebraPtr algebra, std::vector<std::uint8_t> word, int pi = 0);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::set<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous element. Throws InputError otherwise.
  int degree() const;

  // Adds (XORs) a term, respecting truncation.
  void toggle(Monomial m);

  std::string to_string() const;

  bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

 private:
  AlgebraPtr algebra_;
  std::set<Monomial> terms_;
};

NcPoly add(const NcPoly& u, const NcPoly& v);
NcPoly mul(const NcPoly& u, const NcPoly& v);
NcPoly pi_mul(const NcPoly& u);
// uv + vu
NcPoly bracket(const NcPoly& u, const NcPoly& v);
// u^2 for homogeneous u of degree 1 over F_2.
NcPoly P_quad(const NcPoly& u);
// u^2 + pi u in degree 1, pi u in degree > 1; over F_2[pi].
NcPoly P_mixed(const NcPoly& u);

inline NcPoly operator+(const NcPoly& u, const NcPoly& v) { return add(u, v); }
inline NcPoly operator*(const NcPoly& u, const NcPoly& v) { return mul(u, v); }

/// Lie monomial built from generators by brackets and squares of weight-one generators.
class BracketWord {
 public:
  enum class Kind { leaf, bracket, square };

  static BracketWord leaf(int generator);
  static BracketWord bracket(BracketWord left, BracketWord right);
  static BracketWord square(int generator);
  // ad(s_1) ad(s_2) ... ad(s_n)(inner)
  static BracketWord ad_word(std::span<const int> sigmas, BracketWord inner);

  Kind kind() const { return kind_; }
  int generator() const { return generator_; }
  const BracketWord& left() const { return *left_; }
  const BracketWord& right() const { return *right_; }

  int weight(const WeightedAlphabet& alphabet) const;
  std::string to_string() const;

  bool operator==(const BracketWord& o) const;

 private:
  BracketWord(Kind kind, int generator) : kind_(kind), generator_(generator) {}

  Kind kind_;
  int generator_ = -1;
  std::shared_ptr<const BracketWord> left_, right_;
};

// Bracket -> bracket, Square -> P_quad (F2) or P_mixed (F2pi). Words heavier than the
// truncation degree evaluate to zero unless the algebra is strict.
NcPoly evaluate(const BracketWord& word, const AlgebraPtr& algebra);

// sum s_i xi_i^2 + sum c_ij (xi_i xi_j + xi_j xi_i); identical in both rings.
NcPoly relator_to_poly(const QuadraticRelator& r, const AlgebraPtr& algebra);

struct BasisElement {
  int family;  // 1..5 for the free Lie basis of L^+
  int degree;  // weighted degree
  BracketWord word;
};

/// The free Lie basis Y of L^+ in families (1)-(5), every element of weighted degree
/// <= max_degree, sorted by degree then family.
std::vector<BasisElement> enumerate_Y(const WeightedAlphabet& alphabet, int max_degree);

// 1 - (1 + t)^m (1 - t^{e_1} - ... - t^{e_d}): its t^n coefficient is the number of
// basis elements of Y in degree n.
IntSeries basis_generating_function(const WeightedAlphabet& alphabet, int N);

/// ad(s_1)...ad(s_n)(xi) with s_i in `subset`, xi outside it, total weight <= max_weight,
/// ordered by (n, s-indices, xi).
std::vector<BracketWord> elimination_basis(const WeightedAlphabet& alphabet, const std::vector<int>& subset,
                                           int max_weight);

}  // namespace mild2
