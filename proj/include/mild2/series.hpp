#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mild2 {

using BigInt = boost::multiprecision::cpp_int;

/// Generator weights e_1..e_d (>= 1) and relator degrees h_1..h_m (>= 2).
struct WeightSignature {
  std::vector<int> e;
  std::vector<int> h;

  WeightSignature() = default;
  WeightSignature(std::vector<int> e, std::vector<int> h);

  // d generators of weight 1 and m relators of degree 2.
  static WeightSignature uniform(int d, int m);

  int weight_one_count() const;
};

/// Truncated power series c_0 + c_1 t + ... + c_N t^N with exact coefficients.
struct IntSeries {
  std::vector<BigInt> c;

  IntSeries() = default;
  explicit IntSeries(std::vector<BigInt> coeffs) : c(std::move(coeffs)) {}
  static IntSeries zero(int order) { return IntSeries(std::vector<BigInt>(order + 1)); }

  int order() const { return static_cast<int>(c.size()) - 1; }
  const BigInt& operator[](int n) const { return c[n]; }
  BigInt& operator[](int n) { return c[n]; }

  bool operator==(const IntSeries&) const = default;
};

// Truncated product through the shorter of the two orders.
IntSeries multiply(const IntSeries& a, const IntSeries& b);

/// Newton power sums p_1..p_L of the inverse roots of the denominator polynomial.
struct PowerSums {
  std::vector<BigInt> p;  // p[0] is p_1
  const BigInt& operator()(int l) const { return p[l - 1]; }
};

enum class DimensionKind { reduced_b, lower_central_a, zassenhaus_a, quotient_dims };
std::string to_string(DimensionKind kind);

/// Dimensions indexed from n = 1 (value(1) is the first entry).
struct DimensionSequence {
  DimensionKind kind;
  std::vector<BigInt> values;

  const BigInt& value(int n) const { return values[n - 1]; }
  int max_index() const { return static_cast<int>(values.size()); }
};

// Polynomial 1 - (t^{e_1} + ... + t^{e_d}) + t^{h_1} + ... + t^{h_m}.
std::vector<BigInt> denominator(const WeightSignature& sig);

/// Series of numerator/denominator through t^N. Throws InputError unless denominator[0] == 1.
IntSeries expand_rational(const std::vector<BigInt>& numerator, const std::vector<BigInt>& denominator, int N);

IntSeries strongly_free_series(const WeightSignature& sig, int N);
// strongly_free_series / (1 - t).
IntSeries gamma_series(const WeightSignature& sig, int N);

PowerSums power_sums(const WeightSignature& sig, int L);

/// b_1 = r (weight-one generators) and b_n = (1/n) sum_{l|n} mu(n/l) (p_l + (-1)^l r) for 2 <= n <= N.
/// Throws SeriesError naming the first n where b_n is non-integral or negative.
DimensionSequence reduced_dims_bn(const WeightSignature& sig, int N);

// a_1 = r, a_n = b_2 + ... + b_n.
DimensionSequence lower_central_dims(const WeightSignature& sig, int N);

/// a_n with prod_{n>=1} (1 + t^n)^{a_n} = 1/(1 - d t + m t^2), extracted degree by degree.
DimensionSequence zassenhaus_dims(int d, int m, int N);

// (1 + t)^r prod_{n>=2} (1 - t^n)^{-b_n} == strongly_free_series through t^N.
bool verify_cent_g(const WeightSignature& sig, int N);

// (1 + t^n)^k and (1 - t^n)^{-k} truncated at order N.
IntSeries binomial_power(int n, const BigInt& k, int N);
IntSeries inverse_binomial_power(int n, const BigInt& k, int N);

}  // namespace mild2
