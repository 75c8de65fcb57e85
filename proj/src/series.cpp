#include "mild2/series.hpp"

#include <algorithm>

#include "mild2/arith.hpp"
#include "mild2/errors.hpp"

namespace mild2 {

WeightSignature::WeightSignature(std::vector<int> e_, std::vector<int> h_) : e(std::move(e_)), h(std::move(h_)) {
  if (e.empty()) throw InputError("weight signature needs at least one generator");
  for (int w : e) {
    if (w < 1) throw InputError("generator weights must be >= 1");
  }
  for (int w : h) {
    if (w < 2) throw InputError("relator degrees must be >= 2");
  }
}

WeightSignature WeightSignature::uniform(int d, int m) {
  if (d < 1 || m < 0) throw InputError("need d >= 1 and m >= 0");
  return WeightSignature(std::vector<int>(d, 1), std::vector<int>(m, 2));
}

int WeightSignature::weight_one_count() const {
  return static_cast<int>(std::count(e.begin(), e.end(), 1));
}

std::string to_string(DimensionKind kind) {
  switch (kind) {
    case DimensionKind::reduced_b: return "reduced_b";
    case DimensionKind::lower_central_a: return "lower_central_a";
    case DimensionKind::zassenhaus_a: return "zassenhaus_a";
    case DimensionKind::quotient_dims: return "quotient_dims";
  }
  return "unknown";
}

IntSeries multiply(const IntSeries& a, const IntSeries& b) {
  const int N = std::min(a.order(), b.order());
  IntSeries out = IntSeries::zero(N);
  for (int i = 0; i <= N; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= N; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<BigInt> denominator(const WeightSignature& sig) {
  int top = 0;
  for (int w : sig.e) top = std::max(top, w);
  for (int w : sig.h) top = std::max(top, w);
  std::vector<BigInt> den(top + 1);
  den[0] = 1;
  for (int w : sig.e) den[w] -= 1;
  for (int w : sig.h) den[w] += 1;
  while (den.size() > 1 && den.back() == 0) den.pop_back();
  return den;
}

IntSeries expand_rational(const std::vector<BigInt>& numerator, const std::vector<BigInt>& den, int N) {
  if (N < 0) throw InputError("truncation order must be >= 0");
  if (den.empty() || den[0] != 1) throw InputError("denominator must have constant term 1");
  IntSeries out = IntSeries::zero(N);
  for (int n = 0; n <= N; ++n) {
    BigInt v = n < static_cast<int>(numerator.size()) ? numerator[n] : BigInt(0);
    const int top = std::min<int>(n, static_cast<int>(den.size()) - 1);
    for (int k = 1; k <= top; ++k) v -= den[k] * out[n - k];
    out[n] = v;
  }
  return out;
}

IntSeries strongly_free_series(const WeightSignature& sig, int N) {
  return expand_rational({BigInt(1)}, denominator(sig), N);
}

IntSeries gamma_series(const WeightSignature& sig, int N) {
  IntSeries s = strongly_free_series(sig, N);
  for (int n = 1; n <= N; ++n) s[n] += s[n - 1];
  return s;
}

PowerSums power_sums(const WeightSignature& sig, int L) {
  if (L < 1) throw InputError("need L >= 1");
  const std::vector<BigInt> c = denominator(sig);
  auto coeff = [&](int i) { return i < static_cast<int>(c.size()) ? c[i] : BigInt(0); };
  PowerSums out;
  out.p.resize(L);
  for (int l = 1; l <= L; ++l) {
    BigInt v = -BigInt(l) * coeff(l);
    for (int i = 1; i < l; ++i) v -= coeff(i) * out.p[l - i - 1];
    out.p[l - 1] = v;
  }
  return out;
}

DimensionSequence reduced_dims_bn(const WeightSignature& sig, int N) {
  if (N < 1) throw InputError("need N >= 1");
  const int r = sig.weight_one_count();
  const PowerSums ps = power_sums(sig, N);
  DimensionSequence out{DimensionKind::reduced_b, {BigInt(r)}};
  for (int n = 2; n <= N; ++n) {
    BigInt total = 0;
    for (int l = 1; l <= n; ++l) {
      if (n % l) continue;
      const int mu = mobius(static_cast<std::uint64_t>(n / l));
      if (mu == 0) continue;
      BigInt term = ps(l) + (l % 2 == 0 ? BigInt(r) : BigInt(-r));
      total += mu * term;
    }
    if (total % n != 0) throw SeriesError("b_" + std::to_string(n) + " is not an integer", n);
    BigInt b = total / n;
    if (b < 0) throw SeriesError("b_" + std::to_string(n) + " = " + b.str() + " is negative", n);
    out.values.push_back(b);
  }
  return out;
}

DimensionSequence lower_central_dims(const WeightSignature& sig, int N) {
  const DimensionSequence b = reduced_dims_bn(sig, N);
  DimensionSequence out{DimensionKind::lower_central_a, {b.value(1)}};
  BigInt acc = 0;
  for (int n = 2; n <= N; ++n) {
    acc += b.value(n);
    out.values.push_back(acc);
  }
  return out;
}

IntSeries binomial_power(int n, const BigInt& k, int N) {
  // (1 + t^n)^k = sum_j C(k, j) t^{nj}
  IntSeries out = IntSeries::zero(N);
  BigInt binom = 1;
  for (int j = 0; static_cast<long long>(j) * n <= N; ++j) {
    if (j > 0) binom = binom * (k - (j - 1)) / j;
    out[j * n] = binom;
  }
  return out;
}

IntSeries inverse_binomial_power(int n, const BigInt& k, int N) {
  // (1 - t^n)^{-k} = sum_j C(k + j - 1, j) t^{nj}
  IntSeries out = IntSeries::zero(N);
  BigInt binom = 1;
  for (int j = 0; static_cast<long long>(j) * n <= N; ++j) {
    if (j > 0) binom = binom * (k + j - 1) / j;
    out[j * n] = binom;
  }
  return out;
}

DimensionSequence zassenhaus_dims(int d, int m, int N) {
  if (d < 1 || m < 0) throw InputError("need d >= 1 and m >= 0");
  if (N < 1) throw InputError("need N >= 1");
  const IntSeries target = expand_rational({BigInt(1)}, {BigInt(1), BigInt(-d), BigInt(m)}, N);
  IntSeries partial = IntSeries::zero(N);
  partial[0] = 1;
  DimensionSequence out{DimensionKind::zassenhaus_a, {}};
  for (int n = 1; n <= N; ++n) {
    // partial has no t^1..t^{n-1} discrepancy, so (1 + t^n)^{a_n} fixes the t^n coefficient.
    BigInt a = target[n] - partial[n];
    if (a < 0) throw SeriesError("a_" + std::to_string(n) + " = " + a.str() + " is negative", n);
    out.values.push_back(a);
    partial = multiply(partial, binomial_power(n, a, N));
  }
  return out;
}

bool verify_cent_g(const WeightSignature& sig, int N) {
  const DimensionSequence b = reduced_dims_bn(sig, std::max(N, 1));
  IntSeries lhs = binomial_power(1, BigInt(sig.weight_one_count()), N);
  for (int n = 2; n <= N; ++n) lhs = multiply(lhs, inverse_binomial_power(n, b.value(n), N));
  return lhs == strongly_free_series(sig, N);
}

}  // namespace mild2
