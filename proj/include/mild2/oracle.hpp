#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mild2/linking.hpp"
#include "mild2/quadlie.hpp"
#include "mild2/series.hpp"

namespace mild2 {

struct OracleOptions {
  // Upper bound on the estimated pivot storage of one degree.
  std::uint64_t memory_cap_bytes = std::uint64_t{1} << 30;
};

struct DegreeProfile {
  int degree = 0;
  std::uint64_t ambient = 0;
  std::uint64_t spanning_rows = 0;
  std::uint64_t rank = 0;
  std::uint64_t quotient = 0;
};

/// Per-degree dimensions of A / (relators) for degrees 0..N.
struct RankProfile {
  Ring ring = Ring::F2;
  std::vector<DegreeProfile> degrees;

  std::vector<std::uint64_t> quotient_dims() const;
};

// Pivot storage the elimination for one degree may need, in bytes.
std::uint64_t estimated_degree_bytes(std::uint64_t spanning_rows, std::uint64_t ambient);

/// Brute-force quotient of the truncated free algebra by the two-sided ideal of the
/// homogeneous relators: each ideal slice is spanned by all pi^k u rho v and row-reduced.
/// Throws ResourceError if a degree would exceed the memory cap.
RankProfile quotient_dims(const WeightedAlphabet& alphabet, std::span<const NcPoly> relators, int N, Ring ring,
                          const OracleOptions& options = {});

struct OracleComparison {
  Ring ring = Ring::F2;
  bool match = false;
  std::optional<int> mismatch_degree;
  std::vector<std::uint64_t> observed;
  IntSeries expected;
  RankProfile profile;
};

/// Compares quotient dimensions with 1/(1 - d t + m t^2) (F2) or its prefix sums (F2pi).
/// d defaults to the relators' generator count.
OracleComparison strongly_free_oracle(std::span<const QuadraticRelator> relators, int N, Ring ring = Ring::F2,
                                      std::optional<int> d = std::nullopt, const OracleOptions& options = {});

// F_2 rank of homogeneous elements of one common degree on that degree's monomial basis.
std::size_t independent_in_degree(std::span<const NcPoly> polys);

}  // namespace mild2
