#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mild2/linking.hpp"
#include "mild2/oracle.hpp"

namespace mild2 {

/// Split of the generators: `s` spans the U side (outside the ideal), `sp` the V side.
struct Partition {
  std::vector<int> s;
  std::vector<int> sp;

  static Partition from_sp(int d, const std::vector<int>& sp);
  // Odd positions (1-based) on the S side, even positions on the S' side.
  static Partition parity(int d);

  bool operator==(const Partition&) const = default;
};

/// Membership of every relator in the ideal generated by S', and F_2 independence of
/// their projections onto {[xi_i, xi_j] : i in S, j in S'}.
bool rank_criterion(std::span<const QuadraticRelator> relators, const Partition& part);

enum class CircuitResult { holds, fails, inapplicable };
std::string to_string(CircuitResult r);

/// Cyclic pattern test for d even, d >= 4, d Koch-shaped relators, in the given order.
CircuitResult circuit_criterion(std::span<const QuadraticRelator> relators);

/// First partition passing rank_criterion: the parity split, then every S' by ascending
/// size and lexicographic order (exhaustive for d <= 20).
std::optional<Partition> find_mild_partition(std::span<const QuadraticRelator> relators, int d);
std::optional<Partition> find_mild_partition(std::span<const QuadraticRelator> relators);

enum class Verdict { mild, not_shown, inapplicable };
enum class Criterion { circuit, rank, none };
std::string to_string(Verdict v);
std::string to_string(Criterion c);

struct MildnessReport {
  Verdict verdict = Verdict::not_shown;
  std::optional<Partition> witness;
  Criterion criterion = Criterion::none;
  std::optional<int> oracle_depth;
  std::optional<bool> oracle_match;
  std::vector<std::string> notes;
  Presentation checked;  // the presentation the criteria ran on (after elimination)
};

struct CheckOptions {
  std::optional<int> oracle_depth;
  OracleOptions oracle;
};

/// Eliminates a generator when a nontrivial product relation is present, then tries the
/// circuit criterion and the partition search; optionally confirms with the oracle.
MildnessReport check_mild(const Presentation& p, const CheckOptions& options = {});

}  // namespace mild2
