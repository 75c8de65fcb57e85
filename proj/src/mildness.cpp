#include "mild2/mildness.hpp"

#include <algorithm>
#include <functional>

#include "mild2/errors.hpp"
#include "mild2/gf2.hpp"

namespace mild2 {

namespace {

int shared_generator_count(std::span<const QuadraticRelator> relators) {
  if (relators.empty()) return 0;
  const int d = relators.front().d();
  for (const auto& r : relators) {
    if (r.d() != d) throw InputError("relators disagree on the generator count");
  }
  return d;
}

// Coefficient l_ij of relator i on [xi_i, xi_j].
bool ell(std::span<const QuadraticRelator> relators, int i, int j) { return relators[i].comm(i, j); }

}  // namespace

Partition Partition::from_sp(int d, const std::vector<int>& sp) {
  Partition p;
  std::vector<std::uint8_t> in_sp(d, 0);
  for (int j : sp) {
    if (j < 0 || j >= d) throw InputError("partition index out of range");
    in_sp[j] = 1;
  }
  for (int i = 0; i < d; ++i) (in_sp[i] ? p.sp : p.s).push_back(i);
  return p;
}

Partition Partition::parity(int d) {
  std::vector<int> sp;
  for (int i = 1; i < d; i += 2) sp.push_back(i);
  return from_sp(d, sp);
}

bool rank_criterion(std::span<const QuadraticRelator> relators, const Partition& part) {
  const int d = relators.empty() ? static_cast<int>(part.s.size() + part.sp.size()) : shared_generator_count(relators);
  if (static_cast<int>(part.s.size() + part.sp.size()) != d) throw InputError("partition does not cover the generators");

  for (const auto& r : relators) {
    for (int i : part.s) {
      if (r.square(i)) return false;
      for (int j : part.s) {
        if (i < j && r.comm(i, j)) return false;
      }
    }
  }
  const std::size_t ncols = part.s.size() * part.sp.size();
  if (relators.size() > ncols) return false;
  std::vector<std::vector<std::uint8_t>> rows;
  for (const auto& r : relators) {
    std::vector<std::uint8_t> row;
    row.reserve(ncols);
    for (int i : part.s) {
      for (int j : part.sp) row.push_back(r.comm(i, j));
    }
    rows.push_back(std::move(row));
  }
  return gf2_rank(rows, ncols) == relators.size();
}

std::string to_string(CircuitResult r) {
  switch (r) {
    case CircuitResult::holds: return "true";
    case CircuitResult::fails: return "false";
    case CircuitResult::inapplicable: return "inapplicable";
  }
  return {};
}

CircuitResult circuit_criterion(std::span<const QuadraticRelator> relators) {
  const int d = static_cast<int>(relators.size());
  if (d < 4 || d % 2 != 0) return CircuitResult::inapplicable;
  for (int i = 0; i < d; ++i) {
    if (relators[i].d() != d || !relators[i].has_koch_shape(i)) return CircuitResult::inapplicable;
  }
  // 0-based even positions are the odd generators xi_1, xi_3, ...
  for (int i = 0; i < d; i += 2) {
    if (relators[i].square(i)) return CircuitResult::fails;
    for (int j = 0; j < d; j += 2) {
      if (i != j && ell(relators, i, j)) return CircuitResult::fails;
    }
  }
  bool reverse = true;
  for (int i = 0; i < d; ++i) {
    const int next = (i + 1) % d;
    if (!ell(relators, i, next)) return CircuitResult::fails;
    reverse = reverse && ell(relators, next, i);
  }
  return reverse ? CircuitResult::fails : CircuitResult::holds;
}

std::optional<Partition> find_mild_partition(std::span<const QuadraticRelator> relators, int d) {
  if (!relators.empty() && shared_generator_count(relators) != d) throw InputError("relators disagree with d");
  const std::size_t m = relators.size();
  auto fits = [&](const Partition& p) { return p.s.size() * p.sp.size() >= m && rank_criterion(relators, p); };

  const Partition parity = Partition::parity(d);
  if (fits(parity)) return parity;
  if (d > 20) return std::nullopt;

  std::vector<int> sp;
  std::optional<Partition> found;
  std::function<bool(int, int)> choose = [&](int start, int remaining) {
    if (remaining == 0) {
      Partition p = Partition::from_sp(d, sp);
      if (fits(p)) {
        found = std::move(p);
        return true;
      }
      return false;
    }
    for (int i = start; i <= d - remaining; ++i) {
      sp.push_back(i);
      if (choose(i + 1, remaining - 1)) return true;
      sp.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= d; ++size) {
    // |S| |S'| < m rules out the whole size class.
    if (static_cast<std::size_t>(size) * static_cast<std::size_t>(d - size) < m) continue;
    if (choose(0, size)) return found;
  }
  return std::nullopt;
}

std::optional<Partition> find_mild_partition(std::span<const QuadraticRelator> relators) {
  return find_mild_partition(relators, shared_generator_count(relators));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::mild: return "mild";
    case Verdict::not_shown: return "not_shown";
    case Verdict::inapplicable: return "inapplicable";
  }
  return {};
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::circuit: return "circuit";
    case Criterion::rank: return "rank";
    case Criterion::none: return "none";
  }
  return {};
}

MildnessReport check_mild(const Presentation& p, const CheckOptions& options) {
  MildnessReport rep;
  rep.checked = p;
  if (p.product_relation && default_elimination_index(p)) {
    rep.checked = eliminate_generator(p);
    rep.notes.push_back("eliminated generator x" + std::to_string(*default_elimination_index(p) + 1) +
                        " via the product relation");
  }
  const Presentation& q = rep.checked;
  for (const auto& r : q.relators) {
    if (r.d() != q.d) throw InputError("relator generator count does not match the presentation");
  }

  for (std::size_t k = 0; k < q.relators.size(); ++k) {
    if (q.relators[k].is_zero()) {
      rep.verdict = Verdict::inapplicable;
      rep.notes.push_back("relator " + std::to_string(k + 1) +
                          " has no degree-2 initial form; the degree-2 criteria do not apply");
    }
  }
  if (rep.verdict == Verdict::inapplicable) return rep;

  const CircuitResult circuit = circuit_criterion(q.relators);
  rep.notes.push_back("circuit criterion: " + to_string(circuit));
  if (circuit == CircuitResult::holds) {
    rep.verdict = Verdict::mild;
    rep.criterion = Criterion::circuit;
    rep.witness = Partition::parity(q.d);
    if (!rank_criterion(q.relators, *rep.witness)) {
      rep.notes.push_back("internal inconsistency: parity partition fails the rank criterion");
    }
  } else if (auto part = find_mild_partition(q.relators, q.d)) {
    rep.verdict = Verdict::mild;
    rep.criterion = Criterion::rank;
    rep.witness = std::move(part);
  } else {
    rep.notes.push_back("no partition satisfies the rank criterion");
    if (q.d > 20) rep.notes.push_back("only the parity partition was tried (d > 20)");
  }

  if (options.oracle_depth) {
    rep.oracle_depth = options.oracle_depth;
    const OracleComparison cmp = strongly_free_oracle(q.relators, *options.oracle_depth, Ring::F2, q.d, options.oracle);
    rep.oracle_match = cmp.match;
    rep.notes.push_back(cmp.match ? "oracle: quotient dimensions match the strongly free series through degree " +
                                        std::to_string(*options.oracle_depth)
                                  : "oracle: mismatch at degree " + std::to_string(*cmp.mismatch_degree));
  }
  return rep;
}

}  // namespace mild2
