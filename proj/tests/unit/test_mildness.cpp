#include <doctest.h>

#include <random>

#include "mild2/linking.hpp"
#include "mild2/mildness.hpp"
#include "mild2/selftest.hpp"

using namespace mild2;

namespace {

std::vector<QuadraticRelator> reduced(const std::vector<std::uint64_t>& primes) {
  return eliminate_generator(koch_presentation(OrderedPrimeSet::from_values(primes))).relators;
}

std::vector<QuadraticRelator> negative_control() {
  QuadraticRelator sq(2), cm(2);
  sq.set_square(0, true);
  cm.set_comm(0, 1, true);
  return {sq, cm};
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(Partition::parity(4) == Partition{{0, 2}, {1, 3}});
  CHECK(Partition::parity(5) == Partition{{0, 2, 4}, {1, 3}});
  CHECK(Partition::from_sp(4, {2, 3}) == Partition{{0, 1}, {2, 3}});
  CHECK(Partition::parity(0) == Partition{});
}

TEST_CASE("rank criterion on the worked examples") {
  const auto r1 = reduced(fixtures::example1_primes);
  CHECK(rank_criterion(r1, Partition::from_sp(4, {1, 3})));
  const auto r2 = reduced(fixtures::example2_primes);
  CHECK(rank_criterion(r2, Partition::from_sp(4, {2, 3})));
  CHECK_FALSE(rank_criterion(r2, Partition::parity(4)));
  CHECK_FALSE(rank_criterion(negative_control(), Partition::from_sp(2, {1})));
}

TEST_CASE("circuit criterion") {
  CHECK(circuit_criterion(reduced(fixtures::example1_primes)) == CircuitResult::holds);
  CHECK(circuit_criterion(reduced(fixtures::example2_primes)) == CircuitResult::fails);
  CHECK(circuit_criterion(cyclic_instance(4)) == CircuitResult::holds);
  CHECK(circuit_criterion(cyclic_instance(6)) == CircuitResult::holds);
  CHECK(circuit_criterion(cyclic_instance(8)) == CircuitResult::holds);

  auto both_ways = cyclic_instance(4);
  for (int i = 0; i < 4; ++i) both_ways[i].set_comm(i, (i + 3) % 4, true);
  CHECK(circuit_criterion(both_ways) == CircuitResult::fails);

  auto odd_square = cyclic_instance(4);
  odd_square[0].set_square(0, true);
  CHECK(circuit_criterion(odd_square) == CircuitResult::fails);

  CHECK(circuit_criterion(negative_control()) == CircuitResult::inapplicable);
  CHECK(circuit_criterion(cyclic_instance(3)) == CircuitResult::inapplicable);
  auto not_koch = cyclic_instance(4);
  not_koch[0].set_comm(2, 3, true);
  CHECK(circuit_criterion(not_koch) == CircuitResult::inapplicable);
}

TEST_CASE("circuit implies rank on the parity split for random cyclic instances") {
  std::mt19937_64 rng(3);
  int holds = 0;
  for (int c = 0; c < 400; ++c) {
    const int d = rng() % 2 ? 4 : 6;
    std::vector<QuadraticRelator> rels;
    for (int i = 0; i < d; ++i) {
      QuadraticRelator r(d, i);
      r.set_square(i, rng() % 2);
      for (int j = 0; j < d; ++j) {
        if (j != i) r.set_comm(i, j, rng() % 3 == 0);
      }
      rels.push_back(r);
    }
    const auto cc = circuit_criterion(rels);
    if (cc == CircuitResult::holds) {
      ++holds;
      CHECK(rank_criterion(rels, Partition::parity(d)));
    }
  }
  // Force a few holds by construction.
  for (int d : {4, 6}) {
    for (int c = 0; c < 20; ++c) {
      auto rels = cyclic_instance(d);
      for (int i = 1; i < d; i += 2) rels[i].set_square(i, rng() % 2);
      REQUIRE(circuit_criterion(rels) == CircuitResult::holds);
      CHECK(rank_criterion(rels, Partition::parity(d)));
      ++holds;
    }
  }
  CHECK(holds >= 40);
}

TEST_CASE("find_mild_partition") {
  const auto r2 = reduced(fixtures::example2_primes);
  const auto found = find_mild_partition(r2);
  REQUIRE(found);
  CHECK(found->sp == std::vector<int>{2, 3});
  CHECK(find_mild_partition(reduced(fixtures::example1_primes)) == Partition::parity(4));
  CHECK_FALSE(find_mild_partition(negative_control()).has_value());
  const std::vector<QuadraticRelator> none;
  CHECK(find_mild_partition(none) == Partition{});
}

TEST_CASE("rank criterion is invariant under row operations") {
  auto rels = reduced(fixtures::example2_primes);
  const Partition part = Partition::from_sp(4, {2, 3});
  QuadraticRelator sum = rels[0];
  for (int i = 0; i < 4; ++i) {
    sum.set_square(i, rels[0].square(i) != rels[1].square(i));
    for (int j = i + 1; j < 4; ++j) sum.set_comm(i, j, rels[0].comm(i, j) != rels[1].comm(i, j));
  }
  rels[0] = sum;
  CHECK(rank_criterion(rels, part));
  rels[1] = sum;
  CHECK_FALSE(rank_criterion(rels, part));
}

TEST_CASE("check_mild verdicts") {
  const auto r1 = check_mild(koch_presentation(OrderedPrimeSet::from_values(fixtures::example1_primes)));
  CHECK(r1.verdict == Verdict::mild);
  CHECK(r1.criterion == Criterion::circuit);
  CHECK(r1.witness == Partition::parity(4));

  CheckOptions opts;
  opts.oracle_depth = 5;
  const auto r2 = check_mild(koch_presentation(OrderedPrimeSet::from_values(fixtures::example2_primes)), opts);
  CHECK(r2.verdict == Verdict::mild);
  CHECK(r2.criterion == Criterion::rank);
  REQUIRE(r2.witness);
  CHECK(r2.witness->sp == std::vector<int>{2, 3});
  CHECK(r2.oracle_match == true);

  const auto r3 = check_mild(koch_presentation(OrderedPrimeSet::from_values({17, 13})));
  CHECK(r3.verdict == Verdict::inapplicable);
  CHECK_FALSE(r3.witness.has_value());

  Presentation neg;
  neg.d = 2;
  neg.relators = negative_control();
  const auto r4 = check_mild(neg, opts);
  CHECK(r4.verdict == Verdict::not_shown);
  CHECK(r4.criterion == Criterion::none);
  CHECK(r4.oracle_match == false);
}

TEST_CASE("verdict strings") {
  CHECK(to_string(Verdict::not_shown) == "not_shown");
  CHECK(to_string(Criterion::rank) == "rank");
  CHECK(to_string(CircuitResult::inapplicable) == "inapplicable");
}
