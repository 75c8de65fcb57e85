#include <doctest.h>

#include <random>

#include "mild2/errors.hpp"
#include "mild2/gf2.hpp"
#include "mild2/linking.hpp"
#include "mild2/oracle.hpp"
#include "mild2/selftest.hpp"

using namespace mild2;

namespace {

std::vector<QuadraticRelator> reduced(const std::vector<std::uint64_t>& primes) {
  return eliminate_generator(koch_presentation(OrderedPrimeSet::from_values(primes))).relators;
}

std::vector<std::uint64_t> prefix(const std::vector<std::uint64_t>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<long>(n)};
}

}  // namespace

TEST_CASE("GF(2) echelon") {
  Gf2Echelon e(130);
  const std::uint32_t a[] = {0, 129};
  const std::uint32_t b[] = {129, 64};
  const std::uint32_t c[] = {0, 64};
  const std::uint32_t twice[] = {3, 3};
  CHECK(e.insert_sparse(a));
  CHECK(e.insert_sparse(b));
  CHECK_FALSE(e.insert_sparse(c));
  CHECK_FALSE(e.insert_sparse(twice));
  CHECK(e.rank() == 2);
  CHECK(Gf2Echelon::words_for(130) == 3);
  CHECK(gf2_rank({{1, 0, 0, 0}, {1, 0, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}}, 4) == 4);
  CHECK(gf2_rank({{1, 1}, {1, 1}, {0, 0}}, 2) == 1);
  CHECK(gf2_rank({}, 3) == 0);
}

TEST_CASE("GF(2) rank of random matrices matches a reference elimination") {
  std::mt19937_64 rng(17);
  for (int c = 0; c < 200; ++c) {
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 70;
    std::vector<std::vector<std::uint8_t>> m(rows, std::vector<std::uint8_t>(cols));
    for (auto& r : m) {
      for (auto& x : r) x = rng() % 3 == 0;
    }
    auto ref = m;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
      std::size_t piv = rank;
      while (piv < rows && !ref[piv][col]) ++piv;
      if (piv == rows) continue;
      std::swap(ref[piv], ref[rank]);
      for (std::size_t r = 0; r < rows; ++r) {
        if (r != rank && ref[r][col]) {
          for (std::size_t k = 0; k < cols; ++k) ref[r][k] ^= ref[rank][k];
        }
      }
      ++rank;
    }
    CHECK(gf2_rank(m, cols) == rank);
    Gf2Echelon e(cols);
    for (const auto& r : m) {
      std::vector<std::uint64_t> packed(Gf2Echelon::words_for(cols));
      for (std::size_t k = 0; k < cols; ++k) {
        if (r[k]) packed[k / 64] |= std::uint64_t{1} << (k % 64);
      }
      e.insert(packed);
    }
    CHECK(e.rank() == rank);
  }
}

TEST_CASE("quotient dimensions of small algebras") {
  const WeightedAlphabet two = WeightedAlphabet::uniform(2);
  const std::vector<NcPoly> none;
  CHECK(quotient_dims(two, none, 3, Ring::F2).quotient_dims() == std::vector<std::uint64_t>{1, 2, 4, 8});

  const AlgebraPtr a = Algebra::create(two, Ring::F2, 4);
  const std::vector<NcPoly> rels{P_quad(NcPoly::generator(a, 0)),
                                 bracket(NcPoly::generator(a, 0), NcPoly::generator(a, 1))};
  const RankProfile profile = quotient_dims(two, rels, 4, Ring::F2);
  CHECK(profile.quotient_dims() == std::vector<std::uint64_t>{1, 2, 2, 2, 2});
  for (const auto& d : profile.degrees) CHECK(d.quotient == d.ambient - d.rank);
  CHECK(profile.degrees[2].ambient == 4);

  // F2[pi]: a free algebra on x1, x2 and pi has 3^n monomials... minus nothing.
  const RankProfile free_pi = quotient_dims(two, none, 3, Ring::F2pi);
  CHECK(free_pi.quotient_dims() == std::vector<std::uint64_t>{1, 3, 7, 15});
}

TEST_CASE("strongly free oracle on the worked examples") {
  for (const auto* primes : {&fixtures::example1_primes, &fixtures::example2_primes}) {
    const auto cmp = strongly_free_oracle(reduced(*primes), 6);
    CHECK(cmp.match);
    CHECK_FALSE(cmp.mismatch_degree.has_value());
    CHECK(cmp.observed == prefix(fixtures::strongly_free_d4_m4, 7));
  }
  const auto pi = strongly_free_oracle(reduced(fixtures::example1_primes), 5, Ring::F2pi);
  CHECK(pi.match);
  CHECK(pi.observed == fixtures::strongly_free_d4_m4_pi);
}

TEST_CASE("strongly free oracle negative control and empty list") {
  QuadraticRelator sq(2), cm(2);
  sq.set_square(0, true);
  cm.set_comm(0, 1, true);
  const std::vector<QuadraticRelator> rels{sq, cm};
  const auto cmp = strongly_free_oracle(rels, 4);
  CHECK_FALSE(cmp.match);
  CHECK(cmp.mismatch_degree == 3);
  CHECK(cmp.observed[3] == 2);
  CHECK(cmp.expected[3] == 0);
  CHECK(cmp.expected[4] == -4);

  const std::vector<QuadraticRelator> empty;
  CHECK(strongly_free_oracle(empty, 3, Ring::F2, 2).match);
  CHECK(strongly_free_oracle(empty, 3, Ring::F2, 2).observed == std::vector<std::uint64_t>{1, 2, 4, 8});
}

TEST_CASE("oracle agrees with certified cyclic instances") {
  for (int d : {4, 6}) {
    const int depth = d == 4 ? 5 : 4;
    CHECK(strongly_free_oracle(cyclic_instance(d), depth).match);
  }
}

TEST_CASE("memory guard") {
  OracleOptions tight;
  tight.memory_cap_bytes = 4096;
  try {
    strongly_free_oracle(reduced(fixtures::example1_primes), 6, Ring::F2, std::nullopt, tight);
    FAIL("expected the memory guard to trip");
  } catch (const ResourceError& e) {
    CHECK(e.degree() >= 1);
    CHECK(e.degree() < 6);
  }
  CHECK(estimated_degree_bytes(100, 128) >= 100 * 16);
  const std::vector<NcPoly> none;
  CHECK_THROWS_AS(quotient_dims(WeightedAlphabet::uniform(2), none, 16, Ring::F2), InputError);
}

TEST_CASE("independent_in_degree") {
  const AlgebraPtr a = Algebra::create(WeightedAlphabet::uniform(2), Ring::F2, 4);
  const NcPoly x1 = NcPoly::generator(a, 0), x2 = NcPoly::generator(a, 1);
  const std::vector<NcPoly> pair{bracket(x1, x2), x1 * x1};
  CHECK(independent_in_degree(pair) == 2);
  const std::vector<NcPoly> dup{x1 * x2, x1 * x2};
  CHECK(independent_in_degree(dup) == 1);
  const std::vector<NcPoly> three{x1 * x1, x2 * x2, bracket(x1, x2)};
  CHECK(independent_in_degree(three) == 3);
  const std::vector<NcPoly> mixed_deg{x1, x1 * x2};
  CHECK_THROWS_AS(independent_in_degree(mixed_deg), InputError);
}
