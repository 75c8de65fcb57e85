#include <doctest.h>

#include "mild2/augment.hpp"
#include "mild2/errors.hpp"
#include "mild2/json_io.hpp"
#include "mild2/selftest.hpp"

using namespace mild2;

namespace {

Presentation example(const std::vector<std::uint64_t>& primes) {
  return koch_presentation(OrderedPrimeSet::from_values(primes));
}

}  // namespace

TEST_CASE("presentation JSON round trip") {
  for (const auto* primes : {&fixtures::example1_primes, &fixtures::example2_primes}) {
    const Presentation p = example(*primes);
    const Json j = to_json(p);
    CHECK(j["primes"] == Json(*primes));
    CHECK(j["relators"].size() == 5);
    const Presentation back = presentation_from_json(Json::parse(j.dump()));
    CHECK(presentation_text(back) == presentation_text(p));
    CHECK(to_json(back) == j);

    const Presentation q = eliminate_generator(p);
    const Presentation qback = presentation_from_json(Json::parse(to_json(q).dump()));
    CHECK(presentation_text(qback, true) == presentation_text(q, true));
    CHECK(qback.provenance.eliminated == q.provenance.eliminated);
    CHECK(check_mild(qback).verdict == check_mild(p).verdict);
  }
}

TEST_CASE("presentation JSON schema details") {
  const Json j = to_json(example(fixtures::example1_primes));
  CHECK(j["a"] == Json::array({0, 0, 0, 1, 1}));
  CHECK(j["relators"][3]["owner"] == 4);
  CHECK(j["relators"][3]["square"] == 1);
  CHECK(j["relators"][3]["comms"] == Json::parse("[[4,1],[4,3],[4,5]]"));
  CHECK(j["product_relation"] == Json::array({0, 0, 0, 1, 1}));

  const Json only_primes{{"primes", fixtures::example2_primes}};
  CHECK(presentation_text(presentation_from_json(only_primes)) == fixtures::example2_text);

  const Json bare = Json::parse(R"({"d":2,"relators":[{"squares":[1]},{"comms":[[1,2]]}]})");
  const Presentation p = presentation_from_json(bare);
  CHECK(p.d == 2);
  CHECK(p.relators[0].square(0));
  CHECK(p.relators[1].comm(0, 1));
  CHECK(check_mild(p).verdict == Verdict::not_shown);
}

TEST_CASE("malformed presentation JSON") {
  CHECK_THROWS_AS(presentation_from_json(Json::parse("[]")), InputError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"relators":[]})")), InputError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"d":2,"relators":[{"comms":[[1,3]]}]})")), InputError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"d":2,"relators":[{"comms":[[1,1]]}]})")), InputError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"d":2,"relators":[{"square":1}]})")), InputError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"primes":[4,9]})")), InputError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"primes":"x"})")), InputError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"d":2,"relators":[],"product_relation":[1]})")),
                  InputError);
}

TEST_CASE("report JSON") {
  CheckOptions opts;
  opts.oracle_depth = 4;
  const Json r = to_json(check_mild(example(fixtures::example2_primes), opts));
  CHECK(r["verdict"] == "mild");
  CHECK(r["criterion"] == "rank");
  CHECK(r["witness"]["Sp"] == Json::array({3, 4}));
  CHECK(r["witness"]["S"] == Json::array({1, 2}));
  CHECK(r["oracle_depth"] == 4);
  CHECK(r["oracle_match"] == true);
  CHECK(r["notes"].is_array());

  const Json dims = to_json(lower_central_dims(WeightSignature::uniform(4, 4), 4));
  CHECK(dims["kind"] == "lower_central_a");
  CHECK(dims["values"][3] == Json{{"n", 4}, {"value", 16}});
  CHECK(dims.contains("interpretation"));

  const Json s = series_to_json(strongly_free_series(WeightSignature::uniform(4, 4), 2), "strongly-free");
  CHECK(s["values"][2] == Json{{"n", 2}, {"value", 12}});
  BigInt huge = 1;
  for (int i = 0; i < 30; ++i) huge *= 1000;
  CHECK(big_to_json(huge).is_string());
  CHECK(big_to_json(BigInt(-5)) == -5);
}

TEST_CASE("augmentation") {
  const auto accepted = try_augmentation({13, 3}, {OddPrime(41), OddPrime(5)}, OddPrime(19));
  REQUIRE(accepted);
  CHECK(accepted->S.values() == fixtures::example1_primes);
  CHECK_FALSE(try_augmentation({13, 3}, {OddPrime(5), OddPrime(41)}, OddPrime(19)).has_value());

  const auto result = augment({13, 3}, {100000, 1});
  CHECK(result.S.size() == 5);
  CHECK(validate_augmentation(normalize_seed({13, 3}), result.q_aux, result.q_last).ok());
  CHECK(check_mild(koch_presentation(result.S)).verdict == Verdict::mild);
  CHECK(result.S.values() == std::vector<std::uint64_t>{5, 13, 41, 3, 23});
  const auto parallel = augment({13, 3}, {100000, 4});
  CHECK(parallel.S == result.S);
  CHECK(parallel.attempts == result.attempts);

  const Json j = to_json(result);
  CHECK(j["q_last"] == 23);
  CHECK(j["attempts"] == result.attempts);

  CHECK_THROWS_AS(augment({3}, {10, 1}), BoundExceeded);
  CHECK_THROWS_AS(augment({}, {}), InputError);
}

TEST_CASE("augmentation of larger seeds stays mild") {
  for (const std::set<std::uint64_t>& seed :
       {std::set<std::uint64_t>{3, 7}, std::set<std::uint64_t>{13, 17}, std::set<std::uint64_t>{5, 7, 11}}) {
    const auto result = augment(seed, {1'000'000, 2});
    const OrderedPrimeSet normalized = normalize_seed(seed);
    CHECK(result.S.size() == 2 * normalized.size() + 1);
    CHECK(validate_augmentation(normalized, result.q_aux, result.q_last).ok());
    CHECK(check_mild(koch_presentation(result.S)).verdict == Verdict::mild);
    for (auto p : seed) {
      const auto values = result.S.values();
      CHECK(std::find(values.begin(), values.end(), p) != values.end());
    }
  }
}
