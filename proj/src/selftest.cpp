#include "mild2/selftest.hpp"

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "mild2/arith.hpp"
#include "mild2/augment.hpp"
#include "mild2/errors.hpp"
#include "mild2/linking.hpp"
#include "mild2/mildness.hpp"
#include "mild2/quadlie.hpp"
#include "mild2/series.hpp"

namespace mild2 {

std::vector<QuadraticRelator> cyclic_instance(int d) {
  std::vector<QuadraticRelator> out;
  for (int i = 0; i < d; ++i) {
    QuadraticRelator r(d, i);
    r.set_square(i, i % 2 == 1);
    r.set_comm(i, (i + 1) % d, true);
    out.push_back(r);
  }
  return out;
}

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

long peak_rss_mib() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss / 1024;
}

Presentation example(const std::vector<std::uint64_t>& primes) {
  return koch_presentation(OrderedPrimeSet::from_values(primes));
}

void example_fidelity(Outcome& out, const std::vector<std::uint64_t>& primes, const std::string& text,
                      const std::string& reduced) {
  const Presentation p = example(primes);
  out.require(presentation_text(p) == text, "presentation text differs:\n" + presentation_text(p));
  const Presentation q = eliminate_generator(p);
  out.require(presentation_text(q, true) == reduced, "reduced text differs:\n" + presentation_text(q, true));
  if (out.pass) out.detail << "5 relators, product relation and 4 reduced relators match";
}

void mildness_verdicts(Outcome& out) {
  const MildnessReport r1 = check_mild(example(fixtures::example1_primes));
  out.require(r1.verdict == Verdict::mild && r1.criterion == Criterion::circuit,
              "example 1: " + to_string(r1.verdict) + " via " + to_string(r1.criterion));
  const MildnessReport r2 = check_mild(example(fixtures::example2_primes));
  out.require(r2.verdict == Verdict::mild && r2.criterion == Criterion::rank,
              "example 2: " + to_string(r2.verdict) + " via " + to_string(r2.criterion));
  out.require(r2.witness && r2.witness->sp == std::vector<int>{2, 3}, "example 2 witness is not Sp = {3,4}");
  for (int d : {4, 6}) {
    const auto rels = cyclic_instance(d);
    out.require(circuit_criterion(rels) == CircuitResult::holds,
                "cyclic instance d=" + std::to_string(d) + " fails the circuit criterion");
    out.require(rank_criterion(rels, Partition::parity(d)),
                "cyclic instance d=" + std::to_string(d) + " fails the rank criterion on the parity split");
  }
  if (out.pass) out.detail << "example 1 circuit, example 2 rank with Sp={3,4}, cyclic d=4,6 circuit";
}

void oracle_agreement(Outcome& out, const SelftestOptions& options) {
  const int top = options.degree7 ? 7 : 6;
  for (const auto* primes : {&fixtures::example1_primes, &fixtures::example2_primes}) {
    const Presentation q = eliminate_generator(example(*primes));
    const auto f2 = strongly_free_oracle(q.relators, top, Ring::F2, std::nullopt, options.oracle);
    const std::vector<std::uint64_t> want(fixtures::strongly_free_d4_m4.begin(),
                                          fixtures::strongly_free_d4_m4.begin() + top + 1);
    out.require(f2.match && f2.observed == want, "F2 dims " + join(f2.observed));
    const auto pi = strongly_free_oracle(q.relators, 5, Ring::F2pi, std::nullopt, options.oracle);
    out.require(pi.match && pi.observed == fixtures::strongly_free_d4_m4_pi, "F2[pi] dims " + join(pi.observed));
  }
  out.require(peak_rss_mib() < 1024, "peak RSS " + std::to_string(peak_rss_mib()) + " MiB");
  if (out.pass) {
    out.detail << "F2 " << join(std::vector<std::uint64_t>(fixtures::strongly_free_d4_m4.begin(),
                                                           fixtures::strongly_free_d4_m4.begin() + top + 1))
               << "; F2[pi] " << join(fixtures::strongly_free_d4_m4_pi) << "; peak RSS " << peak_rss_mib()
               << " MiB";
  }
}

void negative_control(Outcome& out) {
  QuadraticRelator sq(2), cm(2);
  sq.set_square(0, true);
  cm.set_comm(0, 1, true);
  const std::vector<QuadraticRelator> rels{sq, cm};
  out.require(!find_mild_partition(rels).has_value(), "a partition was found");
  const auto cmp = strongly_free_oracle(rels, 4);
  out.require(!cmp.match && cmp.mismatch_degree == 3, "expected a mismatch at degree 3");
  if (cmp.observed.size() > 3) {
    out.require(cmp.observed[3] == 2 && cmp.expected[3] == 0,
                "degree 3: oracle " + std::to_string(cmp.observed[3]) + " vs series " + cmp.expected[3].str());
  }
  if (out.pass) out.detail << "no partition; mismatch at degree 3 (oracle 2 vs series 0)";
}

std::vector<BigInt> big(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

void series_engine(Outcome& out) {
  const auto sig = WeightSignature::uniform(4, 4);
  const auto b = reduced_dims_bn(sig, 4);
  out.require(std::vector<BigInt>(b.values.begin() + 1, b.values.end()) == big({6, 4, 6}), "b_2..b_4 wrong");
  out.require(lower_central_dims(sig, 4).values == big({4, 6, 10, 16}), "lower central dims wrong");
  out.require(zassenhaus_dims(4, 4, 3).values == big({4, 6, 4}), "Zassenhaus dims wrong");
  int checked = 0, skipped = 0;
  for (int d = 1; d <= 5; ++d) {
    for (int n2 = 0; n2 <= d; ++n2) {
      for (int n3 = 0; n2 + n3 <= d; ++n3) {
        std::vector<int> h(n2, 2);
        h.insert(h.end(), n3, 3);
        const WeightSignature s(std::vector<int>(d, 1), h);
        try {
          reduced_dims_bn(s, 10);
        } catch (const SeriesError&) {
          ++skipped;
          continue;
        }
        ++checked;
        out.require(verify_cent_g(s, 10), "verify_cent_g fails for d=" + std::to_string(d) + " h2=" +
                                              std::to_string(n2) + " h3=" + std::to_string(n3));
      }
    }
  }
  if (out.pass) out.detail << "b=(6,4,6), a=(4,6,10,16), zassenhaus (4,6,4); " << checked << " signatures, " << skipped
                           << " skipped";
}

void basis_coverage(Outcome& out) {
  int alphabets = 0, elements = 0, elim_sets = 0;
  for (int d = 1; d <= 4; ++d) {
    for (int ones = 0; ones <= d; ++ones) {
      std::vector<int> w(ones, 1);
      w.insert(w.end(), d - ones, 2);
      const WeightedAlphabet alphabet(w);
      ++alphabets;
      const auto Y = enumerate_Y(alphabet, 6);
      const IntSeries gf = basis_generating_function(alphabet, 6);
      const AlgebraPtr algebra = Algebra::create(alphabet, Ring::F2, 6, true);
      std::map<int, std::vector<NcPoly>> by_degree;
      for (const auto& y : Y) by_degree[y.degree].push_back(evaluate(y.word, algebra));
      for (int n = 0; n <= 6; ++n) {
        const auto count = by_degree.count(n) ? by_degree[n].size() : 0;
        elements += static_cast<int>(count);
        std::string where = " (weights " + std::to_string(ones) + "x1," + std::to_string(d - ones) + "x2, degree " +
                            std::to_string(n) + ")";
        out.require(BigInt(count) == gf[n], "count " + std::to_string(count) + " vs " + gf[n].str() + where);
        if (count) out.require(independent_in_degree(by_degree[n]) == count, "dependent basis images" + where);
      }
      for (unsigned mask = 0; mask + 1 < (1u << d); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < d; ++i) {
          if (mask >> i & 1) subset.push_back(i);
        }
        const AlgebraPtr a5 = Algebra::create(alphabet, Ring::F2, 5, true);
        std::map<int, std::vector<NcPoly>> elim;
        for (const auto& word : elimination_basis(alphabet, subset, 5)) {
          elim[word.weight(alphabet)].push_back(evaluate(word, a5));
        }
        for (const auto& [n, polys] : elim) {
          out.require(independent_in_degree(polys) == polys.size(),
                      "dependent elimination basis in degree " + std::to_string(n));
        }
        ++elim_sets;
      }
    }
  }
  if (out.pass) out.detail << alphabets << " alphabets, " << elements << " basis elements, " << elim_sets
                           << " elimination subsets";
}

void augmentation(Outcome& out, const SelftestOptions& options) {
  const OrderedPrimeSet seed = normalize_seed({13, 3});
  const auto report = validate_augmentation(seed, {OddPrime(41), OddPrime(5)}, OddPrime(19));
  out.require(report.ok(), "(41,5,19) rejected");
  out.require(try_augmentation({13, 3}, {OddPrime(41), OddPrime(5)}, OddPrime(19)).has_value(),
              "(41,5,19) interleaving is not certified mild");
  const auto first = augment({13, 3}, {100000, 1});
  const auto again = augment({13, 3}, {100000, 1});
  const auto wide = augment({13, 3}, {100000, std::max(2u, options.threads)});
  out.require(first.S == again.S && first.S == wide.S && first.attempts == wide.attempts,
              "result depends on the run or the thread count");
  out.require(validate_augmentation(seed, first.q_aux, first.q_last).ok(), "result fails validation");
  out.require(check_mild(koch_presentation(first.S)).verdict == Verdict::mild, "result is not mild");
  if (out.pass) out.detail << "(41,5,19) accepted; greedy S = (" << join(first.S.values()) << "), "
                           << first.attempts << " attempt(s)";
}

NcPoly random_linear(std::mt19937_64& rng, const AlgebraPtr& a) {
  NcPoly u(a);
  for (int i = 0; i < a->alphabet().size(); ++i) {
    if (rng() & 1) u = u + NcPoly::generator(a, i);
  }
  return u;
}

NcPoly random_homogeneous(std::mt19937_64& rng, const AlgebraPtr& a, int degree) {
  NcPoly u(a);
  const int d = a->alphabet().size();
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    const int pi = a->ring() == Ring::F2pi ? static_cast<int>(rng() % degree) : 0;
    std::vector<std::uint8_t> word;
    for (int k = pi; k < degree; ++k) word.push_back(static_cast<std::uint8_t>(rng() % d));
    u.toggle(Monomial{degree, pi, word});
  }
  return u;
}

void identity_suites(Outcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int cases = 1000;
  const AlgebraPtr f2 = Algebra::create(WeightedAlphabet::uniform(3), Ring::F2, 8);
  const AlgebraPtr mixed = Algebra::create(WeightedAlphabet::uniform(3), Ring::F2pi, 8);
  int ql1 = 0, ql2 = 0, mix1 = 0, mixn = 0, leg = 0, rec = 0;
  for (int c = 0; c < cases; ++c) {
    const NcPoly u = random_linear(rng, f2), v = random_linear(rng, f2);
    ql1 += P_quad(u + v) == P_quad(u) + P_quad(v) + bracket(u, v);
    const NcPoly w = random_homogeneous(rng, f2, 1 + static_cast<int>(rng() % 4));
    ql2 += bracket(P_quad(u), w) == bracket(u, bracket(u, w));

    const NcPoly xi = random_linear(rng, mixed);
    const NcPoly eta = random_homogeneous(rng, mixed, 1 + static_cast<int>(rng() % 3));
    mix1 += bracket(P_mixed(xi), eta) == P_mixed(bracket(xi, eta)) + bracket(xi, bracket(xi, eta));
    const NcPoly heavy = random_homogeneous(rng, mixed, 2 + static_cast<int>(rng() % 2));
    mixn += bracket(P_mixed(heavy), eta) == P_mixed(bracket(heavy, eta));
  }

  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 3; p < 200; p += 2) {
    if (is_prime(p)) primes.push_back(p);
  }
  for (int c = 0; c < cases; ++c) {
    const OddPrime p(primes[rng() % primes.size()]);
    const std::int64_t a = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const std::uint64_t r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p.value())) +
                                                        static_cast<std::int64_t>(p.value())) %
                                                       static_cast<std::int64_t>(p.value()));
    int expected = r == 0 ? 0 : -1;
    for (std::uint64_t x = 1; x < p.value() && expected == -1; ++x) {
      if (x * x % p.value() == r) expected = 1;
    }
    leg += legendre(a, p) == expected;
  }
  std::vector<std::uint64_t> small;
  for (auto p : primes) {
    if (p < 100) small.push_back(p);
  }
  for (int c = 0; c < cases; ++c) {
    const std::uint64_t p = small[rng() % small.size()];
    std::uint64_t q = small[rng() % small.size()];
    while (q == p) q = small[rng() % small.size()];
    const int sign = ((p - 1) / 2 * ((q - 1) / 2)) % 2 ? -1 : 1;
    rec += legendre(static_cast<std::int64_t>(p), OddPrime(q)) * legendre(static_cast<std::int64_t>(q), OddPrime(p)) ==
           sign;
  }
  const std::map<std::string, int> tallies{{"QL1", ql1},          {"QL2", ql2},      {"mixed deg 1", mix1},
                                           {"mixed deg > 1", mixn}, {"legendre", leg}, {"reciprocity", rec}};
  for (const auto& [name, passed] : tallies) {
    out.require(passed == cases, name + " " + std::to_string(passed) + "/" + std::to_string(cases));
  }
  if (out.pass) out.detail << "6 suites x " << cases << " cases";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SelftestOptions& options) {
  struct Entry {
    int id;
    std::string name;
    double limit;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Entry> entries{
      {1, "example 1 fidelity", 1,
       [](Outcome& o) {
         example_fidelity(o, fixtures::example1_primes, fixtures::example1_text, fixtures::example1_reduced_text);
       }},
      {2, "example 2 fidelity", 1,
       [](Outcome& o) {
         example_fidelity(o, fixtures::example2_primes, fixtures::example2_text, fixtures::example2_reduced_text);
       }},
      {3, "mildness verdicts", 1, mildness_verdicts},
      {4, "oracle agreement", options.degree7 ? 190.0 : 70.0, [&](Outcome& o) { oracle_agreement(o, options); }},
      {5, "negative control", 1, negative_control},
      {6, "series engine", 1, series_engine},
      {7, "basis coverage", 30, basis_coverage},
      {8, "augmentation", 10, [&](Outcome& o) { augmentation(o, options); }},
      {9, "identity suites", 60, [&](Outcome& o) { identity_suites(o, options.seed); }},
  };

  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.body(out);
    } catch (const std::exception& ex) {
      out.require(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs < e.limit, "over time limit");
    results.push_back({e.id, e.name, out.pass, secs, e.limit, out.detail.str()});
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "%s  %d  %-20s (%.3f s / %g s)  ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.limit_seconds);
  std::string detail = r.detail;
  for (auto& ch : detail) {
    if (ch == '\n') ch = ' ';
  }
  return head + detail;
}

}  // namespace mild2
