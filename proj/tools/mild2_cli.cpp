// mild2: Koch presentations, mildness checks, series and the quotient-algebra oracle.
//
// Exit codes: 0 success (mild / oracle match), 2 input error, 3 not shown / mismatch /
// series diagnostic, 4 inapplicable, 5 resource guard or search bound exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mild2/augment.hpp"
#include "mild2/errors.hpp"
#include "mild2/json_io.hpp"
#include "mild2/linking.hpp"
#include "mild2/mildness.hpp"
#include "mild2/oracle.hpp"
#include "mild2/quadlie.hpp"
#include "mild2/selftest.hpp"
#include "mild2/series.hpp"

using namespace mild2;

namespace {

enum Exit { ok = 0, input = 2, negative = 3, inapplicable = 4, resource = 5 };

struct Config {
  std::vector<std::uint64_t> primes;
  std::string input;
  std::string format;
  int max_degree = 6;
  std::uint64_t bound = 1'000'000;
  std::uint64_t memory_cap_mib = 1024;
  bool memory_cap_given = false;
};

bool json_format(const Config& c, bool json_default) { return c.format.empty() ? json_default : c.format == "json"; }

OracleOptions oracle_options(const Config& c) {
  std::uint64_t mib = c.memory_cap_mib;
  if (!c.memory_cap_given) {
    if (const char* env = std::getenv("MILD2_MEMORY_CAP_MIB")) {
      try {
        mib = std::stoull(env);
      } catch (const std::exception&) {
        throw InputError("MILD2_MEMORY_CAP_MIB must be a positive integer");
      }
    }
  }
  if (mib == 0) throw InputError("memory cap must be positive");
  return OracleOptions{mib << 20};
}

Presentation load(const Config& c) {
  if (!c.primes.empty() && !c.input.empty()) throw InputError("give either --primes or --input, not both");
  if (!c.primes.empty()) return koch_presentation(OrderedPrimeSet::from_values(c.primes));
  if (c.input.empty()) throw InputError("a presentation is required: --primes or --input");
  std::ifstream in(c.input);
  if (!in) throw InputError("cannot open " + c.input);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return presentation_from_json(j);
}

Presentation reduced(const Presentation& p) {
  return p.product_relation && default_elimination_index(p) ? eliminate_generator(p) : p;
}

std::string indices(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + 1);
  return out + "}";
}

void print_values(std::ostream& os, const std::vector<BigInt>& values, int first_n) {
  for (std::size_t k = 0; k < values.size(); ++k) os << (first_n + static_cast<int>(k)) << ": " << values[k] << '\n';
}

WeightSignature signature(const std::vector<int>& e, const std::vector<int>& h, int d, int m) {
  if (!e.empty() || !h.empty()) return WeightSignature(e, h);
  if (d < 0 || m < 0) throw InputError("give --weights/--degrees or --d/--m");
  return WeightSignature::uniform(d, m);
}

Ring parse_ring(const std::string& s) {
  if (s == "f2") return Ring::F2;
  if (s == "f2pi") return Ring::F2pi;
  throw InputError("ring must be f2 or f2pi");
}

void add_presentation_input(CLI::App* sub, Config& c) {
  sub->add_option("--primes", c.primes, "Ordered odd primes p1,p2,...")->delimiter(',');
  sub->add_option("--input", c.input, "Presentation JSON file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mildness certificates for 2-extensions with restricted ramification"};
  app.require_subcommand(1);
  Config c;
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-degree", c.max_degree, "Largest degree computed")->check(CLI::PositiveNumber);
  app.add_option("--bound", c.bound, "Prime search bound")->check(CLI::PositiveNumber);
  app.add_option_function<std::uint64_t>(
         "--memory-cap-mib",
         [&](std::uint64_t v) {
           c.memory_cap_mib = v;
           c.memory_cap_given = true;
         },
         "Oracle memory cap in MiB (default 1024, or MILD2_MEMORY_CAP_MIB)")
      ->check(CLI::PositiveNumber);
  app.fallthrough();

  auto* linking = app.add_subcommand("linking", "Linking data a_i and l_ij");
  linking->add_option("--primes", c.primes)->delimiter(',')->required();

  auto* present = app.add_subcommand("present", "Koch presentation");
  add_presentation_input(present, c);

  auto* reduce = app.add_subcommand("reduce", "Eliminate one generator through the product relation");
  add_presentation_input(reduce, c);
  int eliminate_at = 0;
  reduce->add_option("--eliminate", eliminate_at, "Generator to eliminate (default: last in the product relation)")
      ->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check-mild", "Circuit and rank criteria");
  add_presentation_input(check, c);
  int oracle_depth = 0;
  check->add_option("--oracle-depth", oracle_depth, "Confirm with the oracle through this degree")
      ->check(CLI::Range(1, 15));

  auto* aug = app.add_subcommand("augment", "Enlarge a prime set to one with a mild group");
  std::vector<std::uint64_t> seed;
  std::vector<std::uint64_t> candidate;
  unsigned threads = 1;
  aug->add_option("--seed", seed, "Initial primes")->delimiter(',')->required();
  aug->add_option("--candidate", candidate, "Test only q_1',...,q_m',q_{m+1}")->delimiter(',');
  aug->add_option("--threads", threads, "Concurrent mildness checks")->check(CLI::Range(1u, 64u));

  std::vector<int> e, h;
  int d = -1, m = -1;
  auto* series = app.add_subcommand("series", "Hilbert series and the lower 2-central check");
  std::string series_kind = "strongly-free";
  series->add_option("--kind", series_kind)->check(CLI::IsMember({"strongly-free", "gamma", "cent-check"}));
  series->add_option("--weights", e, "Generator weights")->delimiter(',');
  series->add_option("--degrees", h, "Relator degrees")->delimiter(',');
  series->add_option("--d", d, "Generators of weight 1");
  series->add_option("--m", m, "Relators of degree 2");

  auto* dims = app.add_subcommand("dims", "Dimensions of the graded pieces");
  std::string dims_kind = "lower-central";
  dims->add_option("--kind", dims_kind)->check(CLI::IsMember({"reduced-b", "lower-central", "zassenhaus"}));
  dims->add_option("--weights", e)->delimiter(',');
  dims->add_option("--degrees", h)->delimiter(',');
  dims->add_option("--d", d);
  dims->add_option("--m", m);
  for (auto* sub : {series, dims}) sub->add_option("--max", c.max_degree, "Largest n")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Quotient dimensions against the strongly free series");
  add_presentation_input(oracle, c);
  std::string ring_name = "f2";
  oracle->add_option("--ring", ring_name)->check(CLI::IsMember({"f2", "f2pi"}));

  auto* basis = app.add_subcommand("basis", "Free Lie basis Y, or an elimination basis with --subset");
  std::vector<int> weights{1, 1};
  std::vector<int> subset;
  bool use_subset = false;
  basis->add_option("--weights", weights, "Generator weights, nondecreasing")->delimiter(',');
  basis->add_option_function<std::vector<int>>(
      "--subset",
      [&](const std::vector<int>& v) {
        subset = v;
        use_subset = true;
      },
      "Generators to ad by (1-based)")
      ->delimiter(',');

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  bool degree7 = false;
  selftest->add_flag("--degree7", degree7, "Include the degree-7 oracle run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? Exit::ok : Exit::input;
  }

  try {
    std::ostream& os = std::cout;
    if (*linking) {
      const auto primes = OrderedPrimeSet::from_values(c.primes);
      const LinkingData data = linking_data(primes);
      if (json_format(c, false)) {
        os << to_json(data, primes).dump(2) << '\n';
      } else {
        os << "a =";
        for (auto v : data.a) os << ' ' << int{v};
        os << "\nell =\n";
        for (const auto& row : data.ell) {
          for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "  ") << int{row[j]};
          os << '\n';
        }
      }
      return Exit::ok;
    }
    if (*present) {
      const Presentation p = load(c);
      if (json_format(c, false)) {
        os << to_json(p).dump(2) << '\n';
      } else {
        os << presentation_text(p);
      }
      return Exit::ok;
    }
    if (*reduce) {
      const Presentation p = load(c);
      const Presentation q =
          eliminate_generator(p, eliminate_at ? std::optional<int>(eliminate_at - 1) : std::nullopt);
      if (json_format(c, false)) {
        os << to_json(q).dump(2) << '\n';
      } else {
        os << presentation_text(q, true);
      }
      return Exit::ok;
    }
    if (*check) {
      CheckOptions opts;
      if (oracle_depth) opts.oracle_depth = oracle_depth;
      opts.oracle = oracle_options(c);
      const MildnessReport r = check_mild(load(c), opts);
      if (json_format(c, false)) {
        os << to_json(r).dump(2) << '\n';
      } else {
        os << "verdict: " << to_string(r.verdict) << "\ncriterion: " << to_string(r.criterion) << '\n';
        if (r.witness) os << "witness: S = " << indices(r.witness->s) << ", Sp = " << indices(r.witness->sp) << '\n';
        if (r.oracle_match) os << "oracle: " << (*r.oracle_match ? "match" : "mismatch") << '\n';
        for (const auto& n : r.notes) os << "note: " << n << '\n';
      }
      if (r.oracle_match == false) return Exit::negative;
      switch (r.verdict) {
        case Verdict::mild: return Exit::ok;
        case Verdict::not_shown: return Exit::negative;
        case Verdict::inapplicable: return Exit::inapplicable;
      }
    }
    if (*aug) {
      const std::set<std::uint64_t> seed_set(seed.begin(), seed.end());
      std::optional<AugmentationResult> result;
      if (!candidate.empty()) {
        std::vector<OddPrime> q_aux;
        for (std::size_t i = 0; i + 1 < candidate.size(); ++i) q_aux.emplace_back(candidate[i]);
        const auto accepted = try_augmentation(seed_set, q_aux, OddPrime(candidate.back()));
        if (!accepted) {
          const auto report = validate_augmentation(normalize_seed(seed_set), q_aux, OddPrime(candidate.back()));
          for (const auto& v : report.violations) std::cerr << "violation: " << v << '\n';
          if (report.ok()) std::cerr << "candidate validates but is not certified mild\n";
          return Exit::negative;
        }
        result = accepted;
      } else {
        result = augment(seed_set, AugmentOptions{c.bound, threads});
      }
      if (json_format(c, true)) {
        os << to_json(*result).dump(2) << '\n';
      } else {
        const Json j = to_json(*result);
        os << "S = " << j["S"].dump() << "\nq_aux = " << j["q_aux"].dump() << "\nq_last = " << result->q_last.value()
           << "\nattempts = " << result->attempts << '\n';
      }
      return Exit::ok;
    }
    if (*series) {
      const WeightSignature sig = signature(e, h, d, m);
      if (series_kind == "cent-check") {
        const bool holds = verify_cent_g(sig, c.max_degree);
        if (json_format(c, true)) {
          os << Json{{"kind", "cent-check"}, {"max", c.max_degree}, {"holds", holds}}.dump(2) << '\n';
        } else {
          os << "cent-check through " << c.max_degree << ": " << (holds ? "holds" : "fails") << '\n';
        }
        return holds ? Exit::ok : Exit::negative;
      }
      const IntSeries s =
          series_kind == "gamma" ? gamma_series(sig, c.max_degree) : strongly_free_series(sig, c.max_degree);
      if (json_format(c, true)) {
        os << series_to_json(s, series_kind).dump(2) << '\n';
      } else {
        print_values(os, s.c, 0);
      }
      return Exit::ok;
    }
    if (*dims) {
      DimensionSequence seq;
      if (dims_kind == "zassenhaus") {
        if (d < 0 || m < 0) throw InputError("zassenhaus needs --d and --m");
        seq = zassenhaus_dims(d, m, c.max_degree);
      } else {
        const WeightSignature sig = signature(e, h, d, m);
        seq = dims_kind == "reduced-b" ? reduced_dims_bn(sig, c.max_degree) : lower_central_dims(sig, c.max_degree);
      }
      if (json_format(c, false)) {
        os << to_json(seq).dump(2) << '\n';
      } else {
        print_values(os, seq.values, 1);
      }
      return Exit::ok;
    }
    if (*oracle) {
      const Presentation q = reduced(load(c));
      const auto cmp = strongly_free_oracle(q.relators, c.max_degree, parse_ring(ring_name), q.d, oracle_options(c));
      if (json_format(c, false)) {
        os << to_json(cmp).dump(2) << '\n';
      } else {
        os << "ring " << to_string(cmp.ring) << "\n  n    ambient       rows       rank   quotient   expected\n";
        for (const auto& deg : cmp.profile.degrees) {
          char line[128];
          std::snprintf(line, sizeof line, "%3d %10llu %10llu %10llu %10llu ", deg.degree,
                        static_cast<unsigned long long>(deg.ambient), static_cast<unsigned long long>(deg.spanning_rows),
                        static_cast<unsigned long long>(deg.rank), static_cast<unsigned long long>(deg.quotient));
          os << line << std::setw(10) << cmp.expected[deg.degree].str() << '\n';
        }
        os << (cmp.match ? "match" : "mismatch at degree " + std::to_string(*cmp.mismatch_degree)) << '\n';
      }
      return cmp.match ? Exit::ok : Exit::negative;
    }
    if (*basis) {
      const WeightedAlphabet alphabet(weights);
      Json out = Json::array();
      if (use_subset) {
        std::vector<int> zero_based;
        for (int s : subset) {
          if (s < 1 || s > alphabet.size()) throw InputError("subset index out of range");
          zero_based.push_back(s - 1);
        }
        for (const auto& w : elimination_basis(alphabet, zero_based, c.max_degree)) {
          out.push_back({{"degree", w.weight(alphabet)}, {"word", w.to_string()}});
        }
      } else {
        for (const auto& y : enumerate_Y(alphabet, c.max_degree)) {
          out.push_back({{"family", y.family}, {"degree", y.degree}, {"word", y.word.to_string()}});
        }
      }
      if (json_format(c, false)) {
        os << out.dump(2) << '\n';
      } else {
        for (const auto& item : out) {
          os << item["degree"].get<int>() << "  ";
          if (item.contains("family")) os << "(" << item["family"].get<int>() << ")  ";
          os << item["word"].get<std::string>() << '\n';
        }
      }
      return Exit::ok;
    }
    if (*selftest) {
      SelftestOptions opts;
      opts.degree7 = degree7;
      opts.oracle = oracle_options(c);
      bool all = true;
      for (const auto& r : run_acceptance(opts)) {
        os << format_result(r) << '\n';
        all = all && r.pass;
      }
      return all ? Exit::ok : Exit::negative;
    }
  } catch (const ResourceError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return Exit::resource;
  } catch (const BoundExceeded& err) {
    std::cerr << "error: " << err.what() << '\n';
    return Exit::resource;
  } catch (const SeriesError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return Exit::negative;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return Exit::input;
  }
  return Exit::input;
}
