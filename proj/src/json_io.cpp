#include "mild2/json_io.hpp"

#include <limits>

#include "mild2/errors.hpp"

namespace mild2 {

namespace {

Json one_based(const std::vector<int>& indices) {
  Json out = Json::array();
  for (int i : indices) out.push_back(i + 1);
  return out;
}

Json bits(const std::vector<std::uint8_t>& v) {
  Json out = Json::array();
  for (auto b : v) out.push_back(int{b});
  return out;
}

int read_index(const Json& j, int d, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const int i = j.get<int>();
  if (i < 1 || i > d) throw InputError(std::string(what) + " out of range: " + std::to_string(i));
  return i - 1;
}

bool read_bit(const Json& j, const char* what) {
  if (!j.is_number_integer() || (j.get<int>() != 0 && j.get<int>() != 1)) {
    throw InputError(std::string(what) + " must be 0 or 1");
  }
  return j.get<int>() == 1;
}

QuadraticRelator relator_from_json(const Json& j, int d) {
  if (!j.is_object()) throw InputError("relator must be an object");
  std::optional<int> owner;
  if (j.contains("owner") && !j["owner"].is_null()) owner = read_index(j["owner"], d, "owner");
  QuadraticRelator r(d, owner);
  if (j.contains("square")) {
    if (!owner) throw InputError("\"square\" needs an owner; use \"squares\"");
    r.set_square(*owner, read_bit(j["square"], "square"));
  }
  if (j.contains("squares")) {
    for (const auto& s : j["squares"]) r.set_square(read_index(s, d, "square index"), true);
  }
  if (j.contains("comms")) {
    for (const auto& c : j["comms"]) {
      if (!c.is_array() || c.size() != 2) throw InputError("commutator must be a pair [i, j]");
      const int a = read_index(c[0], d, "commutator index");
      const int b = read_index(c[1], d, "commutator index");
      if (a == b) throw InputError("commutator [xi, xi] is not allowed");
      r.toggle_comm(a, b);
    }
  }
  return r;
}

Json relator_to_json(const QuadraticRelator& r) {
  Json out = Json::object();
  std::vector<int> squares;
  for (int i = 0; i < r.d(); ++i) {
    if (r.square(i) && i != r.owner()) squares.push_back(i);
  }
  if (r.owner()) {
    out["owner"] = *r.owner() + 1;
    out["square"] = r.square(*r.owner()) ? 1 : 0;
  }
  if (!squares.empty() || !r.owner()) out["squares"] = one_based(squares);
  Json comms = Json::array();
  const int o = r.owner().value_or(-1);
  if (o >= 0) {
    for (int j = 0; j < r.d(); ++j) {
      if (j != o && r.comm(o, j)) comms.push_back({o + 1, j + 1});
    }
  }
  for (int i = 0; i < r.d(); ++i) {
    for (int j = i + 1; j < r.d(); ++j) {
      if (i != o && j != o && r.comm(i, j)) comms.push_back({i + 1, j + 1});
    }
  }
  out["comms"] = comms;
  return out;
}

}  // namespace

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

Json to_json(const LinkingData& data, const OrderedPrimeSet& primes) {
  Json ell = Json::array();
  for (const auto& row : data.ell) ell.push_back(bits(row));
  return Json{{"primes", primes.values()}, {"a", bits(data.a)}, {"ell", ell}};
}

Json to_json(const Presentation& p) {
  Json out = Json::object();
  if (!p.provenance.primes.empty()) {
    const OrderedPrimeSet primes = OrderedPrimeSet::from_values(p.provenance.primes);
    out = to_json(linking_data(primes), primes);
  }
  out["d"] = p.d;
  Json rel = Json::array();
  for (const auto& r : p.relators) rel.push_back(relator_to_json(r));
  out["relators"] = rel;
  if (p.product_relation) out["product_relation"] = bits(*p.product_relation);
  if (!p.provenance.eliminated.empty()) {
    out["eliminated"] = one_based(p.provenance.eliminated);
    out["labels"] = one_based(p.provenance.labels);
  }
  return out;
}

Presentation presentation_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("presentation must be a JSON object");
  std::optional<OrderedPrimeSet> primes;
  if (j.contains("primes")) {
    try {
      primes = OrderedPrimeSet::from_values(j["primes"].get<std::vector<std::uint64_t>>());
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("primes: ") + e.what());
    }
  }
  if (primes && !j.contains("relators")) return koch_presentation(*primes);

  Presentation p;
  if (j.contains("d")) {
    if (!j["d"].is_number_integer() || j["d"].get<int>() < 0) throw InputError("d must be a nonnegative integer");
    p.d = j["d"].get<int>();
  } else if (primes) {
    p.d = static_cast<int>(primes->size());
  } else if (j.contains("product_relation")) {
    p.d = static_cast<int>(j["product_relation"].size());
  } else {
    throw InputError("presentation needs \"d\", \"primes\" or \"product_relation\"");
  }
  if (p.d > 15) throw InputError("at most 15 generators are supported");
  if (!j.contains("relators") || !j["relators"].is_array()) throw InputError("relators must be an array");
  for (const auto& r : j["relators"]) p.relators.push_back(relator_from_json(r, p.d));

  if (j.contains("product_relation") && !j["product_relation"].is_null()) {
    const auto& pr = j["product_relation"];
    if (!pr.is_array() || static_cast<int>(pr.size()) != p.d) {
      throw InputError("product_relation must have one entry per generator");
    }
    std::vector<std::uint8_t> c;
    for (const auto& b : pr) c.push_back(read_bit(b, "product_relation entry"));
    p.product_relation = c;
  }
  if (j.contains("eliminated")) {
    for (const auto& e : j["eliminated"]) {
      if (!e.is_number_integer() || e.get<int>() < 1) throw InputError("eliminated labels must be positive");
      p.provenance.eliminated.push_back(e.get<int>() - 1);
    }
  }
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) {
      if (!l.is_number_integer() || l.get<int>() < 1) throw InputError("labels must be positive");
      p.provenance.labels.push_back(l.get<int>() - 1);
    }
    if (static_cast<int>(p.provenance.labels.size()) != p.d) throw InputError("labels must have d entries");
  } else {
    for (int i = 0; i < p.d; ++i) p.provenance.labels.push_back(i);
  }
  if (primes) p.provenance.primes = primes->values();
  return p;
}

Json to_json(const Partition& part) { return Json{{"S", one_based(part.s)}, {"Sp", one_based(part.sp)}}; }

Json to_json(const MildnessReport& report) {
  Json out{{"verdict", to_string(report.verdict)}, {"criterion", to_string(report.criterion)}};
  out["witness"] = report.witness ? to_json(*report.witness) : Json(nullptr);
  out["oracle_depth"] = report.oracle_depth ? Json(*report.oracle_depth) : Json(nullptr);
  if (report.oracle_match) out["oracle_match"] = *report.oracle_match;
  out["notes"] = report.notes;
  out["checked"] = to_json(report.checked);
  return out;
}

Json to_json(const RankProfile& profile) {
  Json degrees = Json::array();
  for (const auto& d : profile.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"ambient", d.ambient},
                       {"spanning_rows", d.spanning_rows},
                       {"rank", d.rank},
                       {"quotient", d.quotient}});
  }
  return Json{{"ring", to_string(profile.ring)}, {"degrees", degrees}};
}

Json to_json(const OracleComparison& cmp) {
  Json out{{"ring", to_string(cmp.ring)}, {"match", cmp.match}};
  out["mismatch_degree"] = cmp.mismatch_degree ? Json(*cmp.mismatch_degree) : Json(nullptr);
  Json rows = Json::array();
  for (std::size_t n = 0; n < cmp.observed.size(); ++n) {
    rows.push_back({{"n", n}, {"observed", cmp.observed[n]}, {"expected", big_to_json(cmp.expected[static_cast<int>(n)])}});
  }
  out["dims"] = rows;
  out["profile"] = to_json(cmp.profile);
  return out;
}

Json to_json(const DimensionSequence& dims) {
  Json values = Json::array();
  for (int n = 1; n <= dims.max_index(); ++n) values.push_back({{"n", n}, {"value", big_to_json(dims.value(n))}});
  Json out{{"kind", to_string(dims.kind)}, {"values", values}};
  if (dims.kind == DimensionKind::lower_central_a) {
    out["interpretation"] = "a_1 = number of weight-one generators; a_n = b_2 + ... + b_n read as dim L_n(G)";
  }
  return out;
}

Json series_to_json(const IntSeries& series, const std::string& kind) {
  Json values = Json::array();
  for (int n = 0; n <= series.order(); ++n) values.push_back({{"n", n}, {"value", big_to_json(series[n])}});
  return Json{{"kind", kind}, {"values", values}};
}

Json to_json(const AugmentationResult& result) {
  std::vector<std::uint64_t> aux;
  for (const auto& q : result.q_aux) aux.push_back(q.value());
  return Json{{"S", result.S.values()},
              {"q_aux", aux},
              {"q_last", result.q_last.value()},
              {"attempts", result.attempts}};
}

}  // namespace mild2
