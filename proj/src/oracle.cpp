#include "mild2/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "mild2/errors.hpp"
#include "mild2/gf2.hpp"

namespace mild2 {

namespace {

// Words packed 4 bits per letter (letter + 1), first letter in the low bits.
struct PackedWord {
  std::uint64_t bits = 0;
  int length = 0;
};

PackedWord pack(const std::vector<std::uint8_t>& word) {
  if (word.size() > 15) throw InputError("words longer than 15 letters are not supported");
  PackedWord p;
  for (auto letter : word) {
    p.bits |= static_cast<std::uint64_t>(letter + 1) << (4 * p.length);
    ++p.length;
  }
  return p;
}

PackedWord concat(PackedWord a, PackedWord b) {
  return {a.bits | (b.bits << (4 * a.length)), a.length + b.length};
}

std::uint64_t key(int pi, PackedWord w) { return (static_cast<std::uint64_t>(pi) << 60) | w.bits; }

constexpr int kMaxOracleDegree = 15;

// words_by_weight[n] = all words of weighted degree n.
std::vector<std::vector<PackedWord>> words_by_weight(const WeightedAlphabet& alphabet, int N) {
  std::vector<std::vector<PackedWord>> out(N + 1);
  out[0].push_back({});
  for (int n = 1; n <= N; ++n) {
    for (int letter = 0; letter < alphabet.size(); ++letter) {
      const int w = alphabet.weight(letter);
      if (w > n) continue;
      for (const PackedWord& tail : out[n - w]) {
        out[n].push_back(concat(PackedWord{static_cast<std::uint64_t>(letter + 1), 1}, tail));
      }
    }
  }
  return out;
}

struct RelatorTerms {
  int degree;
  std::vector<std::pair<int, PackedWord>> terms;  // (pi exponent, word)
};

}  // namespace

std::vector<std::uint64_t> RankProfile::quotient_dims() const {
  std::vector<std::uint64_t> out;
  for (const auto& d : degrees) out.push_back(d.quotient);
  return out;
}

std::uint64_t estimated_degree_bytes(std::uint64_t spanning_rows, std::uint64_t ambient) {
  const std::uint64_t words = Gf2Echelon::words_for(ambient);
  // Pivot rows plus one index per column.
  return std::min(spanning_rows, ambient) * words * 8 + ambient * 4;
}

RankProfile quotient_dims(const WeightedAlphabet& alphabet, std::span<const NcPoly> relators, int N, Ring ring,
                          const OracleOptions& options) {
  if (N < 0) throw InputError("truncation degree must be >= 0");
  if (N > kMaxOracleDegree) throw InputError("oracle degree is limited to " + std::to_string(kMaxOracleDegree));
  std::vector<RelatorTerms> rels;
  for (const NcPoly& r : relators) {
    if (!(r.algebra()->alphabet() == alphabet)) throw InputError("relator alphabet does not match");
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw InputError("relators must be homogeneous");
    RelatorTerms rt{r.degree(), {}};
    if (rt.degree < 2) throw InputError("relators must have degree >= 2");
    for (const auto& m : r.terms()) {
      if (m.pi > 0 && ring == Ring::F2) throw InputError("relator involves pi but the ring is F2");
      rt.terms.emplace_back(m.pi, pack(m.word));
    }
    rels.push_back(std::move(rt));
  }

  const auto words = words_by_weight(alphabet, N);
  const int max_pi = ring == Ring::F2pi ? N : 0;
  RankProfile profile{ring, {}};
  for (int n = 0; n <= N; ++n) {
    // Columns: pi^k w with k + weight(w) = n.
    std::unordered_map<std::uint64_t, std::uint32_t> column;
    for (int k = 0; k <= std::min(n, max_pi); ++k) {
      for (const PackedWord& w : words[n - k]) column.emplace(key(k, w), static_cast<std::uint32_t>(column.size()));
    }
    DegreeProfile dp{n, column.size(), 0, 0, 0};
    for (const auto& r : rels) {
      for (int k = 0; k <= std::min(n - r.degree, max_pi); ++k) {
        const int rest = n - r.degree - k;
        for (int a = 0; a <= rest; ++a) dp.spanning_rows += words[a].size() * words[rest - a].size();
      }
    }
    if (estimated_degree_bytes(dp.spanning_rows, dp.ambient) > options.memory_cap_bytes) {
      throw ResourceError("degree " + std::to_string(n) + " exceeds the memory cap (" +
                              std::to_string(options.memory_cap_bytes >> 20) + " MiB)",
                          n - 1);
    }

    Gf2Echelon ech(dp.ambient);
    std::vector<std::uint32_t> cols;
    for (const auto& r : rels) {
      for (int k = 0; k <= std::min(n - r.degree, max_pi); ++k) {
        const int rest = n - r.degree - k;
        for (int a = 0; a <= rest; ++a) {
          for (const PackedWord& u : words[a]) {
            for (const PackedWord& v : words[rest - a]) {
              cols.clear();
              for (const auto& [pi, w] : r.terms) cols.push_back(column.at(key(k + pi, concat(concat(u, w), v))));
              ech.insert_sparse(cols);
            }
          }
        }
      }
    }
    dp.rank = ech.rank();
    dp.quotient = dp.ambient - dp.rank;
    profile.degrees.push_back(dp);
  }
  return profile;
}

OracleComparison strongly_free_oracle(std::span<const QuadraticRelator> relators, int N, Ring ring,
                                      std::optional<int> d, const OracleOptions& options) {
  if (N < 2) throw InputError("oracle comparison needs N >= 2");
  if (!d) {
    if (relators.empty()) throw InputError("generator count is required for an empty relator list");
    d = relators.front().d();
  }
  for (const auto& r : relators) {
    if (r.d() != *d) throw InputError("relators disagree on the generator count");
  }
  const WeightedAlphabet alphabet = WeightedAlphabet::uniform(*d);
  const AlgebraPtr algebra = Algebra::create(alphabet, ring, 2);
  std::vector<NcPoly> polys;
  for (const auto& r : relators) polys.push_back(relator_to_poly(r, algebra));

  OracleComparison out;
  out.ring = ring;
  out.profile = quotient_dims(alphabet, polys, N, ring, options);
  out.observed = out.profile.quotient_dims();
  const WeightSignature sig = WeightSignature::uniform(*d, static_cast<int>(relators.size()));
  out.expected = ring == Ring::F2 ? strongly_free_series(sig, N) : gamma_series(sig, N);
  out.match = true;
  for (int n = 0; n <= N; ++n) {
    if (BigInt(out.observed[n]) != out.expected[n]) {
      out.match = false;
      out.mismatch_degree = n;
      break;
    }
  }
  return out;
}

std::size_t independent_in_degree(std::span<const NcPoly> polys) {
  std::optional<int> degree;
  std::unordered_map<std::uint64_t, std::uint32_t> column;
  std::vector<std::vector<std::uint32_t>> rows;
  for (const NcPoly& p : polys) {
    if (!polys.empty() && !(*p.algebra() == *polys.front().algebra())) throw InputError("elements live in different algebras");
    if (p.is_zero()) continue;
    if (degree && p.degree() != *degree) throw InputError("elements have different degrees");
    degree = p.degree();
    std::vector<std::uint32_t> row;
    for (const auto& m : p.terms()) {
      auto [it, _] = column.emplace(key(m.pi, pack(m.word)), static_cast<std::uint32_t>(column.size()));
      row.push_back(it->second);
    }
    rows.push_back(std::move(row));
  }
  Gf2Echelon ech(column.size());
  for (const auto& r : rows) ech.insert_sparse(r);
  return ech.rank();
}

}  // namespace mild2
