#include "mild2/linking.hpp"

#include <algorithm>
#include <sstream>

#include "mild2/errors.hpp"

namespace mild2 {

OrderedPrimeSet::OrderedPrimeSet(std::vector<OddPrime> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw InputError("prime set must be nonempty");
  std::vector<OddPrime> sorted = primes_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("prime set has repeated entries");
  }
}

OrderedPrimeSet OrderedPrimeSet::from_values(const std::vector<std::uint64_t>& values) {
  std::vector<OddPrime> primes;
  primes.reserve(values.size());
  for (auto v : values) primes.emplace_back(v);
  return OrderedPrimeSet(std::move(primes));
}

std::vector<std::uint64_t> OrderedPrimeSet::values() const {
  std::vector<std::uint64_t> out;
  for (const auto& p : primes_) out.push_back(p.value());
  return out;
}

QuadraticRelator::QuadraticRelator(int d, std::optional<int> owner)
    : d_(d), owner_(owner), squares_(d, 0), comms_(d > 1 ? d * (d - 1) / 2 : 0, 0) {
  if (d < 0) throw InputError("generator count must be nonnegative");
  if (owner && (*owner < 0 || *owner >= d)) throw InputError("relator owner out of range");
}

std::size_t QuadraticRelator::pair_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  // Rows 0..i-1 hold (d-1) + (d-2) + ... + (d-i) entries.
  return static_cast<std::size_t>(i) * (2 * d_ - i - 1) / 2 + (j - i - 1);
}

bool QuadraticRelator::comm(int i, int j) const {
  if (i == j) return false;
  return comms_[pair_index(i, j)] != 0;
}

void QuadraticRelator::set_comm(int i, int j, bool v) {
  if (i == j) {
    if (v) throw InputError("[x_i, x_i] is not a basis commutator");
    return;
  }
  comms_[pair_index(i, j)] = v;
}

bool QuadraticRelator::is_zero() const {
  return std::none_of(squares_.begin(), squares_.end(), [](auto b) { return b; }) &&
         std::none_of(comms_.begin(), comms_.end(), [](auto b) { return b; });
}

bool QuadraticRelator::has_koch_shape(int i) const {
  for (int a = 0; a < d_; ++a) {
    if (a != i && square(a)) return false;
    for (int b = a + 1; b < d_; ++b) {
      if (comm(a, b) && a != i && b != i) return false;
    }
  }
  return true;
}

QuadraticRelator QuadraticRelator::without_generator(int t) const {
  std::optional<int> owner;
  if (owner_ && *owner_ != t) owner = *owner_ > t ? *owner_ - 1 : *owner_;
  QuadraticRelator out(d_ - 1, owner);
  auto shift = [t](int i) { return i > t ? i - 1 : i; };
  for (int a = 0; a < d_; ++a) {
    if (a == t) continue;
    out.set_square(shift(a), square(a));
    for (int b = a + 1; b < d_; ++b) {
      if (b != t) out.set_comm(shift(a), shift(b), comm(a, b));
    }
  }
  return out;
}

LinkingData linking_data(const OrderedPrimeSet& primes) {
  const std::size_t n = primes.size();
  LinkingData out;
  out.a.resize(n);
  out.ell.assign(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    out.a[i] = primes[i].value() % 4 == 3;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) out.ell[i][j] = legendre(static_cast<std::int64_t>(primes[i].value()), primes[j]) == -1;
    }
  }
  return out;
}

Presentation koch_presentation(const OrderedPrimeSet& primes) {
  const LinkingData link = linking_data(primes);
  const int n = static_cast<int>(primes.size());
  Presentation p;
  p.d = n;
  for (int i = 0; i < n; ++i) {
    QuadraticRelator r(n, i);
    r.set_square(i, link.a[i]);
    for (int j = 0; j < n; ++j) {
      if (j != i && link.ell[i][j]) r.set_comm(i, j, true);
    }
    p.relators.push_back(std::move(r));
  }
  p.product_relation = link.a;
  p.provenance.primes = primes.values();
  for (int i = 0; i < n; ++i) p.provenance.labels.push_back(i);
  return p;
}

std::optional<int> default_elimination_index(const Presentation& p) {
  if (!p.product_relation) return std::nullopt;
  const auto& c = *p.product_relation;
  for (int t = static_cast<int>(c.size()) - 1; t >= 0; --t) {
    if (c[t]) return t;
  }
  return std::nullopt;
}

namespace {

// Rewrites r under xi_t -> sum_j c_j xi_j (j != t) in the free quadratic Lie algebra:
// [xi_a, xi_t] -> sum_j c_j [xi_a, xi_j] and xi_t^2 -> sum_j c_j xi_j^2 + sum_{j<k} c_j c_k [xi_j, xi_k].
QuadraticRelator substitute(const QuadraticRelator& r, int t, const std::vector<std::uint8_t>& c) {
  QuadraticRelator out = r;
  const int d = r.d();
  for (int a = 0; a < d; ++a) {
    if (a == t || !r.comm(a, t)) continue;
    out.set_comm(a, t, false);
    for (int j = 0; j < d; ++j) {
      if (j != t && j != a && c[j]) out.toggle_comm(a, j);
    }
  }
  if (r.square(t)) {
    out.set_square(t, false);
    for (int j = 0; j < d; ++j) {
      if (j == t || !c[j]) continue;
      out.set_square(j, !out.square(j));
      for (int k = j + 1; k < d; ++k) {
        if (k != t && c[k]) out.toggle_comm(j, k);
      }
    }
  }
  return out.without_generator(t);
}

}  // namespace

Presentation eliminate_generator(const Presentation& p, std::optional<int> t) {
  if (!p.product_relation) throw EliminationError("presentation has no product relation");
  const auto& c = *p.product_relation;
  if (static_cast<int>(c.size()) != p.d) throw InputError("product relation length does not match d");
  if (!t) t = default_elimination_index(p);
  if (!t) throw EliminationError("product relation is trivial; no generator can be eliminated");
  if (*t < 0 || *t >= p.d) throw InputError("elimination index out of range");
  if (!c[*t]) throw EliminationError("generator " + std::to_string(*t + 1) + " does not occur in the product relation");

  // The relator owned by t is dropped; untagged presentations drop position t.
  std::optional<std::size_t> dropped;
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    if (p.relators[k].owner() == *t) dropped = k;
  }
  if (!dropped && static_cast<std::size_t>(*t) < p.relators.size() && !p.relators[*t].owner()) {
    dropped = static_cast<std::size_t>(*t);
  }

  Presentation out;
  out.d = p.d - 1;
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    if (dropped && k == *dropped) continue;
    out.relators.push_back(substitute(p.relators[k], *t, c));
  }
  out.provenance = p.provenance;
  if (out.provenance.labels.size() == static_cast<std::size_t>(p.d)) {
    out.provenance.eliminated.push_back(out.provenance.labels[*t]);
    out.provenance.labels.erase(out.provenance.labels.begin() + *t);
  }
  return out;
}

std::string relator_text(const QuadraticRelator& r) {
  std::ostringstream os;
  const int d = r.d();
  auto x = [](int i) { return "x" + std::to_string(i + 1); };
  std::vector<std::uint8_t> squares_done(d, 0);
  std::vector<std::vector<std::uint8_t>> comm_done(d, std::vector<std::uint8_t>(d, 0));
  if (auto o = r.owner()) {
    if (r.square(*o)) {
      os << x(*o) << "^2";
      squares_done[*o] = 1;
    }
    for (int j = 0; j < d; ++j) {
      if (r.comm(*o, j)) {
        os << '[' << x(*o) << ',' << x(j) << ']';
        comm_done[*o][j] = comm_done[j][*o] = 1;
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    if (r.square(i) && !squares_done[i]) os << x(i) << "^2";
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (r.comm(i, j) && !comm_done[i][j]) os << '[' << x(i) << ',' << x(j) << ']';
    }
  }
  std::string s = os.str();
  return s.empty() ? "1" : s;
}

std::string product_relation_text(const std::vector<std::uint8_t>& exponents) {
  std::string s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i]) s += "x" + std::to_string(i + 1);
  }
  return s.empty() ? "1" : s;
}

std::string presentation_text(const Presentation& p, bool prime) {
  std::ostringstream os;
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    os << (prime ? "r'_" : "r_") << (k + 1) << " = " << relator_text(p.relators[k]) << '\n';
  }
  if (p.product_relation) os << "r = " << product_relation_text(*p.product_relation) << '\n';
  return os.str();
}

OrderedPrimeSet normalize_seed(const std::set<std::uint64_t>& seed) {
  if (seed.empty()) throw InputError("seed set must be nonempty");
  std::vector<OddPrime> ones, threes;
  for (auto v : seed) {
    OddPrime p(v);
    (p.is_one_mod_four() ? ones : threes).push_back(p);
  }
  auto smallest_missing = [&](std::uint64_t residue) {
    return next_prime_in_class(3, residue, 4, seed, UINT64_MAX - 4);
  };
  if (ones.empty()) ones.push_back(smallest_missing(1));
  if (threes.empty()) threes.push_back(smallest_missing(3));
  std::vector<OddPrime> out = ones;
  out.insert(out.end(), threes.begin(), threes.end());
  return OrderedPrimeSet(std::move(out));
}

OrderedPrimeSet interleave(const OrderedPrimeSet& seed, const std::vector<OddPrime>& q_aux, OddPrime q_last) {
  if (q_aux.size() != seed.size()) throw InputError("need exactly one auxiliary prime per seed prime");
  std::vector<OddPrime> out;
  for (std::size_t i = 0; i < seed.size(); ++i) {
    out.push_back(q_aux[i]);
    out.push_back(seed[i]);
  }
  out.push_back(q_last);
  return OrderedPrimeSet(std::move(out));
}

ValidationReport validate_augmentation(const OrderedPrimeSet& seed, const std::vector<OddPrime>& q_aux,
                                       OddPrime q_last) {
  const std::size_t m = seed.size();
  if (m < 2) throw InputError("seed must contain at least two primes");
  if (q_aux.size() != m) throw InputError("need exactly one auxiliary prime per seed prime");

  ValidationReport rep;
  auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };
  auto qa = [](std::size_t i) { return "q" + std::to_string(i + 1) + "'"; };
  auto qs = [](std::size_t i) { return "q" + std::to_string(i + 1); };
  auto num = [](OddPrime p) { return static_cast<std::int64_t>(p.value()); };

  const std::vector<std::uint64_t> seed_list = seed.values();
  const std::set<std::uint64_t> seed_values(seed_list.begin(), seed_list.end());
  std::set<std::uint64_t> seen = seed_values;
  for (std::size_t i = 0; i < m; ++i) {
    const OddPrime q = q_aux[i];
    const std::string name = qa(i) + "=" + std::to_string(q.value());
    if (!q.is_one_mod_four()) fail(name + " is not 1 mod 4");
    if (seed_values.count(q.value())) fail(name + " lies in the seed set");
    else if (!seen.insert(q.value()).second) fail(name + " repeats an auxiliary prime");
  }
  // (a): q_i' is a square mod q_j' for i != j.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && legendre(num(q_aux[i]), q_aux[j]) != 1) {
        fail("(a) " + qa(i) + " is not a square mod " + qa(j));
      }
    }
  }
  // (b): q_1' non-square mod q_m; q_i' non-square mod q_i and q_{i-1} for i > 1.
  if (legendre(num(q_aux[0]), seed[m - 1]) != -1) fail("(b) " + qa(0) + " is not a non-square mod " + qs(m - 1));
  for (std::size_t i = 1; i < m; ++i) {
    if (legendre(num(q_aux[i]), seed[i]) != -1) fail("(b) " + qa(i) + " is not a non-square mod " + qs(i));
    if (legendre(num(q_aux[i]), seed[i - 1]) != -1) fail("(b) " + qa(i) + " is not a non-square mod " + qs(i - 1));
  }
  const std::string last = "q" + std::to_string(m + 1) + "=" + std::to_string(q_last.value());
  if (q_last.is_one_mod_four()) fail(last + " is not 3 mod 4");
  if (seen.count(q_last.value())) fail(last + " coincides with another prime");
  if (legendre(num(q_last), q_aux[0]) != -1) fail(last + " is not a non-square mod " + qa(0));
  for (std::size_t i = 1; i < m; ++i) {
    if (legendre(num(q_last), q_aux[i]) != 1) fail(last + " is not a square mod " + qa(i));
  }
  return rep;
}

}  // namespace mild2
