#include "mild2/quadlie.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mild2/errors.hpp"

namespace mild2 {

std::string to_string(Ring ring) { return ring == Ring::F2 ? "F2" : "F2pi"; }

WeightedAlphabet::WeightedAlphabet(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.size() > 15) throw InputError("alphabets are limited to 15 generators");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 1) throw InputError("generator weights must be >= 1");
    if (i > 0 && weights_[i] < weights_[i - 1]) throw InputError("generator weights must be nondecreasing");
  }
  m_ = static_cast<int>(std::count(weights_.begin(), weights_.end(), 1));
}

Algebra::Algebra(WeightedAlphabet alphabet, Ring ring, int max_degree, bool strict)
    : alphabet_(std::move(alphabet)), ring_(ring), max_degree_(max_degree), strict_(strict) {
  if (max_degree < 0) throw InputError("truncation degree must be >= 0");
}

int Algebra::word_weight(const std::vector<std::uint8_t>& word) const {
  int w = 0;
  for (auto letter : word) w += alphabet_.weight(letter);
  return w;
}

namespace {

void require_compatible(const NcPoly& u, const NcPoly& v) {
  if (u.algebra() != v.algebra() && !(*u.algebra() == *v.algebra())) {
    throw InputError("operands live in different algebras");
  }
}

}  // namespace

NcPoly NcPoly::one(AlgebraPtr algebra) { return monomial(std::move(algebra), {}); }

NcPoly NcPoly::generator(AlgebraPtr algebra, int i) {
  if (i < 0 || i >= algebra->alphabet().size()) throw InputError("generator index out of range");
  return monomial(std::move(algebra), {static_cast<std::uint8_t>(i)});
}

NcPoly NcPoly::monomial(AlgebraPtr algebra, std::vector<std::uint8_t> word, int pi) {
  NcPoly out(std::move(algebra));
  const int deg = out.algebra_->word_weight(word) + pi;
  out.toggle(Monomial{deg, pi, std::move(word)});
  return out;
}

void NcPoly::toggle(Monomial m) {
  if (m.pi > 0 && algebra_->ring() == Ring::F2) throw InputError("pi does not exist over F2");
  if (m.degree > algebra_->max_degree()) {
    if (algebra_->strict()) throw InputError("product exceeds truncation degree " + std::to_string(algebra_->max_degree()));
    return;
  }
  auto [it, inserted] = terms_.insert(std::move(m));
  if (!inserted) terms_.erase(it);
}

bool NcPoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->degree == terms_.rbegin()->degree;
}

int NcPoly::degree() const {
  if (terms_.empty()) throw InputError("zero has no degree");
  if (!is_homogeneous()) throw InputError("element is not homogeneous");
  return terms_.begin()->degree;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : terms_) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> parts;
    if (m.pi == 1) parts.push_back("pi");
    if (m.pi > 1) parts.push_back("pi^" + std::to_string(m.pi));
    for (auto letter : m.word) parts.push_back("x" + std::to_string(letter + 1));
    if (parts.empty()) parts.push_back("1");
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "." : "") << parts[i];
  }
  return os.str();
}

NcPoly add(const NcPoly& u, const NcPoly& v) {
  require_compatible(u, v);
  NcPoly out = u;
  for (const auto& m : v.terms()) out.toggle(m);
  return out;
}

NcPoly mul(const NcPoly& u, const NcPoly& v) {
  require_compatible(u, v);
  NcPoly out(u.algebra());
  for (const auto& a : u.terms()) {
    for (const auto& b : v.terms()) {
      Monomial m{a.degree + b.degree, a.pi + b.pi, a.word};
      m.word.insert(m.word.end(), b.word.begin(), b.word.end());
      out.toggle(std::move(m));
    }
  }
  return out;
}

NcPoly pi_mul(const NcPoly& u) {
  if (u.algebra()->ring() != Ring::F2pi) throw InputError("pi_mul requires the F2pi ring");
  NcPoly out(u.algebra());
  for (const auto& m : u.terms()) out.toggle(Monomial{m.degree + 1, m.pi + 1, m.word});
  return out;
}

NcPoly bracket(const NcPoly& u, const NcPoly& v) { return add(mul(u, v), mul(v, u)); }

NcPoly P_quad(const NcPoly& u) {
  if (u.algebra()->ring() != Ring::F2) throw InputError("P_quad requires the F2 ring");
  if (u.is_zero()) return u;
  if (u.degree() != 1) throw InputError("P_quad is defined in degree 1 only");
  return mul(u, u);
}

NcPoly P_mixed(const NcPoly& u) {
  if (u.algebra()->ring() != Ring::F2pi) throw InputError("P_mixed requires the F2pi ring");
  if (u.is_zero()) return u;
  if (u.degree() == 1) return add(mul(u, u), pi_mul(u));
  return pi_mul(u);
}

BracketWord BracketWord::leaf(int generator) {
  if (generator < 0) throw InputError("generator index out of range");
  return BracketWord(Kind::leaf, generator);
}

BracketWord BracketWord::bracket(BracketWord left, BracketWord right) {
  BracketWord out(Kind::bracket, -1);
  out.left_ = std::make_shared<const BracketWord>(std::move(left));
  out.right_ = std::make_shared<const BracketWord>(std::move(right));
  return out;
}

BracketWord BracketWord::square(int generator) {
  if (generator < 0) throw InputError("generator index out of range");
  return BracketWord(Kind::square, generator);
}

BracketWord BracketWord::ad_word(std::span<const int> sigmas, BracketWord inner) {
  for (auto it = sigmas.rbegin(); it != sigmas.rend(); ++it) inner = bracket(leaf(*it), std::move(inner));
  return inner;
}

int BracketWord::weight(const WeightedAlphabet& alphabet) const {
  switch (kind_) {
    case Kind::leaf:
      if (generator_ >= alphabet.size()) throw InputError("generator index out of range");
      return alphabet.weight(generator_);
    case Kind::square:
      if (generator_ >= alphabet.size()) throw InputError("generator index out of range");
      if (alphabet.weight(generator_) != 1) throw InputError("squares are defined on weight-one generators only");
      return 2;
    case Kind::bracket:
      return left_->weight(alphabet) + right_->weight(alphabet);
  }
  return 0;
}

std::string BracketWord::to_string() const {
  switch (kind_) {
    case Kind::leaf: return "x" + std::to_string(generator_ + 1);
    case Kind::square: return "P(x" + std::to_string(generator_ + 1) + ")";
    case Kind::bracket: return "[" + left_->to_string() + "," + right_->to_string() + "]";
  }
  return {};
}

bool BracketWord::operator==(const BracketWord& o) const {
  if (kind_ != o.kind_ || generator_ != o.generator_) return false;
  if (kind_ != Kind::bracket) return true;
  return *left_ == *o.left_ && *right_ == *o.right_;
}

NcPoly evaluate(const BracketWord& word, const AlgebraPtr& algebra) {
  switch (word.kind()) {
    case BracketWord::Kind::leaf:
      return NcPoly::generator(algebra, word.generator());
    case BracketWord::Kind::square: {
      word.weight(algebra->alphabet());
      NcPoly x = NcPoly::generator(algebra, word.generator());
      return algebra->ring() == Ring::F2 ? P_quad(x) : P_mixed(x);
    }
    case BracketWord::Kind::bracket:
      return bracket(evaluate(word.left(), algebra), evaluate(word.right(), algebra));
  }
  return NcPoly::zero(algebra);
}

NcPoly relator_to_poly(const QuadraticRelator& r, const AlgebraPtr& algebra) {
  if (r.d() != algebra->alphabet().size()) throw InputError("relator generator count does not match the alphabet");
  NcPoly out(algebra);
  for (int i = 0; i < r.d(); ++i) {
    const auto a = static_cast<std::uint8_t>(i);
    if (r.square(i)) out = add(out, NcPoly::monomial(algebra, {a, a}));
    for (int j = i + 1; j < r.d(); ++j) {
      if (!r.comm(i, j)) continue;
      const auto b = static_cast<std::uint8_t>(j);
      out = add(out, NcPoly::monomial(algebra, {a, b}) + NcPoly::monomial(algebra, {b, a}));
    }
  }
  return out;
}

namespace {

// All strictly decreasing sequences of length len drawn from [0, m).
void decreasing_sequences(int m, int len, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> seq;
  std::function<void(int)> rec = [&](int below) {
    if (static_cast<int>(seq.size()) == len) {
      visit(seq);
      return;
    }
    for (int i = below - 1; i >= 0; --i) {
      seq.push_back(i);
      rec(i);
      seq.pop_back();
    }
  };
  rec(m);
}

}  // namespace

std::vector<BasisElement> enumerate_Y(const WeightedAlphabet& alphabet, int max_degree) {
  const int d = alphabet.size();
  const int m = alphabet.weight_one_count();
  std::vector<BasisElement> out;
  auto emit = [&](int family, BracketWord w) {
    const int deg = w.weight(alphabet);
    if (deg <= max_degree) out.push_back({family, deg, std::move(w)});
  };
  using BW = BracketWord;

  // (1) P xi_i and [xi_i, xi_j] on weight-one letters.
  for (int i = 0; i < m; ++i) emit(1, BW::square(i));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) emit(1, BW::bracket(BW::leaf(i), BW::leaf(j)));
  }
  // (2) heavier letters and their brackets with weight-one letters.
  for (int j = m; j < d; ++j) emit(2, BW::leaf(j));
  for (int i = 0; i < m; ++i) {
    for (int j = m; j < d; ++j) emit(2, BW::bracket(BW::leaf(i), BW::leaf(j)));
  }
  for (int k = 3; k <= max_degree; ++k) {
    // (3) ad(i_1)...ad(i_{k-3}) ad(j)^2 (i_{k-2}), i_1 > ... > i_{k-2}, j outside them.
    decreasing_sequences(m, k - 2, [&](const std::vector<int>& seq) {
      for (int j = 0; j < m; ++j) {
        if (std::find(seq.begin(), seq.end(), j) != seq.end()) continue;
        std::vector<int> sig(seq.begin(), seq.end() - 1);
        sig.push_back(j);
        sig.push_back(j);
        emit(3, BW::ad_word(sig, BW::leaf(seq.back())));
      }
    });
    // (4) ad(i_1)...ad(i_{k-1})(i_k), i_1 > ... > i_{k-1}, i_{k-1} < i_k <= m, i_k new.
    decreasing_sequences(m, k - 1, [&](const std::vector<int>& seq) {
      for (int ik = seq.back() + 1; ik < m; ++ik) {
        if (std::find(seq.begin(), seq.end() - 1, ik) != seq.end() - 1) continue;
        emit(4, BW::ad_word(seq, BW::leaf(ik)));
      }
    });
    // (5) ad(i_1)...ad(i_{k-1})(i_k), i_1 > ... > i_{k-1}, i_k a heavier letter.
    decreasing_sequences(m, k - 1, [&](const std::vector<int>& seq) {
      for (int ik = m; ik < d; ++ik) emit(5, BW::ad_word(seq, BW::leaf(ik)));
    });
  }
  std::stable_sort(out.begin(), out.end(), [](const BasisElement& a, const BasisElement& b) {
    return std::tie(a.degree, a.family) < std::tie(b.degree, b.family);
  });
  return out;
}

IntSeries basis_generating_function(const WeightedAlphabet& alphabet, int N) {
  IntSeries poly = IntSeries::zero(N);
  poly[0] = 1;
  for (int w : alphabet.weights()) {
    if (w <= N) poly[w] -= 1;
  }
  poly = multiply(poly, binomial_power(1, BigInt(alphabet.weight_one_count()), N));
  IntSeries out = IntSeries::zero(N);
  for (int n = 1; n <= N; ++n) out[n] = -poly[n];
  return out;
}

std::vector<BracketWord> elimination_basis(const WeightedAlphabet& alphabet, const std::vector<int>& subset,
                                           int max_weight) {
  const int d = alphabet.size();
  std::vector<std::uint8_t> in_subset(d, 0);
  for (int s : subset) {
    if (s < 0 || s >= d) throw InputError("subset index out of range");
    in_subset[s] = 1;
  }
  std::vector<int> sigma_letters, xi_letters;
  for (int i = 0; i < d; ++i) (in_subset[i] ? sigma_letters : xi_letters).push_back(i);
  if (xi_letters.empty()) throw InputError("the eliminated subset must be a proper subset");

  std::vector<BracketWord> out;
  std::vector<int> sigmas;
  // Breadth by ad-depth n; within a depth, sigma sequences in lexicographic order.
  std::function<void(int, int, int)> rec = [&](int depth, int target, int weight) {
    if (depth == target) {
      for (int xi : xi_letters) {
        if (weight + alphabet.weight(xi) <= max_weight) out.push_back(BracketWord::ad_word(sigmas, BracketWord::leaf(xi)));
      }
      return;
    }
    for (int s : sigma_letters) {
      if (weight + alphabet.weight(s) + 1 > max_weight) continue;
      sigmas.push_back(s);
      rec(depth + 1, target, weight + alphabet.weight(s));
      sigmas.pop_back();
    }
  };
  for (int n = 0; n < max_weight; ++n) rec(0, n, 0);
  return out;
}

}  // namespace mild2
