#include "mild2/augment.hpp"

#include <functional>
#include <future>
#include <thread>

#include "mild2/errors.hpp"
#include "mild2/mildness.hpp"

namespace mild2 {

namespace {

bool interleaved_is_mild(const OrderedPrimeSet& S) {
  return check_mild(koch_presentation(S)).verdict == Verdict::mild;
}

class Search {
 public:
  Search(OrderedPrimeSet seed, const AugmentOptions& options) : seed_(std::move(seed)), options_(options) {
    for (std::size_t i = 0; i < seed_.size(); ++i) used_.insert(seed_[i].value());
  }

  AugmentationResult run() {
    if (level(0)) return *result_;
    throw BoundExceeded("augmentation search exhausted all candidates up to " + std::to_string(options_.bound));
  }

 private:
  // Candidates in class `residue` mod 4, ascending, not yet used, up to the bound.
  template <typename Visit>
  bool for_each_candidate(std::uint64_t residue, Visit&& visit) {
    std::uint64_t start = 3;
    while (true) {
      std::optional<OddPrime> q;
      try {
        q = next_prime_in_class(start, residue, 4, used_, options_.bound);
      } catch (const BoundExceeded&) {
        return false;
      }
      if (visit(*q)) return true;
      start = q->value() + 1;
    }
  }

  bool aux_fits(std::size_t i, OddPrime q) const {
    const std::size_t m = seed_.size();
    const auto s = static_cast<std::int64_t>(q.value());
    if (i == 0) {
      if (legendre(s, seed_[m - 1]) != -1) return false;
    } else {
      if (legendre(s, seed_[i]) != -1 || legendre(s, seed_[i - 1]) != -1) return false;
    }
    for (const OddPrime& prev : aux_) {
      if (legendre(s, prev) != 1) return false;
    }
    return true;
  }

  bool last_fits(OddPrime q) const {
    const auto s = static_cast<std::int64_t>(q.value());
    for (std::size_t i = 0; i < aux_.size(); ++i) {
      if (legendre(s, aux_[i]) != (i == 0 ? -1 : 1)) return false;
    }
    return true;
  }

  bool level(std::size_t i) {
    if (i == seed_.size()) return closing();
    return for_each_candidate(1, [&](OddPrime q) {
      if (!aux_fits(i, q)) return false;
      aux_.push_back(q);
      used_.insert(q.value());
      const bool done = level(i + 1);
      if (!done) {
        used_.erase(q.value());
        aux_.pop_back();
      }
      return done;
    });
  }

  bool closing() {
    std::vector<OddPrime> batch;
    auto flush = [&]() {
      std::vector<std::future<bool>> verdicts;
      for (const OddPrime& q : batch) {
        const OrderedPrimeSet S = interleave(seed_, aux_, q);
        auto policy = options_.threads > 1 ? std::launch::async : std::launch::deferred;
        verdicts.push_back(std::async(policy, interleaved_is_mild, S));
      }
      for (std::size_t k = 0; k < batch.size(); ++k) {
        ++attempts_;
        if (verdicts[k].get()) {
          for (std::size_t rest = k + 1; rest < verdicts.size(); ++rest) verdicts[rest].wait();
          result_ = AugmentationResult{interleave(seed_, aux_, batch[k]), aux_, batch[k], attempts_};
          return true;
        }
      }
      batch.clear();
      return false;
    };
    const std::size_t width = std::max(1u, options_.threads);
    const bool found = for_each_candidate(3, [&](OddPrime q) {
      if (!last_fits(q)) return false;
      batch.push_back(q);
      return batch.size() >= width && flush();
    });
    return found || (!batch.empty() && flush());
  }

  OrderedPrimeSet seed_;
  AugmentOptions options_;
  std::set<std::uint64_t> used_;
  std::vector<OddPrime> aux_;
  std::uint64_t attempts_ = 0;
  std::optional<AugmentationResult> result_;
};

}  // namespace

AugmentationResult augment(const std::set<std::uint64_t>& seed, const AugmentOptions& options) {
  if (options.bound < 3) throw InputError("bound must be at least 3");
  return Search(normalize_seed(seed), options).run();
}

std::optional<AugmentationResult> try_augmentation(const std::set<std::uint64_t>& seed,
                                                   const std::vector<OddPrime>& q_aux, OddPrime q_last) {
  const OrderedPrimeSet normalized = normalize_seed(seed);
  if (q_aux.size() != normalized.size()) return std::nullopt;
  if (!validate_augmentation(normalized, q_aux, q_last).ok()) return std::nullopt;
  OrderedPrimeSet S = interleave(normalized, q_aux, q_last);
  if (!interleaved_is_mild(S)) return std::nullopt;
  return AugmentationResult{std::move(S), q_aux, q_last, 1};
}

}  // namespace mild2
