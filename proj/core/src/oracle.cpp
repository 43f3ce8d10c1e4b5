#include "paradd/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "paradd/cost_model.hpp"

namespace paradd {

namespace {

// Depth-first carry recursion. `on_leaf` sees the complete digit buffer.
// When `scale` is set the running completion time is carried along and
// handed to the leaf; it is non-decreasing, so `bound` prunes any branch
// already slower than the best leaf seen.
class Search {
 public:
  Search(std::int64_t n, const DigitSet& set, std::size_t len)
      : n_(n), members_(set.members()), len_(len), digits_(len, 0) {
    reach_hi_.resize(len + 1);
    reach_lo_.resize(len + 1);
    for (std::size_t k = 0; k <= len; ++k) {
      const std::int64_t span = (std::int64_t{1} << k) - 1;
      reach_hi_[k] = set.max() * span;
      reach_lo_[k] = set.min() * span;
    }
    if (n_ > reach_hi_[len] || n_ < reach_lo_[len]) {
      throw std::invalid_argument("length " + std::to_string(len) + " cannot represent " +
                                  std::to_string(n));
    }
  }

  template <typename Leaf>
  void enumerate(Leaf&& on_leaf) {
    walk_plain(0, n_, on_leaf);
  }

  template <typename Leaf>
  void minimize(const TickScale& scale, Leaf&& on_leaf) {
    scale_ = &scale;
    bound_ = std::numeric_limits<std::int64_t>::max();
    walk_timed(0, n_, 0, false, on_leaf);
  }

  void tighten(std::int64_t best) {
    if (prune_) bound_ = std::min(bound_, best);
  }
  void set_pruning(bool on) { prune_ = on; }
  std::span<const std::int8_t> digits() const { return digits_; }

 private:
  bool reachable(std::size_t pos, std::int64_t rem) const {
    const std::size_t left = len_ - pos;
    return rem <= reach_hi_[left] && rem >= reach_lo_[left];
  }

  template <typename Leaf>
  void walk_plain(std::size_t pos, std::int64_t rem, Leaf& on_leaf) {
    if (pos == len_) {
      if (rem == 0) on_leaf(digits_);
      return;
    }
    for (int d : members_) {
      if (((rem - d) & 1) != 0) continue;
      const std::int64_t next = (rem - d) / 2;
      if (!reachable(pos + 1, next)) continue;
      digits_[pos] = static_cast<std::int8_t>(d);
      walk_plain(pos + 1, next, on_leaf);
    }
    digits_[pos] = 0;
  }

  template <typename Leaf>
  void walk_timed(std::size_t pos, std::int64_t rem, std::int64_t t, bool started, Leaf& on_leaf) {
    if (t > bound_) return;
    if (pos == len_) {
      if (rem == 0) on_leaf(digits_, t);
      return;
    }
    for (int d : members_) {
      if (((rem - d) & 1) != 0) continue;
      const std::int64_t next = (rem - d) / 2;
      if (!reachable(pos + 1, next)) continue;
      digits_[pos] = static_cast<std::int8_t>(d);
      std::int64_t t2 = t;
      bool started2 = started;
      if (d != 0) {
        const std::int64_t ready = static_cast<std::int64_t>(pos) * scale_->doubling();
        const std::int64_t adds = d < 0 ? -d : d;
        t2 = started ? std::max(t, ready) + adds * scale_->addition()
                     : ready + (adds - 1) * scale_->addition();
        started2 = true;
      }
      walk_timed(pos + 1, next, t2, started2, on_leaf);
    }
    digits_[pos] = 0;
  }

  std::int64_t n_;
  std::vector<int> members_;
  std::size_t len_;
  std::vector<std::int8_t> digits_;
  std::vector<std::int64_t> reach_hi_;
  std::vector<std::int64_t> reach_lo_;
  const TickScale* scale_ = nullptr;
  std::int64_t bound_ = 0;
  bool prune_ = true;
};

std::int64_t small_scalar(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("scalar must be non-negative");
  if (bit_length(n) > 62) throw std::invalid_argument("scalar too large for exhaustive search");
  return to_int64(n);
}

// With `prune` off every representation reaches a leaf and `enumerated`
// counts all of them; with it on, branches already slower than the best leaf
// are cut.
OracleResult run_min(const BigInt& n, const TimeParams& t, const DigitSet& set, std::size_t len,
                     bool prune) {
  const TickScale scale(t);
  scale.check_capacity(len, set.max_abs());
  Search search(small_scalar(n), set, len);
  search.set_pruning(prune);

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::optional<std::string> best_text;
  std::optional<Representation> best_repr;
  std::uint64_t leaves = 0;

  search.minimize(scale, [&](std::span<const std::int8_t> digits, std::int64_t total) {
    ++leaves;
    if (total > best) return;
    Representation candidate(std::vector<std::int8_t>(digits.begin(), digits.end()), set);
    std::string text = format_repr(candidate);
    if (total < best || text < *best_text) {
      best = total;
      best_text = std::move(text);
      best_repr = std::move(candidate);
      search.tighten(best);
    }
  });

  if (!best_repr) throw std::logic_error("exhaustive search found no representation");
  return OracleResult{scale.to_time(best), std::move(*best_repr), leaves};
}

}  // namespace

void for_each_representation(const BigInt& n, const DigitSet& set, std::size_t max_len,
                             const std::function<void(std::span<const std::int8_t>)>& visit) {
  if (max_len == 0 || max_len > kMaxCanonicalSearchLength) {
    throw std::invalid_argument("search length must be in 1.." +
                                std::to_string(kMaxCanonicalSearchLength));
  }
  Search search(small_scalar(n), set, max_len);
  search.enumerate([&](std::span<const std::int8_t> digits) { visit(digits); });
}

std::vector<Representation> enumerate_canonical(const BigInt& n, std::size_t max_len) {
  if (n < 1) throw std::invalid_argument("enumerate_canonical requires n >= 1");
  std::vector<Representation> out;
  for_each_representation(n, DigitSet::canonical(), max_len, [&](std::span<const std::int8_t> d) {
    out.emplace_back(std::vector<std::int8_t>(d.begin(), d.end()), DigitSet::canonical());
  });
  return out;
}

OracleResult min_time_bruteforce(const BigInt& n, const TimeParams& t,
                                 std::optional<std::size_t> max_len) {
  if (n < 1) throw std::invalid_argument("min_time_bruteforce requires n >= 1");
  const std::size_t len = max_len.value_or(bit_length(n) + 2);
  if (len == 0 || len > kMaxCanonicalSearchLength) {
    throw std::invalid_argument("search length must be in 1.." +
                                std::to_string(kMaxCanonicalSearchLength));
  }
  return run_min(n, t, DigitSet::canonical(), len, false);
}

OracleResult min_time_extended(const BigInt& n, const TimeParams& t, const DigitSet& set,
                               std::optional<std::size_t> max_len) {
  if (n < 1) throw std::invalid_argument("min_time_extended requires n >= 1");
  if (bit_length(n) > kMaxExtendedBits) {
    throw std::invalid_argument("extended search is limited to n < 2^" +
                                std::to_string(kMaxExtendedBits));
  }
  if (set.max_abs() > kMaxExtendedDigit) {
    throw std::invalid_argument("extended search is limited to |digit| <= " +
                                std::to_string(kMaxExtendedDigit));
  }
  if (!set.contains(-1)) throw std::invalid_argument("extended digit set must contain -1");
  const std::size_t len = max_len.value_or(bit_length(n) + 2);
  if (len == 0 || len > kMaxExtendedSearchLength) {
    throw std::invalid_argument("extended search length must be in 1.." +
                                std::to_string(kMaxExtendedSearchLength));
  }
  return run_min(n, t, set, len, true);
}

}  // namespace paradd
