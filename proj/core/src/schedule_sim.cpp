#include "paradd/schedule_sim.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <ostream>
#include <stdexcept>

namespace paradd {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kProduce: return "produce";
    case EventKind::kCopy: return "copy";
    case EventKind::kAdd: return "add";
  }
  return "?";
}

namespace {

class Group {
 public:
  explicit Group(std::optional<BigInt> modulus) : modulus_(std::move(modulus)) {
    if (modulus_ && *modulus_ <= 0) throw std::invalid_argument("modulus must be positive");
  }

  BigInt reduce(BigInt v) const {
    if (!modulus_) return v;
    v %= *modulus_;
    if (v < 0) v += *modulus_;
    return v;
  }
  BigInt add(const BigInt& a, const BigInt& b) const { return reduce(a + b); }
  BigInt negate(const BigInt& a) const { return reduce(-a); }

 private:
  std::optional<BigInt> modulus_;
};

// What happens at a timestamp. Completions sort before arrivals so that a
// point released at time t and a point arriving at t never overlap.
enum class Happening { kAddDone = 0, kPointReady = 1 };

struct Pending {
  Happening what;
  std::size_t index;
};

class Simulator {
 public:
  Simulator(const Representation& r, const TimeParams& t, std::optional<BigInt> modulus)
      : digits_(r.digits()), d_(t.doubling), a_(t.addition), group_(std::move(modulus)) {}

  ScheduleLog run() {
    const auto top = highest_nonzero();
    if (!top) {
      log_.result = 0;
      log_.finish_time = 0;
      return std::move(log_);
    }
    for (std::size_t i = 0; i <= *top; ++i) {
      schedule(d_ * static_cast<long long>(i), Happening::kPointReady, i);
    }

    while (!agenda_.empty()) {
      auto node = agenda_.extract(agenda_.begin());
      now_ = node.key();
      for (const auto& p : node.mapped()) handle(p);
      dispatch();
    }
    if (busy_ || !ready_.empty()) throw std::logic_error("simulation ended with pending work");

    log_.result = group_.reduce(acc_);
    log_.finish_time = last_finish_;
    std::stable_sort(log_.events.begin(), log_.events.end(),
                     [](const ScheduleEvent& x, const ScheduleEvent& y) {
                       if (x.start != y.start) return x.start < y.start;
                       if (x.kind != y.kind) return x.kind < y.kind;
                       return x.index < y.index;
                     });
    return std::move(log_);
  }

 private:
  std::optional<std::size_t> highest_nonzero() const {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (digits_[i] != 0) return i;
    }
    return std::nullopt;
  }

  void schedule(const Rational& at, Happening what, std::size_t index) {
    auto& bucket = agenda_[at];
    bucket.push_back({what, index});
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const Pending& x, const Pending& y) { return x.what < y.what; });
  }

  void handle(const Pending& p) {
    switch (p.what) {
      case Happening::kPointReady: {
        const BigInt point = p.index == 0 ? group_.reduce(1) : group_.add(last_point_, last_point_);
        last_point_ = point;
        const int sign = digits_[p.index] < 0 ? -1 : 1;
        log_.events.push_back({EventKind::kProduce, p.index,
                               p.index == 0 ? Rational(0) : d_ * static_cast<long long>(p.index - 1),
                               now_, sign});
        if (digits_[p.index] != 0) {
          ready_.push_back({p.index, point});
          ++occupancy_;
          log_.peak_buffer = std::max(log_.peak_buffer, occupancy_);
        }
        break;
      }
      case Happening::kAddDone: {
        const BigInt operand = current_sign_ < 0 ? group_.negate(current_point_) : current_point_;
        acc_ = group_.add(acc_, operand);
        last_finish_ = now_;
        busy_ = false;
        if (--remaining_ == 0) --occupancy_;
        break;
      }
    }
  }

  // Start whatever the addition worker can start at `now_`.
  void dispatch() {
    while (!busy_) {
      if (remaining_ > 0) {
        start_add();
        continue;
      }
      if (ready_.empty()) return;
      auto [index, point] = ready_.front();
      ready_.pop_front();
      current_index_ = index;
      current_point_ = point;
      current_sign_ = digits_[index] < 0 ? -1 : 1;
      remaining_ = std::abs(digits_[index]);
      if (!has_acc_) {
        acc_ = current_sign_ < 0 ? group_.negate(point) : point;
        has_acc_ = true;
        last_finish_ = now_;
        log_.events.push_back({EventKind::kCopy, index, now_, now_, current_sign_});
        if (--remaining_ == 0) --occupancy_;
      }
    }
  }

  void start_add() {
    busy_ = true;
    const Rational done = now_ + a_;
    log_.events.push_back({EventKind::kAdd, current_index_, now_, done, current_sign_});
    schedule(done, Happening::kAddDone, current_index_);
  }

  std::span<const std::int8_t> digits_;
  Rational d_;
  Rational a_;
  Group group_;

  std::map<Rational, std::vector<Pending>> agenda_;
  Rational now_ = 0;

  BigInt last_point_ = 0;
  std::deque<std::pair<std::size_t, BigInt>> ready_;
  std::size_t occupancy_ = 0;

  bool busy_ = false;
  bool has_acc_ = false;
  BigInt acc_ = 0;
  std::size_t current_index_ = 0;
  BigInt current_point_ = 0;
  int current_sign_ = 1;
  int remaining_ = 0;
  Rational last_finish_ = 0;

  ScheduleLog log_;
};

}  // namespace

ScheduleLog simulate(const Representation& r, const TimeParams& t, std::optional<BigInt> modulus) {
  require_model_regime(t);
  return Simulator(r, t, std::move(modulus)).run();
}

void write_trace(std::ostream& out, const ScheduleLog& log) {
  for (const auto& e : log.events) {
    out << to_string(e.kind) << '\t' << e.index << '\t' << to_fraction_string(e.start) << '\t'
        << to_fraction_string(e.finish) << '\t' << (e.operand_sign < 0 ? "-1" : "1") << '\n';
  }
}

}  // namespace paradd
