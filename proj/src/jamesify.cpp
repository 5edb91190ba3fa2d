#include "tsirelson_lab/jamesify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tsirelson_lab/dualnorm.hpp"

namespace tsirelson_lab {

PairSelection::PairSelection(std::vector<Index> indices) : indices_(std::move(indices)) {
  if (indices_.empty() || indices_.size() % 2 != 0) throw std::invalid_argument("a pair selection needs 2k >= 2 indices");
  if (indices_.front() == 0) throw std::invalid_argument("basis indices start at 1");
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i] <= indices_[i - 1]) throw std::invalid_argument("pair selection must be strictly increasing");
  }
}

FinVec difference_vector(const FinVec& a, const PairSelection& p) {
  std::vector<std::pair<Index, Rational>> d;
  const auto& q = p.indices();
  for (std::size_t j = 0; j < p.pair_count(); ++j) d.emplace_back(j + 1, a.coeff(q[2 * j]) - a.coeff(q[2 * j + 1]));
  return FinVec::from_pairs(std::move(d));
}

JamesEngine::JamesEngine(std::shared_ptr<const NormEngine> base) : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("James transform needs a base engine");
  const EngineFlags f = base_->flags();
  if (!f.one_unconditional) throw std::invalid_argument("James transform needs a 1-unconditional base, got " + base_->name());
  if (!f.zero_deletion_nondecreasing) {
    throw std::invalid_argument("James transform needs a zero-deletion monotone base, got " + base_->name());
  }
}

JamesEngine JamesEngine::tsirelson_james(Admissibility rule) {
  return JamesEngine(std::make_shared<DualTsirelsonEngine>(rule));
}

EngineFlags JamesEngine::flags() const {
  EngineFlags f;
  f.monotone_basis = true;
  f.unit_basis = base_->flags().unit_basis;
  return f;
}

namespace {

struct Run {
  Index first;
  std::size_t capacity;  // 1 or 2
  Rational value;
};

class SelectionSearch {
 public:
  SelectionSearch(const FinVec& a, const NormEngine& base) : base_(base), prune_(base.flags().unit_basis) {
    const Index m = a.max_index();
    for (Index i = 1; i <= m; ++i) {
      Rational c = a.coeff(i);
      if (!runs_.empty() && runs_.back().value == c) {
        runs_.back().capacity = 2;
      } else {
        runs_.push_back({i, 1, std::move(c)});
      }
    }
    runs_.push_back({m + 1, 1, Rational(0)});  // zero tail: final end point only
    uses_after_.assign(runs_.size() + 1, 0);
    for (std::size_t r = runs_.size(); r-- > 0;) uses_after_[r] = uses_after_[r + 1] + runs_[r].capacity;
    Rational lo = runs_.front().value, hi = lo;
    for (const auto& run : runs_) {
      lo = std::min(lo, run.value);
      hi = std::max(hi, run.value);
    }
    range_ = hi - lo;
  }

  JamesResult run() {
    dfs(0);
    JamesResult out;
    out.value = {best_lower_, best_upper_};
    out.evaluations = evaluations_;
    if (!best_indices_.empty()) {
      out.selection = PairSelection(best_indices_);
      out.difference = best_difference_;
    }
    return out;
  }

 private:
  bool is_tail(std::size_t r) const { return r + 1 == runs_.size(); }

  void dfs(std::size_t r) {
    if (r == runs_.size()) return;
    if (prune_ && !best_indices_.empty()) {
      const std::size_t future_pairs = (uses_after_[r] + (open_ ? 1 : 0)) / 2;
      if (l1_ + range_ * static_cast<unsigned long>(future_pairs) <= best_lower_) return;
    }
    const Run& run = runs_[r];
    if (open_) {
      Rational d = open_value_ - run.value;
      if (d != 0) {
        indices_.push_back(run.first);
        diffs_.push_back(d);
        l1_ += abs_value(d);
        open_ = false;
        evaluate();
        if (!is_tail(r)) {
          dfs(r + 1);
          if (run.capacity == 2) {
            const Rational saved = open_value_;
            indices_.push_back(run.first + 1);
            open_ = true;
            open_value_ = run.value;
            dfs(r + 1);
            open_ = false;
            open_value_ = saved;
            indices_.pop_back();
          }
        }
        open_ = true;
        l1_ -= abs_value(d);
        diffs_.pop_back();
        indices_.pop_back();
      }
    } else if (!is_tail(r)) {
      indices_.push_back(run.first);
      open_ = true;
      const Rational saved = open_value_;
      open_value_ = run.value;
      dfs(r + 1);
      open_value_ = saved;
      open_ = false;
      indices_.pop_back();
    }
    if (!is_tail(r)) dfs(r + 1);
  }

  void evaluate() {
    std::string key;
    for (const auto& d : diffs_) {
      key += abs_value(d).get_str();
      key += ';';
    }
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      ++evaluations_;
      it = memo_.emplace(key, base_.eval(FinVec::from_dense(diffs_))).first;
    }
    const NormBounds& b = it->second;
    if (b.upper > best_upper_) best_upper_ = b.upper;
    if (best_indices_.empty() || b.lower > best_lower_) {
      best_lower_ = b.lower;
      best_indices_ = indices_;
      best_difference_ = FinVec::from_dense(diffs_);
    }
  }

  const NormEngine& base_;
  bool prune_;
  std::vector<Run> runs_;
  std::vector<std::size_t> uses_after_;
  Rational range_;

  std::vector<Index> indices_;
  std::vector<Rational> diffs_;
  Rational l1_ = 0;
  bool open_ = false;
  Rational open_value_ = 0;

  std::map<std::string, NormBounds> memo_;
  std::size_t evaluations_ = 0;
  Rational best_lower_ = 0;
  Rational best_upper_ = 0;
  std::vector<Index> best_indices_;
  FinVec best_difference_;
};

}  // namespace

JamesResult JamesEngine::evaluate(const FinVec& a) const {
  if (a.is_zero()) return JamesResult{NormBounds::exact(0), std::nullopt, {}, 0};
  return SelectionSearch(a, *base_).run();
}

NormBounds james_norm(const FinVec& a, const NormEngine& base) {
  // Non-owning view of the caller's engine.
  return JamesEngine(std::shared_ptr<const NormEngine>(&base, [](const NormEngine*) {})).eval(a);
}

Rational alpha_limit(const EventuallyConstantSeq& x) { return x.tail_value(); }

BidualNorm bidual_norm(const EventuallyConstantSeq& x, const JamesEngine& engine) {
  const EventuallyConstantSeq c = x.canonical();
  const std::size_t n = c.stabilization_index() + 2;
  BidualNorm out{engine.eval(c.partial_sum(n)), n};
  for (std::size_t m = n + 1; m <= n + 3; ++m) {
    const NormBounds later = engine.eval(c.partial_sum(m));
    if (later.lower != out.value.lower || later.upper != out.value.upper) {
      throw std::logic_error("partial-sum norms did not stabilize at n = " + std::to_string(n));
    }
  }
  return out;
}

EventuallyConstantSeq u_map(const EventuallyConstantSeq& x) {
  const Rational lambda = alpha_limit(x);
  std::vector<Rational> head;
  head.reserve(x.stabilization_index() + 1);
  head.push_back(-lambda);
  for (const auto& c : x.head()) head.push_back(c - lambda);
  return EventuallyConstantSeq(std::move(head), Rational(0)).canonical();
}

EventuallyConstantSeq x0_double_star() { return EventuallyConstantSeq({}, Rational(1)); }

}  // namespace tsirelson_lab
