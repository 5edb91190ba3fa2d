#include "tsirelson_lab/tsirelson.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsirelson_lab {

Admissibility Admissibility::from_name(std::string_view name) {
  if (name == "schreier") return schreier();
  if (name == "schreier+1") return schreier_plus_one();
  throw std::invalid_argument("unknown admissibility rule \"" + std::string(name) + "\" (expected schreier or schreier+1)");
}

std::string Admissibility::name() const { return slack_ == 0 ? "schreier" : "schreier+" + std::to_string(slack_); }

IntervalPartition::IntervalPartition(std::vector<IndexInterval> parts, Admissibility rule) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
  for (std::size_t j = 1; j < parts_.size(); ++j) {
    if (parts_[j - 1].hi() >= parts_[j].lo()) throw std::invalid_argument("partition parts must be ordered and disjoint");
  }
  if (!rule.admits(parts_.size(), parts_.front().lo())) {
    throw std::invalid_argument("partition with " + std::to_string(parts_.size()) + " parts starting at " +
                                std::to_string(parts_.front().lo()) + " is not admissible under " + rule.name());
  }
}

EvaluationTree EvaluationTree::leaf(Index index, int sign) {
  if (index == 0) throw std::invalid_argument("basis indices start at 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("leaf sign must be +1 or -1");
  EvaluationTree t;
  t.index_ = index;
  t.sign_ = sign;
  return t;
}

EvaluationTree EvaluationTree::node(IntervalPartition partition, std::vector<EvaluationTree> children) {
  if (children.size() != partition.size()) throw std::invalid_argument("one child per part required");
  for (std::size_t j = 0; j < children.size(); ++j) {
    const FinVec f = children[j].flatten();
    const auto& part = partition.parts()[j];
    if (f.is_zero() || f.min_index() < part.lo() || f.max_index() > part.hi()) {
      throw std::invalid_argument("child functional escapes its part");
    }
  }
  EvaluationTree t;
  t.partition_ = std::move(partition);
  t.children_ = std::move(children);
  return t;
}

FinVec EvaluationTree::flatten() const {
  if (is_leaf()) return FinVec::basis(index_, sign_);
  FinVec sum;
  for (const auto& c : children_) sum = sum + c.flatten();
  return Rational(1, 2) * sum;
}

std::size_t EvaluationTree::depth() const {
  std::size_t d = 0;
  for (const auto& c : children_) d = std::max(d, c.depth() + 1);
  return d;
}

nlohmann::json EvaluationTree::to_json() const {
  if (is_leaf()) return {{"leaf", index_}, {"sign", sign_}};
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : partition_->parts()) parts.push_back({p.lo(), p.hi()});
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& c : children_) kids.push_back(c.to_json());
  return {{"parts", parts}, {"children", kids}};
}

EvaluationTree EvaluationTree::from_json(const nlohmann::json& j, Admissibility rule) {
  try {
    if (j.contains("leaf")) return leaf(j.at("leaf").get<Index>(), j.at("sign").get<int>());
    std::vector<IndexInterval> parts;
    for (const auto& p : j.at("parts")) parts.emplace_back(p.at(0).get<Index>(), p.at(1).get<Index>());
    std::vector<EvaluationTree> kids;
    for (const auto& c : j.at("children")) kids.push_back(from_json(c, rule));
    return node(IntervalPartition(std::move(parts), rule), std::move(kids));
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("malformed evaluation tree: ") + err.what());
  }
}

TsirelsonEvaluator::TsirelsonEvaluator(const FinVec& x, Admissibility rule) : x_(x), rule_(rule), n_(x.size()) {
  idx_ = x.support();
  std::vector<Rational> mag;
  for (const auto& e : x.entries()) mag.push_back(abs_value(e.coeff));

  value_.assign(n_ * n_, Rational(0));
  choice_.assign(n_ * n_, Choice{});
  tile_.assign((n_ + 1) * n_ * n_, Rational(0));
  tile_split_.assign((n_ + 1) * n_ * n_, 0);

  for (std::size_t len = 1; len <= n_; ++len) {
    for (std::size_t a = 0; a + len <= n_; ++a) {
      const std::size_t b = a + len - 1;
      for (std::size_t m = 2; m <= len; ++m) {
        std::size_t best_c = a;
        Rational best = -1;
        for (std::size_t c = a; c + m <= b + 1; ++c) {
          Rational t = v(a, c) + tile_[tile_at(m - 1, c + 1, b)];
          if (t > best) {
            best = std::move(t);
            best_c = c;
          }
        }
        tile_[tile_at(m, a, b)] = std::move(best);
        tile_split_[tile_at(m, a, b)] = best_c;
      }

      Choice pick{0, a};
      Rational best = mag[a];
      for (std::size_t r = a + 1; r <= b; ++r) {
        if (mag[r] > best) {
          best = mag[r];
          pick.first = r;
        }
      }
      std::size_t s = a;
      for (std::size_t k = 2; k <= len; ++k) {
        const Index need = rule_.min_first_index(k);
        while (s <= b && idx_[s] < need) ++s;
        if (s > b || b - s + 1 < k) break;
        Rational cand = tile_[tile_at(k, s, b)] / 2;
        if (cand > best) {
          best = std::move(cand);
          pick = Choice{k, s};
        }
      }
      value_[a * n_ + b] = best;
      choice_[a * n_ + b] = pick;
      tile_[tile_at(1, a, b)] = std::move(best);
    }
  }
}

Rational TsirelsonEvaluator::norm() const { return n_ == 0 ? Rational(0) : v(0, n_ - 1); }

Rational TsirelsonEvaluator::restricted_norm(const IndexInterval& window) const {
  const auto first = std::lower_bound(idx_.begin(), idx_.end(), window.lo());
  const auto last = std::upper_bound(idx_.begin(), idx_.end(), window.hi());
  if (first >= last) return 0;
  return v(static_cast<std::size_t>(first - idx_.begin()), static_cast<std::size_t>(last - idx_.begin()) - 1);
}

EvaluationTree TsirelsonEvaluator::build(std::size_t a, std::size_t b) const {
  const Choice& c = choice_[a * n_ + b];
  if (c.parts == 0) return EvaluationTree::leaf(idx_[c.first], x_.entries()[c.first].coeff > 0 ? 1 : -1);
  std::vector<IndexInterval> parts;
  std::vector<EvaluationTree> kids;
  std::size_t cur = c.first;
  for (std::size_t m = c.parts; m >= 2; --m) {
    const std::size_t split = tile_split_[tile_at(m, cur, b)];
    parts.emplace_back(idx_[cur], idx_[split]);
    kids.push_back(build(cur, split));
    cur = split + 1;
  }
  parts.emplace_back(idx_[cur], idx_[b]);
  kids.push_back(build(cur, b));
  return EvaluationTree::node(IntervalPartition(std::move(parts), rule_), std::move(kids));
}

EvaluationTree TsirelsonEvaluator::maximizer() const {
  if (n_ == 0) throw std::invalid_argument("the zero vector has no norming tree");
  return build(0, n_ - 1);
}

Rational tsirelson_norm(const FinVec& x, Admissibility rule) { return TsirelsonEvaluator(x, rule).norm(); }

EvaluationTree tsirelson_maximizer(const FinVec& x, Admissibility rule) { return TsirelsonEvaluator(x, rule).maximizer(); }

void for_each_admissible_partition(const IndexInterval& window, std::size_t k, Admissibility rule,
                                   const std::function<void(const IntervalPartition&)>& visit) {
  if (k < 2) throw std::invalid_argument("admissible partitions are enumerated for k >= 2");
  std::vector<IndexInterval> parts;
  parts.reserve(k);
  const Index first_lo = std::max(window.lo(), rule.min_first_index(k));
  // place(lo): choose the next part starting at or after lo.
  std::function<void(Index)> place = [&](Index lo) {
    const std::size_t remaining = k - parts.size();
    if (remaining == 0) {
      visit(IntervalPartition(parts, rule));
      return;
    }
    for (Index start = lo; start + remaining - 1 <= window.hi(); ++start) {
      for (Index end = start; end + remaining - 1 <= window.hi(); ++end) {
        parts.emplace_back(start, end);
        place(end + 1);
        parts.pop_back();
      }
    }
  };
  if (first_lo + k - 1 <= window.hi()) place(first_lo);
}

std::vector<IntervalPartition> admissible_partitions(const IndexInterval& window, std::size_t k, Admissibility rule) {
  std::vector<IntervalPartition> out;
  for_each_admissible_partition(window, k, rule, [&](const IntervalPartition& p) { out.push_back(p); });
  return out;
}

FinVec TsirelsonEngine::norming_functional(const FinVec& x) const {
  if (x.is_zero()) return {};
  return tsirelson_maximizer(x, rule_).flatten();
}

}  // namespace tsirelson_lab
