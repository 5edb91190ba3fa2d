#include "tsirelson_lab/norm_engine.hpp"

#include <stdexcept>

namespace tsirelson_lab {

const Rational& NormBounds::value() const {
  if (!is_exact()) throw std::logic_error("norm bounds [" + to_string(lower) + ", " + to_string(upper) + "] are not exact");
  return lower;
}

FinVec L1Engine::norming_functional(const FinVec& x) const {
  std::vector<std::pair<Index, Rational>> f;
  for (const auto& e : x.entries()) f.emplace_back(e.index, e.coeff > 0 ? 1 : -1);
  return FinVec::from_pairs(std::move(f));
}

FinVec LinfEngine::norming_functional(const FinVec& x) const {
  const Entry* best = nullptr;
  for (const auto& e : x.entries()) {
    if (best == nullptr || abs_value(e.coeff) > abs_value(best->coeff)) best = &e;
  }
  if (best == nullptr) return {};
  return FinVec::basis(best->index, best->coeff > 0 ? 1 : -1);
}

Rational pairing(const FinVec& y, const FinVec& x) {
  Rational s = 0;
  auto i = y.entries().begin();
  auto j = x.entries().begin();
  while (i != y.entries().end() && j != x.entries().end()) {
    if (i->index < j->index) {
      ++i;
    } else if (j->index < i->index) {
      ++j;
    } else {
      s += i->coeff * j->coeff;
      ++i;
      ++j;
    }
  }
  return s;
}

}  // namespace tsirelson_lab
