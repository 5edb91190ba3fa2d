#include "tsirelson_lab/seqvec.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tsirelson_lab {

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

IndexInterval::IndexInterval(Index lo, Index hi) : lo_(lo), hi_(hi) {
  if (lo == 0 || hi < lo) {
    throw std::invalid_argument("invalid interval [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

FinVec FinVec::from_pairs(std::vector<std::pair<Index, Rational>> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  FinVec v;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k].first == 0) throw std::invalid_argument("basis indices start at 1");
    if (k > 0 && pairs[k].first == pairs[k - 1].first) {
      throw std::invalid_argument("repeated index " + std::to_string(pairs[k].first));
    }
    if (pairs[k].second != 0) v.entries_.push_back({pairs[k].first, pairs[k].second});
  }
  return v;
}

FinVec FinVec::basis(Index i, const Rational& coeff) { return from_pairs({{i, coeff}}); }

FinVec FinVec::from_dense(std::span<const Rational> values, Index first) {
  if (first == 0) throw std::invalid_argument("basis indices start at 1");
  FinVec v;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] != 0) v.entries_.push_back({first + k, values[k]});
  }
  return v;
}

FinVec FinVec::indicator(Index lo, Index hi) {
  const IndexInterval window(lo, hi);
  FinVec v;
  for (Index i = window.lo(); i <= window.hi(); ++i) v.entries_.push_back({i, 1});
  return v;
}

Rational FinVec::coeff(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index key) { return e.index < key; });
  return it != entries_.end() && it->index == i ? it->coeff : Rational(0);
}

std::vector<Index> FinVec::support() const {
  std::vector<Index> s;
  s.reserve(entries_.size());
  for (const auto& e : entries_) s.push_back(e.index);
  return s;
}

Index FinVec::min_index() const {
  if (is_zero()) throw std::logic_error("min_index of the zero vector");
  return entries_.front().index;
}

Index FinVec::max_index() const {
  if (is_zero()) throw std::logic_error("max_index of the zero vector");
  return entries_.back().index;
}

Rational FinVec::sup_norm() const {
  Rational m = 0;
  for (const auto& e : entries_) m = std::max(m, abs_value(e.coeff));
  return m;
}

Rational FinVec::l1_norm() const {
  Rational s = 0;
  for (const auto& e : entries_) s += abs_value(e.coeff);
  return s;
}

FinVec FinVec::abs() const {
  FinVec v = *this;
  for (auto& e : v.entries_) e.coeff = abs_value(e.coeff);
  return v;
}

FinVec FinVec::operator-() const { return Rational(-1) * *this; }

FinVec operator+(const FinVec& a, const FinVec& b) {
  FinVec out;
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->index < j->index)) {
      out.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->index < i->index) {
      out.entries_.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) out.entries_.push_back({i->index, c});
      ++i;
      ++j;
    }
  }
  return out;
}

FinVec operator-(const FinVec& a, const FinVec& b) { return a + (-b); }

FinVec operator*(const Rational& s, const FinVec& a) {
  FinVec out;
  if (s == 0) return out;
  out.entries_.reserve(a.entries_.size());
  for (const auto& e : a.entries_) out.entries_.push_back({e.index, s * e.coeff});
  return out;
}

FinVec restrict(const FinVec& x, const IndexInterval& window) {
  std::vector<std::pair<Index, Rational>> kept;
  for (const auto& e : x.entries()) {
    if (window.contains(e.index)) kept.emplace_back(e.index, e.coeff);
  }
  return FinVec::from_pairs(std::move(kept));
}

FinVec shift_support(const FinVec& x, Index target_start) {
  if (target_start == 0) throw std::invalid_argument("shift target must be >= 1");
  std::vector<std::pair<Index, Rational>> moved;
  Index next = target_start;
  for (const auto& e : x.entries()) moved.emplace_back(next++, e.coeff);
  return FinVec::from_pairs(std::move(moved));
}

EventuallyConstantSeq::EventuallyConstantSeq(std::vector<Rational> head, Rational tail)
    : head_(std::move(head)), tail_(std::move(tail)) {}

EventuallyConstantSeq EventuallyConstantSeq::embed(const FinVec& x) {
  std::vector<Rational> head;
  if (!x.is_zero()) {
    head.assign(x.max_index(), Rational(0));
    for (const auto& e : x.entries()) head[e.index - 1] = e.coeff;
  }
  return {std::move(head), Rational(0)};
}

Rational EventuallyConstantSeq::coeff(Index j) const {
  if (j == 0) throw std::invalid_argument("basis indices start at 1");
  return j <= head_.size() ? head_[j - 1] : tail_;
}

FinVec EventuallyConstantSeq::partial_sum(std::size_t n) const {
  std::vector<Rational> dense;
  dense.reserve(n);
  for (Index j = 1; j <= n; ++j) dense.push_back(coeff(j));
  return FinVec::from_dense(dense);
}

EventuallyConstantSeq EventuallyConstantSeq::canonical() const {
  std::vector<Rational> head = head_;
  while (!head.empty() && head.back() == tail_) head.pop_back();
  return {std::move(head), tail_};
}

EventuallyConstantSeq operator+(const EventuallyConstantSeq& a, const EventuallyConstantSeq& b) {
  const std::size_t s = std::max(a.head_.size(), b.head_.size());
  std::vector<Rational> head;
  head.reserve(s);
  for (Index j = 1; j <= s; ++j) head.push_back(a.coeff(j) + b.coeff(j));
  return EventuallyConstantSeq(std::move(head), a.tail_ + b.tail_).canonical();
}

EventuallyConstantSeq operator*(const Rational& s, const EventuallyConstantSeq& a) {
  std::vector<Rational> head;
  head.reserve(a.head_.size());
  for (const auto& c : a.head_) head.push_back(s * c);
  return EventuallyConstantSeq(std::move(head), s * a.tail_).canonical();
}

bool operator==(const EventuallyConstantSeq& a, const EventuallyConstantSeq& b) {
  const auto ca = a.canonical();
  const auto cb = b.canonical();
  return ca.head_ == cb.head_ && ca.tail_ == cb.tail_;
}

nlohmann::json to_json(const FinVec& x) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : x.entries()) entries.push_back({e.index, to_string(e.coeff)});
  return {{"entries", entries}};
}

FinVec vector_from_json(const nlohmann::json& j) {
  const nlohmann::json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw std::invalid_argument("vector object lacks \"entries\"");
    entries = &j.at("entries");
  }
  if (!entries->is_array()) throw std::invalid_argument("vector entries must be an array");
  std::vector<std::pair<Index, Rational>> pairs;
  for (std::size_t k = 0; k < entries->size(); ++k) {
    const auto& item = (*entries)[k];
    const std::string where = "entry " + std::to_string(k) + " (" + item.dump() + "): ";
    if (!item.is_array() || item.size() != 2) throw std::invalid_argument(where + "expected [index, \"num/den\"]");
    if (!item[0].is_number_unsigned() || item[0].get<std::uint64_t>() == 0) {
      throw std::invalid_argument(where + "index must be a positive integer");
    }
    Rational c;
    try {
      if (item[1].is_string()) {
        c = parse_rational(item[1].get<std::string>());
      } else if (item[1].is_number_integer()) {
        c = Rational(std::to_string(item[1].get<std::int64_t>()));
      } else {
        throw std::invalid_argument("coefficient must be a \"num/den\" string");
      }
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument(where + err.what());
    }
    pairs.emplace_back(item[0].get<std::uint64_t>(), c);
  }
  try {
    return FinVec::from_pairs(std::move(pairs));
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(std::string("vector: ") + err.what());
  }
}

nlohmann::json to_json(const EventuallyConstantSeq& x) {
  nlohmann::json head = nlohmann::json::array();
  for (const auto& c : x.head()) head.push_back(to_string(c));
  return {{"head", head}, {"tail", to_string(x.tail_value())}};
}

std::string to_string(const FinVec& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& e : x.entries()) {
    if (!first) out << (e.coeff < 0 ? " - " : " + ");
    else if (e.coeff < 0) out << "-";
    const Rational mag = abs_value(e.coeff);
    if (mag != 1) out << to_string(mag) << "*";
    out << "e" << e.index;
    first = false;
  }
  return out.str();
}

}  // namespace tsirelson_lab
