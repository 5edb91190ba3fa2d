#include "tsirelson_lab/certify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tsirelson_lab/dualnorm.hpp"
#include "tsirelson_lab/parallel.hpp"

namespace tsirelson_lab {
namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  const Rational& pick(const std::vector<Rational>& pool) { return pool[below(pool.size())]; }

  /// Coefficients from `pool` on [lo, hi], each position empty with
  /// probability 1/4; never the zero vector.
  FinVec vector_on(Index lo, Index hi, const std::vector<Rational>& pool) {
    std::vector<std::pair<Index, Rational>> pairs;
    for (Index i = lo; i <= hi; ++i) {
      if (below(4) != 0) pairs.emplace_back(i, pick(pool));
    }
    if (pairs.empty()) pairs.emplace_back(lo + below(hi - lo + 1), pick(pool));
    return FinVec::from_pairs(std::move(pairs));
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<Rational> positive_pool() { return {Rational(1), Rational(1, 2), Rational(2), Rational(1, 3)}; }

Rational power(const Rational& x, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

bool exact_exponent(const LpExponent& q) { return q.is_infinite() || q.is_integer(); }

unsigned long exponent_of(const LpExponent& q) { return q.is_infinite() ? 1 : q.value().get_num().get_ui(); }

std::string padded(std::size_t v) {
  std::string s = std::to_string(v);
  return s.size() < 2 ? "0" + s : s;
}

std::string rule_of(const JamesEngine& james) {
  if (const auto* t = dynamic_cast<const DualTsirelsonEngine*>(&james.base())) return t->rule().name();
  return james.base().name();
}

Admissibility rule_from(const nlohmann::json& witness) {
  return Admissibility::from_name(witness.value("admissibility", Admissibility::library_default().name()));
}

nlohmann::json selection_json(const JamesResult& r) {
  nlohmann::json sel = nlohmann::json::array();
  if (r.selection) {
    for (Index p : r.selection->indices()) sel.push_back(p);
  }
  return sel;
}

nlohmann::json james_witness(const FinVec& x, const JamesResult& r, const JamesEngine& james) {
  return {{"kind", "james_norm"},
          {"vector", to_json(x)},
          {"selection", selection_json(r)},
          {"admissibility", rule_of(james)}};
}

struct Case {
  Rational lhs;
  Rational rhs;
  nlohmann::json witness;
};

/// Worst case by lhs / rhs; pass iff every case has lhs <= rhs.
Certificate aggregate(std::string check, nlohmann::json params, const Rational& constant, const std::vector<Case>& cases) {
  Certificate c;
  c.check = std::move(check);
  c.params = std::move(params);
  c.constant = constant;
  c.params["comparison"] = "<=";
  c.params["cases"] = cases.size();
  if (cases.empty()) {
    c.witness = {{"kind", "none"}};
    c.pass = true;
    c.params["failures"] = 0;
    return c;
  }
  std::size_t worst = 0;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (cases[i].lhs > cases[i].rhs) ++failures;
    if (cases[i].lhs * cases[worst].rhs > cases[worst].lhs * cases[i].rhs) worst = i;
  }
  const Case& w = cases[worst];
  c.lhs = w.lhs;
  c.rhs = w.rhs;
  c.witness = w.witness;
  c.pass = failures == 0;
  c.params["failures"] = failures;
  if (w.rhs != 0) {
    c.params["max_ratio"] = to_string(constant * w.lhs / w.rhs);
  } else {
    c.params["max_ratio"] = w.lhs == 0 ? "0" : "inf";
  }
  return c;
}

Case window_case(const FinVec& a, const Rational& constant, Admissibility rule) {
  const DualNormResult r = dual_norm_certified(a, rule);
  return {r.bounds.upper,
          constant * a.sup_norm(),
          {{"kind", "dual_norm"},
           {"vector", to_json(a)},
           {"norming_point", to_json(r.norming_point)},
           {"admissibility", rule.name()}}};
}

Rational james_value(const JamesEngine& james, const FinVec& x) { return james.eval(x).upper; }

QRatio make_ratio(const BlockSequence& u, const FinVec& a, const LpExponent& q, const JamesEngine& james) {
  QRatio r;
  r.coefficients = a;
  r.norm = james_value(james, combine(u, a));
  if (q.is_infinite()) {
    r.power_sum = a.sup_norm();
  } else if (q.is_integer()) {
    r.power_sum = lp_power_sum(a, exponent_of(q));
  }
  const RealInterval d = lp_norm(a, q);
  r.value = {r.norm / d.hi, r.norm / d.lo};
  return r;
}

nlohmann::json ratio_json(const QRatio& r) {
  return {{"norm", to_string(r.norm)},
          {"power_sum", to_string(r.power_sum)},
          {"ratio_lo", to_string(r.value.lo)},
          {"ratio_hi", to_string(r.value.hi)},
          {"coefficients", to_json(r.coefficients)}};
}

std::string exponent_text(const LpExponent& q) { return q.is_infinite() ? "inf" : to_string(q.value()); }

}  // namespace

nlohmann::json Certificate::to_json() const {
  return {{"check", check},         {"params", params}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)},
          {"constant", to_string(constant)}, {"witness", witness}, {"pass", pass}};
}

Certificate Certificate::from_json(const nlohmann::json& j) {
  try {
    Certificate c;
    c.check = j.at("check").get<std::string>();
    c.params = j.at("params");
    c.lhs = parse_rational(j.at("lhs").get<std::string>());
    c.rhs = parse_rational(j.at("rhs").get<std::string>());
    c.constant = parse_rational(j.at("constant").get<std::string>());
    c.witness = j.at("witness");
    c.pass = j.at("pass").get<bool>();
    return c;
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("malformed certificate: ") + err.what());
  }
}

bool replay_witness(const Certificate& c) {
  const auto& w = c.witness;
  const std::string kind = w.value("kind", "");
  if (kind == "none") return c.lhs == 0;
  const Admissibility rule = rule_from(w);
  const FinVec x = vector_from_json(w.at("vector"));
  if (kind == "dual_norm") return dual_norm(x, rule).upper == c.lhs;
  const JamesEngine james = JamesEngine::tsirelson_james(rule);
  if (kind == "james_norm") {
    if (james_value(james, x) != c.lhs) return false;
    const auto sel = w.at("selection").get<std::vector<Index>>();
    if (sel.empty()) return c.lhs == 0;
    return dual_norm(difference_vector(x, PairSelection(sel)), rule).upper == c.lhs;
  }
  if (kind == "q_power") {
    const unsigned long q = w.at("q").get<unsigned long>();
    return power(james_value(james, x), q) * parse_rational(w.at("factor").get<std::string>()) == c.lhs;
  }
  return false;
}

Certificate check_window_bound(Index n, std::size_t samples, std::uint64_t seed, const Rational& constant, Admissibility rule) {
  if (n < 1) throw std::invalid_argument("window start must be positive");
  std::vector<FinVec> vectors{FinVec::indicator(n, 2 * n)};
  for (Index i = n; i <= 2 * n; ++i) vectors.push_back(FinVec::basis(i));
  std::vector<std::pair<Index, Rational>> alternating, sparse;
  for (Index i = n; i <= 2 * n; ++i) {
    alternating.emplace_back(i, (i - n) % 2 == 0 ? 1 : -1);
    if ((i - n) % 2 == 0) sparse.emplace_back(i, 1);
  }
  vectors.push_back(FinVec::from_pairs(std::move(alternating)));
  vectors.push_back(FinVec::from_pairs(std::move(sparse)));
  Sampler sampler(seed);
  const auto pool = default_coefficient_pool();
  for (std::size_t s = 0; s < samples; ++s) vectors.push_back(sampler.vector_on(n, 2 * n, pool));

  std::vector<Case> cases;
  for (const auto& a : vectors) cases.push_back(window_case(a, constant, rule));
  return aggregate("window_bound/n=" + padded(n),
                   {{"n", n}, {"samples", samples}, {"seed", seed}, {"admissibility", rule.name()}}, constant, cases);
}

Certificate check_partition_bound(const FinVec& y, const std::vector<Index>& boundaries, Admissibility rule) {
  if (boundaries.size() < 2 || boundaries.front() != 0) throw std::invalid_argument("boundaries must start with k_1 = 0");
  for (std::size_t j = 1; j < boundaries.size(); ++j) {
    if (boundaries[j] <= boundaries[j - 1]) throw std::invalid_argument("boundaries must increase strictly");
  }
  if (!y.is_zero() && y.max_index() > boundaries.back()) throw std::invalid_argument("boundaries do not cover supp(y)");

  std::vector<std::pair<Index, Rational>> weights;
  nlohmann::json block_norms = nlohmann::json::array();
  for (std::size_t j = 0; j + 1 < boundaries.size(); ++j) {
    const Rational b = dual_norm(restrict(y, IndexInterval(boundaries[j] + 1, boundaries[j + 1])), rule).upper;
    block_norms.push_back(to_string(b));
    weights.emplace_back(j + 1, b);
  }
  Certificate c;
  c.check = "partition_bound";
  c.params = {{"boundaries", boundaries}, {"admissibility", rule.name()}, {"comparison", "<="}};
  c.lhs = dual_norm(y, rule).upper;
  c.rhs = dual_norm(FinVec::from_pairs(std::move(weights)), rule).lower;
  c.constant = 1;
  c.witness = {{"kind", "dual_norm"},
               {"vector", to_json(y)},
               {"boundaries", boundaries},
               {"block_norms", block_norms},
               {"admissibility", rule.name()}};
  c.pass = c.lhs <= c.rhs;
  return c;
}

Certificate check_block_domination(const BlockSequence& u, const FinVec& a, const JamesEngine& james) {
  const FinVec x = combine(u, a);
  const JamesResult r = james.evaluate(x);
  std::vector<std::pair<Index, Rational>> weights;
  for (Index j = 1; j <= u.size(); ++j) weights.emplace_back(j, abs_value(a.coeff(j)) + abs_value(a.coeff(j + 1)));
  Certificate c;
  c.check = "block_domination";
  c.params = {{"blocks", u.size()}, {"coefficients", to_json(a)}, {"admissibility", rule_of(james)}, {"comparison", "<="}};
  c.lhs = r.value.upper;
  c.rhs = james.base().eval(FinVec::from_pairs(std::move(weights))).lower;
  c.constant = 1;
  c.witness = james_witness(x, r, james);
  c.pass = c.lhs <= c.rhs;
  return c;
}

Certificate check_cor10(const BlockSequence& u, Index n, const FinVec& a, const JamesEngine& james) {
  if (n < 1 || u.size() < 2 * n) throw std::invalid_argument("cor10 needs n >= 1 and at least 2n blocks");
  if (!a.is_zero() && (a.min_index() < n || a.max_index() > 2 * n)) throw std::invalid_argument("coefficients must lie in [n, 2n]");
  const FinVec x = combine(u, a);
  const JamesResult r = james.evaluate(x);
  Certificate c;
  c.check = "cor10";
  c.params = {{"n", n}, {"coefficients", to_json(a)}, {"admissibility", rule_of(james)}, {"comparison", "<="}};
  c.lhs = r.value.upper;
  c.constant = 4;
  c.rhs = c.constant * a.sup_norm();
  c.witness = james_witness(x, r, james);
  c.pass = c.lhs <= c.rhs;
  return c;
}

nlohmann::json QEstimateReport::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : ranges) rs.push_back({{"n", r.n}, {"m", r.m}, {"minimum", ratio_json(r.minimum)}});
  return {{"q", exponent_text(q)}, {"ranges", rs}, {"empirical_c", ratio_json(empirical_c)}};
}

bool certainly_less(const QRatio& a, const QRatio& b, const LpExponent& q) {
  if (exact_exponent(q)) {
    const unsigned long e = exponent_of(q);
    return power(a.norm, e) * b.power_sum < power(b.norm, e) * a.power_sum;
  }
  return a.value.hi < b.value.lo;
}

bool certainly_at_most(const QRatio& r, const Rational& c, const Rational& length, const LpExponent& q) {
  if (q.is_infinite()) return r.norm <= c * r.power_sum;
  if (q.is_integer()) {
    const unsigned long e = exponent_of(q);
    return power(r.norm, e) * length <= power(c, e) * r.power_sum;
  }
  if (length.get_den() != 1 || length <= 0) throw std::invalid_argument("length must be a positive integer");
  const RealInterval root = lp_norm(FinVec::indicator(1, length.get_num().get_ui()), q);
  return r.value.hi <= c / root.hi;
}

QEstimateReport q_estimate_scan(const BlockSequence& u, const LpExponent& q, const std::vector<std::pair<Index, Index>>& ranges,
                                std::uint64_t seed, std::size_t samples, const JamesEngine& james) {
  QEstimateReport report;
  report.q = q;
  const auto pool = positive_pool();
  for (std::size_t k = 0; k < ranges.size(); ++k) {
    const auto [n, m] = ranges[k];
    if (n < 1 || n > m || m > u.size()) throw std::invalid_argument("range must satisfy 1 <= n <= m <= block count");
    QRatio best = make_ratio(u, FinVec::indicator(n, m), q, james);
    Sampler sampler(mix(seed, k));
    for (std::size_t s = 0; s < samples; ++s) {
      QRatio cand = make_ratio(u, sampler.vector_on(n, m, pool), q, james);
      if (certainly_less(cand, best, q)) best = std::move(cand);
    }
    if (report.ranges.empty() || certainly_less(best, report.empirical_c, q)) report.empirical_c = best;
    report.ranges.push_back({n, m, std::move(best)});
  }
  return report;
}

Certificate check_shrinking_series(const BlockSequence& u, std::size_t levels, const JamesEngine& james) {
  if (levels > 0 && u.size() < (std::size_t{1} << (levels + 1))) {
    throw std::invalid_argument("shrinking series needs 2^(levels+1) blocks");
  }
  std::vector<Case> cases;
  nlohmann::json level_norms = nlohmann::json::array();
  Rational total = 0;
  for (std::size_t n = 1; n <= levels; ++n) {
    const Index lo = (Index{1} << n) + 1, hi = Index{1} << (n + 1);
    Rational alpha = 1;
    mpq_div_2exp(alpha.get_mpq_t(), alpha.get_mpq_t(), n);
    const FinVec x = combine(u, alpha * FinVec::indicator(lo, hi));
    const JamesResult r = james.evaluate(x);
    level_norms.push_back(to_string(r.value.upper));
    total += r.value.upper;
    cases.push_back({r.value.upper, 4 * alpha, james_witness(x, r, james)});
  }
  Certificate c = aggregate("shrinking_series", {{"levels", levels}, {"admissibility", rule_of(james)}}, 4, cases);
  c.params["level_norms"] = level_norms;
  c.params["level_sum"] = to_string(total);
  c.pass = c.pass && total <= 4;
  return c;
}

SuiteConfig SuiteConfig::named(const std::string& name) {
  SuiteConfig c;
  c.name = name;
  c.checks = known_checks();
  if (name == "default") return c;
  if (name == "quick") {
    c.window_samples = 20;
    c.window_max_n = 5;
    c.partition_cases = 20;
    c.domination_cases = 10;
    c.cor10_cases = 10;
    c.q_samples = 1;
    c.q_max_j = 3;
    c.series_levels = 2;
    return c;
  }
  throw std::invalid_argument("unknown suite \"" + name + "\" (expected default or quick)");
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"window_bound", "partition_bound", "block_domination",
                                              "cor10",        "q_decay",         "shrinking_series"};
  return names;
}

std::size_t CertificateReport::failures() const {
  return static_cast<std::size_t>(std::count_if(certificates.begin(), certificates.end(), [](const Certificate& c) { return !c.pass; }));
}

nlohmann::json CertificateReport::to_json() const {
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : certificates) certs.push_back(c.to_json());
  return {{"suite", suite},
          {"seed", seed},
          {"admissibility", admissibility},
          {"total", certificates.size()},
          {"failures", failures()},
          {"certificates", certs}};
}

std::string CertificateReport::to_csv() const {
  std::ostringstream out;
  out << "check,lhs,rhs,constant,max_ratio,pass\n";
  for (const auto& c : certificates) {
    out << c.check << ',' << to_string(c.lhs) << ',' << to_string(c.rhs) << ',' << to_string(c.constant) << ','
        << c.params.value("max_ratio", "") << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

namespace {

using Task = std::function<std::vector<Certificate>()>;

std::vector<Case> collect(const std::vector<Certificate>& certs) {
  std::vector<Case> cases;
  for (const auto& c : certs) cases.push_back({c.lhs, c.rhs, c.witness});
  return cases;
}

std::vector<Task> tasks_for(const std::string& check, const SuiteConfig& cfg, const std::shared_ptr<const JamesEngine>& james) {
  const Admissibility rule = cfg.rule;
  const std::uint64_t seed = cfg.seed;
  std::vector<Task> tasks;
  if (check == "window_bound") {
    for (Index n = cfg.window_min_n; n <= cfg.window_max_n; ++n) {
      tasks.push_back([=] { return std::vector{check_window_bound(n, cfg.window_samples, mix(seed, n), cfg.window_constant, rule)}; });
    }
  } else if (check == "partition_bound") {
    tasks.push_back([=] {
      std::vector<Case> cases;
      const auto pool = default_coefficient_pool();
      for (std::size_t k = 0; k < cfg.partition_cases; ++k) {
        Sampler s(mix(seed, 1000 + k));
        const Index lo = 1 + s.below(5);
        const Index hi = lo + s.below(cfg.partition_max_hull);
        std::vector<std::pair<Index, Rational>> pairs{{lo, s.pick(pool)}};
        if (hi > lo) pairs.emplace_back(hi, s.pick(pool));
        for (Index i = lo + 1; i < hi; ++i) {
          if (s.below(4) != 0) pairs.emplace_back(i, s.pick(pool));
        }
        std::vector<Index> boundaries{0};
        for (Index cut = lo > 1 ? lo - 1 : 1; cut < hi; ++cut) {
          if (s.below(2) == 0) boundaries.push_back(cut);
        }
        boundaries.push_back(hi + s.below(2));
        const Certificate c = check_partition_bound(FinVec::from_pairs(std::move(pairs)), boundaries, rule);
        cases.push_back({c.lhs, c.rhs, c.witness});
      }
      return std::vector{aggregate("partition_bound", {{"seed", seed}, {"admissibility", rule.name()}}, 1, cases)};
    });
  } else if (check == "block_domination" || check == "cor10") {
    const bool cor10 = check == "cor10";
    const std::size_t count_cases = cor10 ? cfg.cor10_cases : cfg.domination_cases;
    tasks.push_back([=] {
      std::vector<Certificate> certs;
      const auto pool = default_coefficient_pool();
      for (std::size_t k = 0; k < count_cases; ++k) {
        Sampler s(mix(seed, (cor10 ? 3000 : 2000) + k));
        const std::size_t count = cor10 ? 2 + s.below(3) : 1 + s.below(4);
        const std::size_t width = std::min<std::size_t>(3, 12 / count);
        const BlockSequence u = random_block_sequence(mix(seed, (cor10 ? 5000 : 4000) + k), count, width, pool, *james);
        if (cor10) {
          const Index n = count >= 4 ? 1 + s.below(2) : 1;
          certs.push_back(check_cor10(u, n, s.vector_on(n, 2 * n, pool), *james));
        } else {
          certs.push_back(check_block_domination(u, s.vector_on(1, count, pool), *james));
        }
      }
      return std::vector{aggregate(check, {{"seed", seed}, {"admissibility", rule.name()}}, cor10 ? 4 : 1, collect(certs))};
    });
  } else if (check == "q_decay") {
    tasks.push_back([=] {
      const LpExponent q = LpExponent::finite(2);
      const BlockSequence u = BlockSequence::basis(std::size_t{1} << (cfg.q_max_j + 1));
      std::vector<std::pair<Index, Index>> ranges;
      for (std::size_t j = 1; j <= cfg.q_max_j; ++j) ranges.emplace_back(Index{1} << j, Index{1} << (j + 1));
      const QEstimateReport report = q_estimate_scan(u, q, ranges, seed, cfg.q_samples, *james);
      std::vector<Certificate> certs;
      for (std::size_t k = 0; k < report.ranges.size(); ++k) {
        const auto& r = report.ranges[k];
        const Rational length = r.m - r.n + 1;
        const FinVec x = combine(u, r.minimum.coefficients);
        Certificate plateau;
        plateau.check = "q_decay/plateau/j=" + padded(k + 1);
        plateau.params = {{"q", 2}, {"n", r.n}, {"m", r.m}, {"admissibility", rule.name()},
                          {"comparison", "norm^q * length <= constant^q * power_sum"}, {"minimum", ratio_json(r.minimum)}};
        plateau.constant = 2;
        plateau.lhs = power(r.minimum.norm, 2) * length;
        plateau.rhs = power(plateau.constant, 2) * r.minimum.power_sum;
        plateau.witness = {{"kind", "q_power"}, {"vector", to_json(x)}, {"q", 2}, {"factor", to_string(length)},
                           {"admissibility", rule.name()}};
        plateau.pass = certainly_at_most(r.minimum, plateau.constant, length, q);
        certs.push_back(std::move(plateau));
        if (k == 0) continue;
        const auto& prev = report.ranges[k - 1];
        Certificate dec;
        dec.check = "q_decay/decreasing/j=" + padded(k + 1);
        dec.params = {{"q", 2}, {"previous", ratio_json(prev.minimum)}, {"current", ratio_json(r.minimum)},
                      {"admissibility", rule.name()}, {"comparison", "<"}};
        dec.constant = 1;
        dec.lhs = power(r.minimum.norm, 2) * prev.minimum.power_sum;
        dec.rhs = power(prev.minimum.norm, 2) * r.minimum.power_sum;
        dec.witness = {{"kind", "q_power"}, {"vector", to_json(x)}, {"q", 2},
                       {"factor", to_string(prev.minimum.power_sum)}, {"admissibility", rule.name()}};
        dec.pass = certainly_less(r.minimum, prev.minimum, q);
        certs.push_back(std::move(dec));
      }
      return certs;
    });
  } else if (check == "shrinking_series") {
    tasks.push_back([=] {
      const BlockSequence u = BlockSequence::basis(std::size_t{1} << (cfg.series_levels + 1));
      return std::vector{check_shrinking_series(u, cfg.series_levels, *james)};
    });
  } else {
    throw std::invalid_argument("unknown check \"" + check + "\"");
  }
  return tasks;
}

}  // namespace

CertificateReport run_suite(const SuiteConfig& config) {
  CertificateReport report;
  report.suite = config.name;
  report.seed = config.seed;
  report.admissibility = config.rule.name();
  auto james = std::make_shared<const JamesEngine>(JamesEngine::tsirelson_james(config.rule));
  std::vector<Task> tasks;
  for (const auto& name : config.checks) {
    auto more = tasks_for(name, config, james);
    tasks.insert(tasks.end(), more.begin(), more.end());
  }
  const auto results = parallel_map<std::vector<Certificate>>(tasks.size(), [&](std::size_t i) { return tasks[i](); });
  for (const auto& r : results) report.certificates.insert(report.certificates.end(), r.begin(), r.end());
  std::stable_sort(report.certificates.begin(), report.certificates.end(),
                   [](const Certificate& a, const Certificate& b) { return a.check < b.check; });
  return report;
}

std::vector<SweepRow> sweep(Index n_min, Index n_max, std::size_t samples, std::uint64_t seed, Admissibility rule) {
  if (n_min < 1 || n_min > n_max) throw std::invalid_argument("sweep needs 1 <= n_min <= n_max");
  const JamesEngine james = JamesEngine::tsirelson_james(rule);
  const std::size_t count = n_max - n_min + 1;
  auto rows = parallel_map<std::vector<SweepRow>>(count, [&](std::size_t k) {
    const Index n = n_min + k;
    const Certificate c = check_window_bound(n, samples, mix(seed, n), 2, rule);
    return std::vector<SweepRow>{{"window_bound", n, c.constant * c.lhs / c.rhs},
                                 {"plateau", n, james_value(james, FinVec::indicator(n, 2 * n))}};
  });
  std::vector<SweepRow> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace tsirelson_lab
