#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tsirelson_lab/blockseq.hpp"
#include "tsirelson_lab/jamesify.hpp"
#include "tsirelson_lab/lp_norm.hpp"
#include "tsirelson_lab/tsirelson.hpp"

namespace tsirelson_lab {

/// Outcome of one exact check. pass holds iff lhs <= rhs. Aggregated checks
/// report their worst case (largest lhs / rhs) in lhs, rhs and witness and
/// keep the case count, failure count and maximal ratio in params.
struct Certificate {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  Rational lhs = 0;
  Rational rhs = 0;
  Rational constant = 0;
  /// Carries "kind" naming how lhs is recomputed (see replay_witness).
  nlohmann::json witness = nlohmann::json::object();
  bool pass = false;

  nlohmann::json to_json() const;
  static Certificate from_json(const nlohmann::json& j);
};

/// Recomputes lhs from the witness alone. Witness kinds:
///   "dual_norm"  {vector}                  lhs = ||vector||_{T*}
///   "james_norm" {vector, selection}       lhs = ||vector||_{T_J*}, and the
///                                          selection attains it
///   "q_power"    {vector, q, length}       lhs = ||vector||_{T_J*}^q * length
///   "none"                                 lhs = 0
bool replay_witness(const Certificate& c);

/// Worst ratio ||a||_{T*} / max|a| over `samples` seeded random vectors
/// supported in [n, 2n] plus the indicator, every spike and both
/// alternations; compared against `constant` (2 for the genuine bound).
Certificate check_window_bound(Index n, std::size_t samples, std::uint64_t seed, const Rational& constant = 2,
                               Admissibility rule = Admissibility::library_default());

/// ||y||_{T*} <= || sum_j ||y restricted to (k_j, k_{j+1}]||_{T*} t_j ||_{T*}.
/// The blocks keep their own positions on the right-hand side.
Certificate check_partition_bound(const FinVec& y, const std::vector<Index>& boundaries,
                                  Admissibility rule = Admissibility::library_default());

/// || sum_j a_j u_j ||_{T_J*} <= || sum_j (|a_j| + |a_{j+1}|) t_j ||_{T*}
/// for j = 1..size(u), with a_{size+1} = 0.
Certificate check_block_domination(const BlockSequence& u, const FinVec& a, const JamesEngine& james);

/// || sum_{j=n}^{2n} a_j u_j ||_{T_J*} <= 4 max|a_j|; needs supp(a) in [n, 2n]
/// and at least 2n blocks.
Certificate check_cor10(const BlockSequence& u, Index n, const FinVec& a, const JamesEngine& james);

/// ||sum a_j u_j|| / (sum |a_j|^q)^{1/q} for one coefficient vector a.
struct QRatio {
  Rational norm;
  /// sum |a_j|^q for integer q (max |a_j| for q = infinity); 0 otherwise.
  Rational power_sum;
  /// Enclosure of the ratio itself.
  RealInterval value;
  FinVec coefficients;
};

struct QEstimateRange {
  Index n;
  Index m;
  QRatio minimum;
};

struct QEstimateReport {
  LpExponent q = LpExponent::infinity();
  std::vector<QEstimateRange> ranges;
  /// Minimum over all ranges.
  QRatio empirical_c;

  nlohmann::json to_json() const;
};

/// True when a < b is certain: exact for integer or infinite q, by interval
/// separation otherwise.
bool certainly_less(const QRatio& a, const QRatio& b, const LpExponent& q);

/// True when r <= c / length^{1/q} is certain.
bool certainly_at_most(const QRatio& r, const Rational& c, const Rational& length, const LpExponent& q);

/// Minimum ratio over the indicator of each range [n, m] and `samples`
/// seeded positive coefficient vectors on it.
QEstimateReport q_estimate_scan(const BlockSequence& u, const LpExponent& q,
                                const std::vector<std::pair<Index, Index>>& ranges, std::uint64_t seed,
                                std::size_t samples, const JamesEngine& james);

/// Level n = 1..levels: || sum_{j=2^n+1}^{2^{n+1}} 2^{-n} u_j ||_{T_J*} <= 4 / 2^n,
/// and the sum of the level norms stays <= 4. Needs 2^{levels+1} blocks.
Certificate check_shrinking_series(const BlockSequence& u, std::size_t levels, const JamesEngine& james);

struct SuiteConfig {
  std::string name = "custom";
  std::vector<std::string> checks;
  std::uint64_t seed = 7;
  Admissibility rule = Admissibility::library_default();
  Rational window_constant = 2;
  std::size_t window_samples = 500;
  Index window_min_n = 2;
  Index window_max_n = 10;
  std::size_t partition_cases = 200;
  std::size_t partition_max_hull = 10;
  std::size_t domination_cases = 100;
  std::size_t cor10_cases = 100;
  std::size_t q_samples = 4;
  std::size_t q_max_j = 4;
  std::size_t series_levels = 3;

  /// "default": every check at full size. "quick": every check, small sizes.
  static SuiteConfig named(const std::string& name);
};

/// window_bound, partition_bound, block_domination, cor10, q_decay, shrinking_series.
const std::vector<std::string>& known_checks();

struct CertificateReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::string admissibility;
  std::vector<Certificate> certificates;

  std::size_t failures() const;
  nlohmann::json to_json() const;
  /// check,lhs,rhs,constant,max_ratio,pass
  std::string to_csv() const;
};

/// Runs the configured checks (in parallel, see thread_cap) and orders the
/// certificates by check id. Throws std::invalid_argument on an unknown check.
CertificateReport run_suite(const SuiteConfig& config);

struct SweepRow {
  std::string check;
  Index n;
  Rational ratio;
};

/// Exact decay table: worst window ratio and the T_J* plateau value
/// ||1_[n,2n]||_{T_J*} for n in [n_min, n_max].
std::vector<SweepRow> sweep(Index n_min, Index n_max, std::size_t samples, std::uint64_t seed,
                            Admissibility rule = Admissibility::library_default());

}  // namespace tsirelson_lab
