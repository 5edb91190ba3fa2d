#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tsirelson_lab/certify.hpp"
#include "tsirelson_lab/dualnorm.hpp"
#include "tsirelson_lab/jamesify.hpp"
#include "tsirelson_lab/tsirelson.hpp"

using namespace tsirelson_lab;

namespace {

// Input or usage problem; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string vec;
  std::string vec_file;
  std::string seq;
  std::string space = "T";
  std::string base = "Tstar";
  std::string admissibility = Admissibility::library_default().name();
  std::string format;
  std::string output;
  std::string suite = "default";
  std::vector<std::string> checks;
  std::string window_constant;
  std::uint64_t seed = 7;
  Index n_min = 2;
  Index n_max = 10;
  std::size_t samples = 50;
};

Index parse_index(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used == text.size() && v > 0) return static_cast<Index>(v);
  } catch (const std::exception&) {
  }
  throw UsageError(what + ": expected a positive integer, got \"" + text + "\"");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, sep);) out.push_back(part);
  return out;
}

FinVec vector_from_text(const std::string& text) {
  if (!text.empty() && (text.front() == '[' || text.front() == '{')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
      throw UsageError(std::string("vector is not valid JSON: ") + err.what());
    }
    try {
      return vector_from_json(j);
    } catch (const std::invalid_argument& err) {
      throw UsageError(std::string("bad vector: ") + err.what());
    }
  }
  if (text.size() > 1 && text[0] == 'w') return FinVec::indicator(1, parse_index(text.substr(1), "wN"));
  const auto parts = split(text, ':');
  if (parts.size() == 3 && parts[0] == "indicator") {
    const Index lo = parse_index(parts[1], "indicator:n:m"), hi = parse_index(parts[2], "indicator:n:m");
    if (lo > hi) throw UsageError("indicator:n:m needs n <= m");
    return FinVec::indicator(lo, hi);
  }
  if (parts.size() == 2 && parts[0] == "spike") return FinVec::basis(parse_index(parts[1], "spike:k"));
  throw UsageError("unrecognized vector \"" + text + "\" (JSON, wN, indicator:n:m or spike:k)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FinVec input_vector(const Options& o) {
  if (!o.vec.empty() && !o.vec_file.empty()) throw UsageError("give --vec or --vec-file, not both");
  if (!o.vec_file.empty()) return vector_from_text(read_file(o.vec_file));
  if (o.vec.empty()) throw UsageError("a vector is required (--vec or --vec-file)");
  return vector_from_text(o.vec);
}

EventuallyConstantSeq input_sequence(const Options& o) {
  if (o.seq == "x0") return x0_double_star();
  if (o.seq.empty()) return EventuallyConstantSeq::embed(input_vector(o));
  try {
    const auto j = nlohmann::json::parse(o.seq);
    std::vector<Rational> head;
    for (std::size_t k = 0; k < j.at("head").size(); ++k) {
      const auto& item = j.at("head")[k];
      try {
        head.push_back(parse_rational(item.get<std::string>()));
      } catch (const std::exception& err) {
        throw UsageError("head entry " + std::to_string(k) + " (" + item.dump() + "): " + err.what());
      }
    }
    return EventuallyConstantSeq(std::move(head), parse_rational(j.at("tail").get<std::string>()));
  } catch (const nlohmann::json::exception& err) {
    throw UsageError(std::string("sequence must be {\"head\": [...], \"tail\": \"q\"} or x0: ") + err.what());
  } catch (const std::invalid_argument& err) {
    throw UsageError(std::string("bad sequence: ") + err.what());
  }
}

Admissibility rule_of(const Options& o) {
  try {
    return Admissibility::from_name(o.admissibility);
  } catch (const std::invalid_argument& err) {
    throw UsageError(err.what());
  }
}

std::shared_ptr<const NormEngine> base_engine(const std::string& name, Admissibility rule) {
  if (name == "Tstar") return std::make_shared<DualTsirelsonEngine>(rule);
  if (name == "l1") return std::make_shared<L1Engine>();
  if (name == "linf") return std::make_shared<LinfEngine>();
  throw UsageError("unknown base \"" + name + "\" (Tstar, l1 or linf)");
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw UsageError("cannot write " + o.output);
  out << text;
}

std::string bounds_text(const NormBounds& b) {
  return b.is_exact() ? to_string(b.lower) : "[" + to_string(b.lower) + ", " + to_string(b.upper) + "]";
}

void emit_value(const Options& o, const nlohmann::json& doc, const NormBounds& value) {
  if (o.format == "json") {
    emit(o, doc.dump(2) + "\n");
  } else if (o.format == "csv") {
    emit(o, "lower,upper\n" + to_string(value.lower) + "," + to_string(value.upper) + "\n");
  } else {
    emit(o, bounds_text(value) + "\n");
  }
}

nlohmann::json bounds_json(const NormBounds& b) { return {{"lower", to_string(b.lower)}, {"upper", to_string(b.upper)}}; }

int run_norm(const Options& o) {
  const FinVec x = input_vector(o);
  const Admissibility rule = rule_of(o);
  nlohmann::json doc{{"space", o.space}, {"vector", to_json(x)}, {"admissibility", rule.name()}};
  NormBounds value;
  if (o.space == "T") {
    value = NormBounds::exact(tsirelson_norm(x, rule));
    if (!x.is_zero()) doc["maximizer"] = tsirelson_maximizer(x, rule).to_json();
  } else if (o.space == "Tstar") {
    value = dual_norm(x, rule);
  } else if (o.space == "TJ") {
    const JamesResult r = JamesEngine::tsirelson_james(rule).evaluate(x);
    value = r.value;
    if (r.selection) doc["selection"] = r.selection->indices();
  } else if (o.space == "l1") {
    value = L1Engine().eval(x);
  } else if (o.space == "linf") {
    value = LinfEngine().eval(x);
  } else {
    throw UsageError("unknown space \"" + o.space + "\" (T, Tstar, TJ, l1 or linf)");
  }
  doc["value"] = bounds_json(value);
  emit_value(o, doc, value);
  return 0;
}

int run_dual_norm(const Options& o) {
  const FinVec y = input_vector(o);
  const Admissibility rule = rule_of(o);
  const DualNormResult r = dual_norm_certified(y, rule);
  nlohmann::json mult = nlohmann::json::array();
  for (const auto& m : r.multipliers) mult.push_back({{"weight", to_string(m.weight)}, {"functional", to_json(m.functional)}});
  const nlohmann::json doc{{"vector", to_json(y)},
                           {"admissibility", rule.name()},
                           {"value", bounds_json(r.bounds)},
                           {"norming_point", to_json(r.norming_point)},
                           {"multipliers", mult},
                           {"iterations", r.iterations}};
  emit_value(o, doc, r.bounds);
  return 0;
}

int run_james_norm(const Options& o) {
  const FinVec a = input_vector(o);
  const Admissibility rule = rule_of(o);
  const JamesEngine james(base_engine(o.base, rule));
  const JamesResult r = james.evaluate(a);
  nlohmann::json doc{{"vector", to_json(a)}, {"base", james.base().name()}, {"value", bounds_json(r.value)}};
  if (o.base == "Tstar") doc["admissibility"] = rule.name();
  if (r.selection) {
    doc["selection"] = r.selection->indices();
    doc["difference"] = to_json(r.difference);
  }
  doc["base_evaluations"] = r.evaluations;
  emit_value(o, doc, r.value);
  return 0;
}

int run_bidual_norm(const Options& o) {
  const EventuallyConstantSeq x = input_sequence(o);
  const Admissibility rule = rule_of(o);
  const JamesEngine james(base_engine(o.base, rule));
  const BidualNorm b = bidual_norm(x, james);
  const nlohmann::json doc{{"sequence", to_json(x)},
                           {"base", james.base().name()},
                           {"value", bounds_json(b.value)},
                           {"attained_at", b.attained_at},
                           {"alpha", to_string(alpha_limit(x))},
                           {"u_map", to_json(u_map(x))}};
  emit_value(o, doc, b.value);
  return 0;
}

int run_certify(const Options& o) {
  SuiteConfig cfg;
  try {
    cfg = SuiteConfig::named(o.suite);
  } catch (const std::invalid_argument& err) {
    throw UsageError(err.what());
  }
  cfg.seed = o.seed;
  cfg.rule = rule_of(o);
  if (!o.checks.empty()) {
    for (const auto& c : o.checks) {
      if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
        throw UsageError("unknown check \"" + c + "\"");
      }
    }
    cfg.checks = o.checks;
  }
  if (!o.window_constant.empty()) {
    try {
      cfg.window_constant = parse_rational(o.window_constant);
    } catch (const std::invalid_argument& err) {
      throw UsageError(std::string("--window-constant: ") + err.what());
    }
  }
  const CertificateReport report = run_suite(cfg);
  Options out = o;
  if (out.output.empty()) out.output = "certify_report." + std::string(o.format == "csv" ? "csv" : "json");
  emit(out, o.format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n");
  std::cout << report.certificates.size() - report.failures() << "/" << report.certificates.size()
            << " certificates passed; report written to " << out.output << "\n";
  return report.failures() == 0 ? 0 : 1;
}

int run_sweep(const Options& o) {
  const auto rows = sweep(o.n_min, o.n_max, o.samples, o.seed, rule_of(o));
  if (o.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows) doc.push_back({{"check", r.check}, {"n", r.n}, {"ratio", to_string(r.ratio)}});
    emit(o, doc.dump(2) + "\n");
  } else {
    std::ostringstream csv;
    csv << "check,n,ratio\n";
    for (const auto& r : rows) csv << r.check << ',' << r.n << ',' << to_string(r.ratio) << '\n';
    emit(o, csv.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact norms on Tsirelson-type sequence spaces"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, const std::string& output_default = "stdout") {
    cmd->add_option("--admissibility", o.admissibility, "schreier or schreier+1");
    cmd->add_option("--output,-o", o.output, "Output path (default " + output_default + ")");
  };
  auto add_vector = [&](CLI::App* cmd) {
    cmd->add_option("--vec", o.vec, "Vector: JSON entries, wN, indicator:n:m or spike:k");
    cmd->add_option("--vec-file", o.vec_file, "File holding the vector JSON");
  };
  auto add_format = [&](CLI::App* cmd, const std::string& def, std::vector<std::string> allowed) {
    o.format.clear();
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
    cmd->callback([&o, def] {
      if (o.format.empty()) o.format = def;
    });
  };

  auto* norm = app.add_subcommand("norm", "Norm of a finitely supported vector");
  add_vector(norm);
  add_common(norm);
  norm->add_option("--space", o.space, "T, Tstar, TJ, l1 or linf");
  add_format(norm, "text", {"text", "json", "csv"});

  auto* dual = app.add_subcommand("dual-norm", "Dual Tsirelson norm with its certificate");
  add_vector(dual);
  add_common(dual);
  add_format(dual, "text", {"text", "json", "csv"});

  auto* james = app.add_subcommand("james-norm", "James transform norm");
  add_vector(james);
  add_common(james);
  james->add_option("--base", o.base, "Base norm: Tstar, l1 or linf");
  add_format(james, "text", {"text", "json", "csv"});

  auto* bidual = app.add_subcommand("bidual-norm", "Bidual norm of an eventually constant sequence");
  add_vector(bidual);
  add_common(bidual);
  bidual->add_option("--seq", o.seq, "{\"head\": [\"q\", ...], \"tail\": \"q\"} or x0");
  bidual->add_option("--base", o.base, "Base norm: Tstar, l1 or linf");
  add_format(bidual, "text", {"text", "json", "csv"});

  auto* certify = app.add_subcommand("certify", "Run the certification suite");
  add_common(certify, "certify_report.json");
  certify->add_option("--suite", o.suite, "default or quick");
  certify->add_option("--seed", o.seed, "Sampling seed");
  certify->add_option("--checks", o.checks, "Subset of checks")->delimiter(',');
  certify->add_option("--window-constant", o.window_constant, "Constant for window_bound (default 2)");
  add_format(certify, "json", {"json", "csv"});

  auto* sweep_cmd = app.add_subcommand("sweep", "Decay table over windows [n, 2n]");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--n-min", o.n_min, "First n")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--n-max", o.n_max, "Last n")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--samples", o.samples, "Random vectors per window");
  sweep_cmd->add_option("--seed", o.seed, "Sampling seed");
  add_format(sweep_cmd, "csv", {"csv", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (norm->parsed()) return run_norm(o);
    if (dual->parsed()) return run_dual_norm(o);
    if (james->parsed()) return run_james_norm(o);
    if (bidual->parsed()) return run_bidual_norm(o);
    if (certify->parsed()) return run_certify(o);
    return run_sweep(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
