// fcil: mine minimal non-redundant association rules from a transaction file.
//
//   fcil mine    <input> --minsup 0.5 --minconf 0.8 [--format text|csv|json]
//   fcil lattice <input> --minsup 0.5
//   fcil stats   <input> --minsup 0.2
//   fcil bench   <input> --minsup 0.5 --minconf 0.8 [--repeat 3]
//
// Exit codes: 0 ok, 1 usage or configuration, 2 I/O, 3 verification mismatch.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fcil/fcil.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kMismatch = 3 };

struct RunConfig {
  std::string input;
  std::string minsup = "0.5";
  std::string minconf = "0.8";
  std::string output;
  std::string format = "text";
  bool verify = false;
  int repeat = 3;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw fcil::IoError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw fcil::IoError("write failure");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct Loaded {
  fcil::TransactionDatabase db;
  fcil::Count minsup = 1;
};

Loaded load(const RunConfig& cfg) {
  const auto spec = fcil::MinsupSpec::parse(cfg.minsup);
  Loaded out{fcil::load_transactions(cfg.input), 0};
  out.minsup = spec.resolve(out.db.tid_count());
  return out;
}

int report_verify(const fcil::TransactionDatabase& db, const fcil::MiningResult& result) {
  const auto report = fcil::verify_against_oracle(db, result);
  if (!report.checked) {
    std::cerr << "verify: skipped (" << report.skipped_reason << ")\n";
    return kOk;
  }
  for (const auto& m : report.mismatches) std::cerr << "verify: MISMATCH " << m << '\n';
  if (!report.ok()) return kMismatch;
  std::cerr << "verify: ok\n";
  return kOk;
}

int cmd_mine(const RunConfig& cfg) {
  const auto format = fcil::parse_rule_format(cfg.format);
  const auto minconf = fcil::parse_minconf(cfg.minconf);
  auto [db, minsup] = load(cfg);
  const auto result = fcil::run_pipeline(db, minsup, minconf);
  Output out(cfg.output);
  fcil::write_rules(out.stream(), db, result.rules, format);
  out.finish();
  char times[128];
  std::snprintf(times, sizeof times, "mine_ms=%.3f lattice_ms=%.3f rules_ms=%.3f",
                result.timings.mine_ms, result.timings.lattice_ms, result.timings.rules_ms);
  std::cerr << "minsup=" << minsup << " FCI=" << result.lattice.pattern_count()
            << " MGS=" << result.generator_count << " MNAR=" << result.rules.size() << ' '
            << times << '\n';
  return cfg.verify ? report_verify(db, result) : kOk;
}

int cmd_lattice(const RunConfig& cfg) {
  auto [db, minsup] = load(cfg);
  const auto result = fcil::run_pipeline(db, minsup, fcil::Ratio::one());
  Output out(cfg.output);
  fcil::write_lattice(out.stream(), db, result.lattice);
  out.finish();
  std::cerr << "minsup=" << minsup << " FCI=" << result.lattice.pattern_count()
            << " edges=" << result.lattice.edge_count() << '\n';
  return cfg.verify ? report_verify(db, result) : kOk;
}

int cmd_stats(const RunConfig& cfg) {
  auto [db, minsup] = load(cfg);
  const fcil::VerticalIndex index(db);
  const auto fi = fcil::count_frequent(index, minsup);
  const auto fci = fcil::mine_closed(index, minsup).size();
  Output out(cfg.output);
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.4f",
                fci ? static_cast<double>(fi) / static_cast<double>(fci) : 0.0);
  out.stream() << "transactions=" << db.tid_count() << '\n'
               << "items=" << db.item_count() << '\n'
               << "minsup=" << minsup << '\n'
               << "FI=" << fi << '\n'
               << "FCI=" << fci << '\n'
               << "ratio=" << ratio << '\n';
  out.finish();
  return kOk;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

int cmd_bench(const RunConfig& cfg) {
  if (cfg.repeat < 1) throw fcil::ConfigError("--repeat must be >= 1");
  const auto minconf = fcil::parse_minconf(cfg.minconf);
  auto [db, minsup] = load(cfg);
  const fcil::VerticalIndex index(db);
  std::vector<double> mine, lattice, rules;
  std::optional<std::size_t> rule_count;
  std::size_t fci = 0;
  bool stable = true;
  for (int k = 0; k < cfg.repeat; ++k) {
    const auto r = fcil::run_pipeline(db, index, minsup, minconf);
    mine.push_back(r.timings.mine_ms);
    lattice.push_back(r.timings.lattice_ms);
    rules.push_back(r.timings.rules_ms);
    if (rule_count && *rule_count != r.rules.size()) stable = false;
    rule_count = r.rules.size();
    fci = r.lattice.pattern_count();
  }
  Output out(cfg.output);
  auto row = [&](const char* name, const std::vector<double>& v) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s\t%.3f\t%.3f\t%.3f\n", name, median(v),
                  *std::min_element(v.begin(), v.end()), *std::max_element(v.begin(), v.end()));
    out.stream() << buf;
  };
  out.stream() << "stage\tmedian_ms\tmin_ms\tmax_ms\n";
  row("mine_fci", mine);
  row("build_lattice", lattice);
  row("generate_rules", rules);
  out.stream() << "# runs=" << cfg.repeat << " minsup=" << minsup << " fci=" << fci
               << " rules=" << *rule_count << " stable=" << (stable ? "yes" : "no") << '\n';
  out.finish();
  return stable ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal non-redundant association rules from a frequent closed itemset lattice"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "transaction file, one transaction per line")
        ->required();
    sub->add_option("--minsup", cfg.minsup,
                    "fraction (0.5, 1/2, 50%) or absolute count with t suffix (3t)")
        ->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
  };

  auto* mine = app.add_subcommand("mine", "mine rules");
  add_common(mine);
  mine->add_option("--minconf", cfg.minconf, "decimal (0.8), fraction (4/5) or percent")
      ->capture_default_str();
  mine->add_option("--format", cfg.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  mine->add_flag("--verify", cfg.verify, "cross-check against the brute-force oracle");

  auto* lattice = app.add_subcommand("lattice", "dump the closed itemset lattice");
  add_common(lattice);
  lattice->add_flag("--verify", cfg.verify, "cross-check against the brute-force oracle");

  auto* stats = app.add_subcommand("stats", "frequent vs closed itemset counts");
  add_common(stats);

  auto* bench = app.add_subcommand("bench", "per-stage timing table");
  add_common(bench);
  bench->add_option("--minconf", cfg.minconf, "minimum confidence")->capture_default_str();
  bench->add_option("--repeat", cfg.repeat, "number of runs")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*mine) return cmd_mine(cfg);
    if (*lattice) return cmd_lattice(cfg);
    if (*stats) return cmd_stats(cfg);
    if (*bench) return cmd_bench(cfg);
  } catch (const fcil::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const fcil::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}
