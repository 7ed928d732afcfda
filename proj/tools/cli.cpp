#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrsum/classnum.hpp"
#include "qrsum/parallel.hpp"
#include "qrsum/primes.hpp"
#include "qrsum/theorems.hpp"

namespace qrsum::cli {

namespace {

using Cell = std::variant<std::monostate, std::uint64_t, std::int64_t, bool, double, std::string>;
using Row = std::vector<Cell>;

struct OutputOptions {
  std::string format = "csv";
  bool ndjson = false;
};

// Streams rows as CSV (header + one line per row) or JSON (array or one
// object per line). Missing cells become empty fields / null.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, const std::vector<std::string>& columns, const OutputOptions& opts)
      : out_(out), columns_(columns), json_(opts.format == "json" || opts.ndjson), ndjson_(opts.ndjson) {
    if (!json_) {
      for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
      out_ << '\n';
    } else if (!ndjson_) {
      out_ << '[';
    }
  }

  void write(const Row& row) {
    if (json_) {
      write_json(row);
    } else {
      write_csv(row);
    }
    ++rows_;
  }

  void finish() {
    if (json_ && !ndjson_) out_ << (rows_ ? "\n]\n" : "]\n");
    out_.flush();
  }

 private:
  void write_csv(const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out_ << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
            } else if constexpr (std::is_same_v<T, bool>) {
              out_ << (v ? '1' : '0');
            } else if constexpr (std::is_same_v<T, double>) {
              out_ << format_double(v);
            } else {
              out_ << v;
            }
          },
          row[i]);
    }
    out_ << '\n';
  }

  void write_json(const Row& row) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              obj[columns_[i]] = nullptr;
            } else {
              obj[columns_[i]] = v;
            }
          },
          row[i]);
    }
    if (ndjson_) {
      out_ << obj.dump() << '\n';
    } else {
      out_ << (rows_ ? ",\n" : "\n") << obj.dump();
    }
  }

  static std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
  }

  std::ostream& out_;
  const std::vector<std::string>& columns_;
  bool json_;
  bool ndjson_;
  std::uint64_t rows_ = 0;
};

Cell verdict(const PrimeResult& r, Family f) {
  if (const auto* rep = r.find(f)) return rep->holds;
  return std::monostate{};
}

Row partition_cells(const ResiduePartition& part) {
  return {std::uint64_t{part.p.value()},
          std::uint64_t(to_int(mod8_of(part.p))),
          part.count_q_l,
          part.count_q_u,
          part.count_n_l,
          part.count_n_u,
          part.sum_q_l,
          part.sum_q_u,
          part.sum_n_l,
          part.sum_n_u,
          part.n_below_half};
}

Row verify_row(const PrimeResult& r) {
  Row row = partition_cells(r.partition);
  for (Family f : {Family::kLemma, Family::kTheorem, Family::kEq1, Family::kMod4Baseline}) row.push_back(verdict(r, f));
  return row;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

void print_failure(std::ostream& err, const IdentityReport& rep) {
  err << "FAIL p=" << rep.p.value() << " (mod 8 = " << to_int(rep.mod8) << ") " << name(rep.id) << ": lhs=" << rep.lhs
      << " rhs=" << rep.rhs;
  if (rep.middle) err << " middle=" << *rep.middle;
  err << '\n';
}

std::string seconds(std::chrono::duration<double> d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", d.count());
  return buf;
}

struct RangeArgs {
  std::uint64_t from = 3;
  std::uint64_t to = 100000;
  unsigned jobs = 1;
  bool quiet = false;
};

void add_range_flags(CLI::App* cmd, RangeArgs& range, bool with_jobs) {
  cmd->add_option("--from", range.from, "First integer of the range (>= 3)")->capture_default_str();
  cmd->add_option("--to", range.to, "Last integer of the range (< 2^31)")->capture_default_str();
  if (with_jobs) cmd->add_option("--jobs", range.jobs, "Worker threads, 0 = all cores")->capture_default_str();
  cmd->add_flag("--quiet", range.quiet, "Suppress the summary line");
}

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--ndjson", opts.ndjson, "Newline-delimited JSON, one object per line (implies json)");
}

int cmd_verify(const RangeArgs& range, const std::string& identities, const OutputOptions& opts,
               std::ostream& out, std::ostream& err) {
  const auto sel = IdentitySelection::parse(identities);
  check_range_bounds(range.from, range.to);
  RecordWriter writer(out, verify_columns(), opts);
  const auto summary = verify_range(range.from, range.to, sel, resolve_jobs(range.jobs),
                                    [&](const PrimeResult& r) { writer.write(verify_row(r)); });
  writer.finish();
  for (const auto& f : summary.failures) print_failure(err, f);
  if (!range.quiet) {
    err << "verify: " << summary.primes_checked << " primes checked in [" << summary.lo << ", " << summary.hi
        << "], " << summary.failures.size() << " failures, " << seconds(summary.elapsed) << '\n';
  }
  return summary.failures.empty() ? kExitOk : kExitIdentityFailure;
}

int cmd_partition(const std::string& prime_text, const OutputOptions& opts, std::ostream& out, std::ostream& err) {
  std::uint64_t value = 0;
  const auto* end = prime_text.data() + prime_text.size();
  const auto [ptr, ec] = std::from_chars(prime_text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw std::invalid_argument("'" + prime_text + "' is not a nonnegative integer");
  const auto p = OddPrime::from(value);

  const auto part = partition_by_squares(p);
  const PrimeResult result{part, check_applicable(part, IdentitySelection::all())};
  Row row = verify_row(result);
  for (Family f : {Family::kLemma, Family::kTheorem, Family::kEq1, Family::kMod4Baseline}) {
    const auto* rep = result.find(f);
    row.push_back(rep ? Cell{rep->lhs} : Cell{});
    row.push_back(rep ? Cell{rep->rhs} : Cell{});
    if (f == Family::kEq1) row.push_back(rep && rep->middle ? Cell{*rep->middle} : Cell{});
  }
  bool census_ok = true;
  for (const auto& rep : result.reports) {
    if (family_of(rep.id) == Family::kCensus) census_ok = census_ok && rep.holds;
  }
  row.push_back(census_ok);
  row.push_back(std::string(to_string(doubling_image_class(p))));

  bool class_ok = true;
  if (p.value() % 4 == 3 && p.value() > 3) {
    const auto cross = class_cross_check(part);
    class_ok = cross.holds;
    row.push_back(std::uint64_t{class_number(p)});
    row.push_back(cross.holds);
    if (!cross.holds) print_failure(err, cross);
  } else {
    row.push_back(std::monostate{});
    row.push_back(std::monostate{});
  }

  RecordWriter writer(out, partition_columns(), opts);
  writer.write(row);
  writer.finish();
  for (const auto& rep : result.reports) {
    if (!rep.holds) print_failure(err, rep);
  }
  return result.ok() && class_ok ? kExitOk : kExitIdentityFailure;
}

int cmd_classnum(const RangeArgs& range, const OutputOptions& opts, std::ostream& out, std::ostream& err) {
  check_range_bounds(range.from, range.to);
  const auto start = std::chrono::steady_clock::now();
  RecordWriter writer(out, classnum_columns(), opts);
  std::uint64_t checked = 0;
  std::vector<IdentityReport> failures;

  for_each_prime_batch(range.from, range.to, [&](std::span<const std::uint32_t> batch) {
    std::vector<std::uint32_t> eligible;
    std::copy_if(batch.begin(), batch.end(), std::back_inserter(eligible),
                 [](std::uint32_t p) { return p % 4 == 3 && p > 3; });
    const auto reports = parallel_map(std::span<const std::uint32_t>(eligible), resolve_jobs(range.jobs),
                                      [](std::uint32_t p) { return class_cross_check(partition_by_squares(OddPrime::from(p))); });
    for (const auto& rep : reports) {
      const std::int64_t multiplier = rep.mod8 == Mod8Class::k7 ? 1 : 3;
      writer.write({std::uint64_t{rep.p.value()}, std::uint64_t(to_int(rep.mod8)), rep.rhs / multiplier,
                    rep.lhs, multiplier, rep.holds});
      ++checked;
      if (!rep.holds) failures.push_back(rep);
    }
  });
  writer.finish();

  for (const auto& f : failures) print_failure(err, f);
  if (!range.quiet) {
    err << "classnum: " << checked << " primes p = 3 (mod 4) checked in [" << range.from << ", " << range.to << "], "
        << failures.size() << " failures, " << seconds(std::chrono::steady_clock::now() - start) << '\n';
  }
  return failures.empty() ? kExitOk : kExitIdentityFailure;
}

int cmd_bench(const RangeArgs& range, const OutputOptions& opts, std::ostream& out, std::ostream& err) {
  check_range_bounds(range.from, range.to);
  using clock = std::chrono::steady_clock;
  std::chrono::duration<double> squares_time{};
  std::chrono::duration<double> symbol_time{};
  std::uint64_t primes = 0;
  std::uint64_t mismatches = 0;

  for_each_prime_batch(range.from, range.to, [&](std::span<const std::uint32_t> batch) {
    std::vector<ResiduePartition> by_squares;
    std::vector<ResiduePartition> by_symbol;
    by_squares.reserve(batch.size());
    by_symbol.reserve(batch.size());

    auto t0 = clock::now();
    for (std::uint32_t p : batch) by_squares.push_back(partition_by_squares(OddPrime::from(p)));
    auto t1 = clock::now();
    for (std::uint32_t p : batch) by_symbol.push_back(partition_by_symbol(OddPrime::from(p)));
    auto t2 = clock::now();

    squares_time += t1 - t0;
    symbol_time += t2 - t1;
    primes += batch.size();
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!(by_squares[i] == by_symbol[i])) {
        ++mismatches;
        err << "MISMATCH p=" << batch[i] << ": partition_by_squares and partition_by_symbol disagree\n";
      }
    }
  });

  const bool equal = mismatches == 0;
  RecordWriter writer(out, bench_columns(), opts);
  auto row = [&](const char* algo, std::chrono::duration<double> t) {
    const double secs = t.count();
    const double rate = secs > 0 ? static_cast<double>(primes) / secs : 0.0;
    const double micros = primes ? secs * 1e6 / static_cast<double>(primes) : 0.0;
    writer.write({std::string(algo), primes, secs, rate, micros, equal});
  };
  row("squares", squares_time);
  row("symbol", symbol_time);
  writer.finish();

  if (!range.quiet) {
    err << "bench: " << primes << " primes in [" << range.from << ", " << range.to << "], outputs "
        << (equal ? "equal" : "DIFFER") << '\n';
  }
  return equal ? kExitOk : kExitIdentityFailure;
}

}  // namespace

const std::vector<std::string>& verify_columns() {
  static const std::vector<std::string> cols = {
      "p",       "mod8",    "count_q_l", "count_q_u", "count_n_l", "count_n_u", "sum_q_l",  "sum_q_u",
      "sum_n_l", "sum_n_u", "n",         "lemma_ok",  "theorem_ok", "eq1_ok",   "mod4_1_ok"};
  return cols;
}

const std::vector<std::string>& partition_columns() {
  static const std::vector<std::string> cols = [] {
    auto c = verify_columns();
    c.insert(c.end(), {"lemma_lhs", "lemma_rhs", "theorem_lhs", "theorem_rhs", "eq1_lhs", "eq1_rhs", "eq1_mid",
                       "mod4_1_lhs", "mod4_1_rhs", "census_ok", "doubling", "h", "classnum_ok"});
    return c;
  }();
  return cols;
}

const std::vector<std::string>& classnum_columns() {
  static const std::vector<std::string> cols = {"p", "mod8", "h", "count_diff", "multiplier", "classnum_ok"};
  return cols;
}

const std::vector<std::string>& bench_columns() {
  static const std::vector<std::string> cols = {"algo",          "primes",           "total_seconds",
                                                "primes_per_sec", "us_per_prime",     "outputs_equal"};
  return cols;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic residue sum identities over prime ranges", "qrsum"};
  app.require_subcommand(1);

  OutputOptions opts;
  RangeArgs range;
  std::string identities = "all";
  std::string prime_text;

  auto* verify = app.add_subcommand("verify", "Check the residue-sum identities for every odd prime in a range");
  add_range_flags(verify, range, true);
  add_output_flags(verify, opts);
  verify->add_option("--identities", identities, "Comma list of lemma,theorem,eq1,mod4_1,census or all")
      ->capture_default_str();

  auto* partition = app.add_subcommand("partition", "Show the residue census and identity checks for one prime");
  partition->add_option("p", prime_text, "Odd prime below 2^31")->required();
  add_output_flags(partition, opts);

  RangeArgs class_range;
  auto* classnum = app.add_subcommand("classnum", "Cross-check lower-half counts against h(-p)");
  add_range_flags(classnum, class_range, true);
  add_output_flags(classnum, opts);

  RangeArgs bench_range{3, 10000};
  auto* bench = app.add_subcommand("bench", "Time the two partition algorithms and compare their outputs");
  add_range_flags(bench, bench_range, false);
  add_output_flags(bench, opts);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(range, identities, opts, out, err);
    if (*partition) return cmd_partition(prime_text, opts, out, err);
    if (*classnum) return cmd_classnum(class_range, opts, out, err);
    if (*bench) return cmd_bench(bench_range, opts, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qrsum::cli
