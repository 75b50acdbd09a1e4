#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cli/bfile.hpp"
#include "cli/cache.hpp"
#include "cli/count_runner.hpp"
#include "cli/table.hpp"
#include "cli/verify.hpp"
#include "ptcount/partial_transpose.hpp"

namespace {

constexpr int kUsageError = 2;

struct CountArgs {
  std::string stat;
  int p = 0;
  int q = 0;
  std::string method;
  bool exclude_identity = false;
  int jobs = 1;
  std::string format = "plain";
  bool no_cache = false;
  std::string cache_file = "ptcount_cache.csv";
  int naive_guard = 10;
  int backtrack_guard = 4;
};

int do_count(const CountArgs& args) {
  const auto stat = ptcount::parse_statistic(args.stat);
  const auto method = ptcount::cli::parse_method(args.method);
  const auto format = ptcount::cli::parse_format(args.format);
  if (!stat || !method || !format) {
    std::cerr << "unknown stat, method or format\n";
    return kUsageError;
  }
  if (args.exclude_identity && *stat != ptcount::Statistic::zt_perm &&
      *stat != ptcount::Statistic::zt_fixed) {
    std::cerr << "--exclude-identity applies to the zt statistics only\n";
    return kUsageError;
  }
  ptcount::OracleOptions opts;
  opts.jobs = args.jobs;
  opts.naive_guard = args.naive_guard;
  opts.include_identity = !args.exclude_identity;
  const ptcount::CountReport report =
      ptcount::cli::run_count(*stat, *method, args.p, args.q, opts, args.backtrack_guard);
  std::cout << ptcount::cli::render_count(report, *format);
  if (!args.no_cache) {
    ptcount::cli::CacheRecord record;
    record.stat = args.stat;
    record.p = args.p;
    record.q = args.q;
    record.method = args.method;
    record.value = ptcount::to_decimal(report.value);
    record.timestamp = ptcount::cli::utc_timestamp();
    ptcount::cli::append_cache_record(args.cache_file, record);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting for the partial transpose of permutation matrices"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "evaluate one statistic by one method");
  count->add_option("--stat", count_args.stat, "z | ze | zt-perm | zt-fixed")
      ->required()
      ->check(CLI::IsMember({"z", "ze", "zt-perm", "zt-fixed"}));
  count->add_option("--p", count_args.p, "block-grid side")->required();
  count->add_option("--q", count_args.q, "block side")->required();
  count->add_option("--method", count_args.method, "formula | oracle | backtrack")
      ->required()
      ->check(CLI::IsMember({"formula", "oracle", "backtrack"}));
  count->add_flag("--exclude-identity", count_args.exclude_identity,
                  "follow the stricter involution convention (zt only)");
  count->add_option("--jobs", count_args.jobs, "worker threads for the scan");
  count->add_option("--format", count_args.format, "plain | csv | json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  count->add_flag("--no-cache", count_args.no_cache, "do not append to the result cache");
  count->add_option("--cache-file", count_args.cache_file, "result cache path");
  count->add_option("--naive-guard", count_args.naive_guard,
                    "largest n for a full S_n scan");
  count->add_option("--backtrack-guard", count_args.backtrack_guard,
                    "largest p for the backtrack counter");

  int verify_max_n = 0;
  std::string verify_report_path;
  int verify_jobs = 1;
  int verify_naive_guard = 10;
  int verify_backtrack_guard = 4;
  auto* verify = app.add_subcommand(
      "verify", "run the oracle-vs-formula grid and the required anchors");
  verify->add_option("--max-n", verify_max_n, "largest matrix side in the grid")
      ->required();
  verify->add_option("--report", verify_report_path, "also write the report here");
  verify->add_option("--jobs", verify_jobs, "worker threads for the scans");
  verify->add_option("--naive-guard", verify_naive_guard, "largest n for a full scan");
  verify->add_option("--backtrack-guard", verify_backtrack_guard,
                     "largest p for the backtrack counter");

  int table_n = 0, table_p = 0;
  auto* table = app.add_subcommand("table", "print every permutation with its profile word");
  table->add_option("--n", table_n, "matrix side (<= 8)")->required();
  table->add_option("--p", table_p, "block-grid side; must divide n")->required();

  std::string profile_word;
  int profile_p = 0;
  auto* profile_cmd =
      app.add_subcommand("profile", "profile word of one permutation's partial transpose");
  profile_cmd->add_option("--perm", profile_word, "one-line word, e.g. 3142")->required();
  profile_cmd->add_option("--p", profile_p, "block-grid side; must divide the length")
      ->required();

  std::string bfile_stat;
  int bfile_count = 0;
  std::string bfile_out;
  auto* bfile = app.add_subcommand("bfile", "write a sequence as b-file lines");
  bfile->add_option("--stat", bfile_stat, "sequence name")
      ->required()
      ->check(CLI::IsMember(ptcount::cli::bfile_statistics()));
  bfile->add_option("--count", bfile_count, "number of terms")->required();
  bfile->add_option("--out", bfile_out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (count->parsed()) return do_count(count_args);

    if (verify->parsed()) {
      ptcount::cli::VerifyOptions opts;
      opts.jobs = verify_jobs;
      opts.naive_guard = verify_naive_guard;
      opts.backtrack_guard = verify_backtrack_guard;
      const auto report = ptcount::cli::run_verify(verify_max_n, opts);
      const std::string text = ptcount::cli::render_report(report);
      std::cout << text;
      if (!verify_report_path.empty()) {
        std::ofstream out(verify_report_path);
        if (!out) {
          std::cerr << "cannot write report to " << verify_report_path << '\n';
          return kUsageError;
        }
        out << text;
      }
      return report.anchors_ok() ? 0 : 1;
    }

    if (table->parsed()) {
      std::cout << ptcount::cli::render_table(ptcount::cli::profile_table(table_n, table_p));
      return 0;
    }

    if (profile_cmd->parsed()) {
      const ptcount::Permutation pi = ptcount::Permutation::parse(profile_word);
      if (profile_p < 1 || pi.size() % profile_p != 0) {
        std::cerr << "p must divide the permutation length\n";
        return kUsageError;
      }
      const ptcount::BlockShape shape(profile_p, pi.size() / profile_p);
      const auto image =
          inner_partial_transpose(ptcount::BinaryMatrix::from_permutation(pi), shape);
      std::cout << ptcount::profile(image).to_string() << '\n';
      return 0;
    }

    if (bfile->parsed()) {
      if (bfile_count < 1) {
        std::cerr << "--count must be >= 1\n";
        return kUsageError;
      }
      if (bfile_out.empty()) {
        ptcount::cli::write_bfile(std::cout, bfile_stat, bfile_count);
      } else {
        std::ofstream out(bfile_out);
        if (!out) {
          std::cerr << "cannot write " << bfile_out << '\n';
          return kUsageError;
        }
        ptcount::cli::write_bfile(out, bfile_stat, bfile_count);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
