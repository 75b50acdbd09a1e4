#pragma once

#include <string>
#include <vector>

namespace ptcount::cli {

struct VerifyOptions {
  int jobs = 1;
  int naive_guard = 10;
  int backtrack_guard = 4;
};

struct ComparisonRecord {
  std::string statistic;
  int p = 0;
  int q = 0;
  std::string method_a;
  std::string value_a;
  std::string method_b;
  std::string value_b;
  std::string status;          // "agree" | "disagree" | "skipped"
  bool informational = false;  // expected disagreements; never failures
  std::string note;
};

struct AnchorResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Grid of evaluator-vs-oracle comparisons plus the fixed required anchors.
/// Only the anchors decide the exit status; every known misprint in the
/// reference results shows up as an informational record.
struct DiscrepancyReport {
  int max_n = 0;
  std::vector<AnchorResult> anchors;
  std::vector<ComparisonRecord> records;

  bool anchors_ok() const;
};

DiscrepancyReport run_verify(int max_n, const VerifyOptions& opts = {});

std::string render_report(const DiscrepancyReport& report);

}  // namespace ptcount::cli
