#include "cli/verify.hpp"

#include <array>
#include <optional>
#include <sstream>

#include "cli/table.hpp"
#include "ptcount/combinatorics.hpp"
#include "ptcount/enumeration.hpp"
#include "ptcount/formulas.hpp"
#include "ptcount/oracle.hpp"
#include "ptcount/partial_transpose.hpp"

namespace ptcount::cli {

namespace {

// Ground-truth profile table for n = 4, p = 2, frozen from an independent
// enumeration. It differs from the widely reproduced reference table in two
// cells: the 13th entry (misprinted as a duplicate 3142) and 1342 -> 1423
// (misprinted 1432).
constexpr std::array<std::array<const char*, 2>, 24> kReferenceTable{{
    {"1234", "1234"}, {"1243", "1243"}, {"1324", "1414"}, {"1342", "1423"},
    {"1423", "1441"}, {"1432", "1432"}, {"2134", "2134"}, {"2143", "2143"},
    {"2314", "4114"}, {"2341", "4123"}, {"2413", "1414"}, {"2431", "1423"},
    {"3124", "2314"}, {"3142", "2323"}, {"3214", "3214"}, {"3241", "3223"},
    {"3412", "3412"}, {"3421", "3421"}, {"4123", "2341"}, {"4132", "2332"},
    {"4213", "2314"}, {"4231", "2323"}, {"4312", "4312"}, {"4321", "4321"},
}};

ComparisonRecord make_record(std::string statistic, int p, int q,
                             std::string method_a, const BigCount& value_a,
                             std::string method_b, const BigCount& value_b,
                             bool informational = false, std::string note = {}) {
  ComparisonRecord rec;
  rec.statistic = std::move(statistic);
  rec.p = p;
  rec.q = q;
  rec.method_a = std::move(method_a);
  rec.value_a = to_decimal(value_a);
  rec.method_b = std::move(method_b);
  rec.value_b = to_decimal(value_b);
  rec.status = value_a == value_b ? "agree" : "disagree";
  rec.informational = informational;
  rec.note = std::move(note);
  return rec;
}

ComparisonRecord skipped_record(std::string statistic, int p, int q,
                                std::string method_a, const BigCount& value_a,
                                std::string method_b, std::string why) {
  ComparisonRecord rec;
  rec.statistic = std::move(statistic);
  rec.p = p;
  rec.q = q;
  rec.method_a = std::move(method_a);
  rec.value_a = to_decimal(value_a);
  rec.method_b = std::move(method_b);
  rec.value_b = "-";
  rec.status = "skipped";
  rec.note = std::move(why);
  return rec;
}

/// First involution whose partial transpose is a permutation other than the
/// matrix itself, if any.
std::optional<Permutation> first_variant_gap(int p, int q) {
  const BlockShape shape(p, q);
  for (const Permutation& pi : involutions(shape.n()))
    if (gamma_image_is_permutation(pi, shape) && !gamma_fixes_matrix(pi, shape))
      return pi;
  return std::nullopt;
}

void run_anchors(DiscrepancyReport& report, const VerifyOptions& opts) {
  OracleOptions oracle_opts;
  oracle_opts.jobs = opts.jobs;

  {
    AnchorResult a;
    a.name = "Z(2,2) = 12 by oracle, formula and backtrack";
    const BigCount by_oracle = count_z_oracle(2, 2, oracle_opts).value;
    const BigCount by_formula = z_formula(2, 2);
    const BigCount by_backtrack = count_z_backtrack(2, 2).value;
    a.passed = by_oracle == 12 && by_formula == 12 && by_backtrack == 12;
    a.detail = "oracle=" + to_decimal(by_oracle) + " formula=" + to_decimal(by_formula) +
               " backtrack=" + to_decimal(by_backtrack);
    report.anchors.push_back(std::move(a));
  }
  {
    AnchorResult a;
    a.name = "Ze(2,2) = 10 by oracle and formula";
    const BigCount by_oracle = count_ze_oracle(2, 2, oracle_opts).value;
    const BigCount by_formula = ze_formula(2, 2);
    a.passed = by_oracle == 10 && by_formula == 10;
    a.detail = "oracle=" + to_decimal(by_oracle) + " formula=" + to_decimal(by_formula);
    report.anchors.push_back(std::move(a));
  }
  {
    AnchorResult a;
    a.name = "Zt(2,2) = 8 by both oracle variants (identity included) and closed form";
    const BigCount perm_variant =
        count_zt_oracle(2, 2, Statistic::zt_perm, oracle_opts).value;
    const BigCount fixed_variant =
        count_zt_oracle(2, 2, Statistic::zt_fixed, oracle_opts).value;
    const BigCount closed = zt_closed(2, 2);
    a.passed = perm_variant == 8 && fixed_variant == 8 && closed == 8;
    a.detail = "zt-perm=" + to_decimal(perm_variant) +
               " zt-fixed=" + to_decimal(fixed_variant) + " closed=" + to_decimal(closed);
    report.anchors.push_back(std::move(a));
  }
  {
    AnchorResult a;
    a.name = "row and column index sums equal 10 for every partial transpose at n=4";
    const BlockShape shape(2, 2);
    bool ok = true;
    LexPermutationStream stream(4);
    Permutation pi = Permutation::identity(4);
    while (stream.next(pi)) {
      const BinaryMatrix image =
          inner_partial_transpose(BinaryMatrix::from_permutation(pi), shape);
      ok = ok && profile_sum(image) == 10 && row_index_sum(image) == 10;
    }
    a.passed = ok;
    a.detail = ok ? "all 24 permutations" : "an index sum differed from 10";
    report.anchors.push_back(std::move(a));
  }
  {
    AnchorResult a;
    a.name = "profile table at n=4, p=2 matches ground truth (24 rows)";
    const auto rows = profile_table(4, 2);
    bool ok = rows.size() == kReferenceTable.size();
    std::string mismatch;
    for (std::size_t k = 0; ok && k < rows.size(); ++k) {
      if (rows[k].permutation != kReferenceTable[k][0] ||
          rows[k].profile != kReferenceTable[k][1]) {
        ok = false;
        mismatch = rows[k].permutation + " -> " + rows[k].profile + " (expected " +
                   kReferenceTable[k][0] + " -> " + kReferenceTable[k][1] + ")";
      }
    }
    a.passed = ok;
    a.detail = ok ? "all rows match; corrected cells annotated" : mismatch;
    report.anchors.push_back(std::move(a));
  }
}

void grid_for_shape(DiscrepancyReport& report, int p, int q,
                    const VerifyOptions& opts) {
  const int n = p * q;
  const bool scannable = n <= opts.naive_guard && n <= kEnumerationGuard;
  OracleOptions oracle_opts;
  oracle_opts.jobs = opts.jobs;
  oracle_opts.naive_guard = opts.naive_guard;

  // z: evaluator vs scan, backtrack vs scan
  const bool evaluable = p <= 5;  // the composition machinery's ceiling
  if (evaluable) {
    const BigCount by_formula = z_formula(p, q);
    if (scannable) {
      report.records.push_back(make_record(
          "z", p, q, "formula", by_formula, "oracle", count_z_oracle(p, q, oracle_opts).value));
    } else {
      report.records.push_back(skipped_record(
          "z", p, q, "formula", by_formula, "oracle",
          "n exceeds the naive scan guard of " + std::to_string(opts.naive_guard)));
    }
    if (p <= opts.backtrack_guard) {
      report.records.push_back(make_record("z", p, q, "backtrack",
                                           count_z_backtrack(p, q, opts.backtrack_guard).value,
                                           "formula", by_formula));
    }
    if (p < q && q <= 5) {
      report.records.push_back(make_record(
          "z-swap", p, q, "formula(p,q)", by_formula, "formula(q,p)", z_formula(q, p),
          false, "counts are invariant under exchanging p and q"));
    }
  } else if (scannable) {
    report.records.push_back(skipped_record(
        "z", p, q, "oracle", count_z_oracle(p, q, oracle_opts).value, "formula",
        "p exceeds the composition ceiling of 5"));
  }

  // ze: evaluator vs scan; the swapped shape is expected to differ
  if (evaluable) {
    const BigCount by_formula = ze_formula(p, q);
    if (scannable) {
      report.records.push_back(make_record(
          "ze", p, q, "formula", by_formula, "oracle", count_ze_oracle(p, q, oracle_opts).value));
    } else {
      report.records.push_back(skipped_record(
          "ze", p, q, "formula", by_formula, "oracle",
          "n exceeds the naive scan guard of " + std::to_string(opts.naive_guard)));
    }
    if (p < q && q <= 5) {
      report.records.push_back(make_record(
          "ze-swap", p, q, "formula(p,q)", by_formula, "formula(q,p)", ze_formula(q, p),
          true, "no p/q symmetry is claimed for this statistic; disagreement is expected"));
    }
  } else if (scannable) {
    report.records.push_back(skipped_record(
        "ze", p, q, "oracle", count_ze_oracle(p, q, oracle_opts).value, "formula",
        "p exceeds the composition ceiling of 5"));
  }

  // zt: both oracle variants against each other and against the closed form
  if (scannable) {
    const BigCount perm_variant = count_zt_oracle(p, q, Statistic::zt_perm, oracle_opts).value;
    const BigCount fixed_variant = count_zt_oracle(p, q, Statistic::zt_fixed, oracle_opts).value;
    const BigCount closed = zt_closed(p, q);
    std::string gap_note = "the two involution statistics coincide at this shape";
    if (perm_variant != fixed_variant) {
      gap_note = "the claimed equivalence fails at this shape";
      if (const auto witness = first_variant_gap(p, q)) {
        const BlockShape shape(p, q);
        const auto image = to_permutation(
            inner_partial_transpose(BinaryMatrix::from_permutation(*witness), shape));
        gap_note += "; witness " + witness->to_string() + ": its partial transpose is the permutation " +
                    (image ? image->to_string() : "?") + ", not the matrix itself";
      }
    }
    report.records.push_back(make_record("zt-variants", p, q, "zt-perm-oracle", perm_variant,
                                         "zt-fixed-oracle", fixed_variant, true, gap_note));
    report.records.push_back(make_record(
        "zt-perm", p, q, "oracle", perm_variant, "closed-form", closed, true,
        "the closed form is only anchored at (2,2); disagreements are reported, not failed"));
    report.records.push_back(make_record(
        "zt-fixed", p, q, "oracle", fixed_variant, "closed-form", closed, true,
        "the closed form is only anchored at (2,2); disagreements are reported, not failed"));
  }
}

}  // namespace

bool DiscrepancyReport::anchors_ok() const {
  for (const AnchorResult& anchor : anchors)
    if (!anchor.passed) return false;
  return true;
}

DiscrepancyReport run_verify(int max_n, const VerifyOptions& opts) {
  DiscrepancyReport report;
  report.max_n = max_n;
  run_anchors(report, opts);

  for (int n = 1; n <= max_n; ++n)
    for (int p = 1; p <= n; ++p)
      if (n % p == 0) grid_for_shape(report, p, n / p, opts);

  // The p = 2 closed forms, including the printed/corrected contradiction.
  for (int q = 1; 2 * q <= max_n; ++q) {
    report.records.push_back(make_record("z2", 2, q, "closed", z2_closed(q), "formula",
                                         z_formula(2, q)));
    report.records.push_back(make_record(
        "ze2", 2, q, "printed", ze2_closed(q, Ze2Variant::printed), "corrected",
        ze2_closed(q, Ze2Variant::corrected), true,
        "the printed closed form carries a squared binomial; ground truth sides with "
        "the corrected single-binomial form"));
  }

  // Known misprints in the reference profile table at n = 4.
  if (max_n >= 4) {
    ComparisonRecord rec;
    rec.statistic = "profile-table";
    rec.p = 2;
    rec.q = 2;
    rec.method_a = "computed(1342)";
    rec.value_a = "1423";
    rec.method_b = "reference-print";
    rec.value_b = "1432";
    rec.status = "disagree";
    rec.informational = true;
    rec.note = "misprinted cell in the reference table";
    report.records.push_back(rec);
    rec.method_a = "computed(3124)";
    rec.value_a = "2314";
    rec.method_b = "reference-print";
    rec.value_b = "3142,2314";
    rec.note = "the reference table duplicates 3142 where 3124 belongs";
    report.records.push_back(rec);
  }
  return report;
}

std::string render_report(const DiscrepancyReport& report) {
  std::ostringstream out;
  out << "partial-transpose counting: verification report (max n = " << report.max_n
      << ")\n\n";
  out << "required anchors:\n";
  for (const AnchorResult& anchor : report.anchors)
    out << "  [" << (anchor.passed ? "ANCHOR-PASS" : "ANCHOR-FAIL") << "] " << anchor.name
        << "  --  " << anchor.detail << '\n';
  out << "\ncomparisons:\n";
  int agree = 0, disagree = 0, informational = 0, skipped = 0;
  for (const ComparisonRecord& rec : report.records) {
    std::string tag;
    if (rec.status == "agree") {
      tag = "AGREE";
      ++agree;
    } else if (rec.status == "skipped") {
      tag = "SKIP";
      ++skipped;
    } else if (rec.informational) {
      tag = "INFO-DISAGREE";
      ++informational;
    } else {
      tag = "DISAGREE";
      ++disagree;
    }
    out << "  [" << tag << "] " << rec.statistic << " p=" << rec.p << " q=" << rec.q
        << "  " << rec.method_a << '=' << rec.value_a << "  " << rec.method_b << '='
        << rec.value_b;
    if (!rec.note.empty()) out << "  (" << rec.note << ")";
    out << '\n';
  }
  out << "\nsummary: " << report.anchors.size() << " anchors, "
      << (report.anchors_ok() ? "all passed" : "FAILURES PRESENT") << "; " << agree
      << " agree, " << disagree << " disagree, " << informational
      << " informational disagreements, " << skipped << " skipped\n";
  return out.str();
}

}  // namespace ptcount::cli
