// Acceptance suite: one line per criterion, [PASS]/[FAIL], nonzero exit when
// anything fails. Expected values are frozen from independent enumeration;
// time limits are generous but enforced.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ptcount/combinatorics.hpp"
#include "ptcount/enumeration.hpp"
#include "ptcount/formulas.hpp"
#include "ptcount/oracle.hpp"
#include "ptcount/partial_transpose.hpp"
#include "support/subprocess.hpp"

using namespace ptcount;
using testsupport::contains;
using testsupport::run_command;

namespace {

int failures = 0;
std::string cli;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(int criterion, bool ok, const std::string& what) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what
            << '\n';
  if (!ok) ++failures;
}

// Ground-truth profile table for n=4, p=2 (frozen from independent
// enumeration; two cells of the widely reproduced table are misprints and
// appear here corrected).
constexpr std::array<std::array<const char*, 2>, 24> kTruthTable{{
    {"1234", "1234"}, {"1243", "1243"}, {"1324", "1414"}, {"1342", "1423"},
    {"1423", "1441"}, {"1432", "1432"}, {"2134", "2134"}, {"2143", "2143"},
    {"2314", "4114"}, {"2341", "4123"}, {"2413", "1414"}, {"2431", "1423"},
    {"3124", "2314"}, {"3142", "2323"}, {"3214", "3214"}, {"3241", "3223"},
    {"3412", "3412"}, {"3421", "3421"}, {"4123", "2341"}, {"4132", "2332"},
    {"4213", "2314"}, {"4231", "2323"}, {"4312", "4312"}, {"4321", "4321"},
}};

void criterion_1() {
  Stopwatch watch;
  const bool values = count_z_oracle(2, 2).value == 12 &&
                      count_z_backtrack(2, 2).value == 12 && z_formula(2, 2) == 12;
  const double t = watch.seconds();
  report(1, values && t < 1.0,
         "Z(2,2) = 12 by oracle, backtrack and formula (" + std::to_string(t) + " s)");
}

void criterion_2() {
  Stopwatch watch;
  const bool values = count_ze_oracle(2, 2).value == 10 && ze_formula(2, 2) == 10;
  const double t = watch.seconds();
  report(2, values && t < 1.0,
         "Ze(2,2) = 10 by oracle and formula (" + std::to_string(t) + " s)");
}

void criterion_3() {
  Stopwatch watch;
  const bool values = count_zt_oracle(2, 2, Statistic::zt_perm).value == 8 &&
                      count_zt_oracle(2, 2, Statistic::zt_fixed).value == 8 &&
                      zt_closed(2, 2) == 8;
  const double t = watch.seconds();
  report(3, values && t < 1.0,
         "Zt(2,2) = 8 by both oracle variants (identity included) and closed form (" +
             std::to_string(t) + " s)");
}

void criterion_4() {
  bool ok = true;
  for (int q = 1; q <= 6; ++q) ok = ok && z_formula(2, q) == factorial(q) * factorial(q + 1);

  Stopwatch scan_watch;
  for (int q = 1; q <= 4; ++q)
    ok = ok && count_z_oracle(2, q).value == factorial(q) * factorial(q + 1);
  const double scan_seconds = scan_watch.seconds();
  ok = ok && scan_seconds < 10.0;

  Stopwatch backtrack_watch;
  ok = ok && count_z_backtrack(2, 5).value == 86400;
  const double backtrack_seconds = backtrack_watch.seconds();
  ok = ok && backtrack_seconds < 1.0;

  report(4, ok,
         "Z(2,q) = q!(q+1)! for q <= 6; oracle matches through q = 4 (" +
             std::to_string(scan_seconds) + " s) and q = 5 by backtrack (" +
             std::to_string(backtrack_seconds) + " s)");
}

void criterion_5() {
  Stopwatch watch;
  const std::array<std::pair<int, int>, 10> grid{{{1, 2},
                                                  {2, 1},
                                                  {1, 4},
                                                  {4, 1},
                                                  {2, 2},
                                                  {2, 3},
                                                  {3, 2},
                                                  {2, 4},
                                                  {4, 2},
                                                  {3, 3}}};
  bool ok = true;
  for (const auto& [p, q] : grid) {
    ok = ok && count_z_oracle(p, q).value == z_formula(p, q);
    ok = ok && count_ze_oracle(p, q).value == ze_formula(p, q);
  }
  const double t = watch.seconds();
  report(5, ok && t < 60.0,
         "z and ze agree between oracle and evaluators on the 10-shape grid (" +
             std::to_string(t) + " s)");
}

void criterion_6(const std::string& verify_output, int verify_exit) {
  const bool printed_wrong = ze2_closed(2, Ze2Variant::printed) == 12;
  const bool corrected_right = ze2_closed(2, Ze2Variant::corrected) == 10 &&
                               count_ze_oracle(2, 2).value == 10;
  const bool flagged =
      verify_exit == 0 && contains(verify_output, "[INFO-DISAGREE] ze2") &&
      contains(verify_output, "printed=12") && contains(verify_output, "corrected=10");
  report(6, printed_wrong && corrected_right && flagged,
         "the printed p=2 fixed-point closed form gives 12, ground truth 10; verify "
         "flags it informational and exits 0");
}

void criterion_7(const std::string& verify_output, int verify_exit) {
  const BigCount perm_count = count_zt_oracle(2, 3, Statistic::zt_perm).value;
  const BigCount fixed_count = count_zt_oracle(2, 3, Statistic::zt_fixed).value;
  const Permutation witness = Permutation::parse("564312");
  const BlockShape shape(2, 3);
  const bool witness_works = witness.is_involution() &&
                             gamma_image_is_permutation(witness, shape) &&
                             !gamma_fixes_matrix(witness, shape);
  const bool flagged = verify_exit == 0 &&
                       contains(verify_output, "[INFO-DISAGREE] zt-variants p=2 q=3") &&
                       contains(verify_output, "564312");
  report(7, perm_count != fixed_count && perm_count == 40 && fixed_count == 38 &&
             witness_works && flagged,
         "at (2,3) the two involution statistics differ (40 vs 38), witnessed by "
         "564312; verify flags it informational");
}

void criterion_8() {
  Stopwatch watch;
  bool ok = true;
  {
    const BlockShape shape(2, 2);
    LexPermutationStream stream(4);
    Permutation pi = Permutation::identity(4);
    while (stream.next(pi)) {
      const auto image = inner_partial_transpose(BinaryMatrix::from_permutation(pi), shape);
      ok = ok && profile_sum(image) == 10 && row_index_sum(image) == 10;
    }
  }
  for (const auto [p, q] : {std::pair{2, 3}, {3, 2}}) {
    const BlockShape shape(p, q);
    LexPermutationStream stream(6);
    Permutation pi = Permutation::identity(6);
    while (stream.next(pi)) {
      const auto image = inner_partial_transpose(BinaryMatrix::from_permutation(pi), shape);
      ok = ok && profile_sum(image) == 21 && row_index_sum(image) == 21;
    }
  }
  const double t = watch.seconds();
  report(8, ok && t < 1.0,
         "row and column index sums equal n(n+1)/2 across S_4 at (2,2) and S_6 at "
         "(2,3),(3,2) (" +
             std::to_string(t) + " s)");
}

void criterion_9() {
  const auto run = run_command(cli + " table --n 4 --p 2");
  bool ok = run.exit_code == 0;
  std::istringstream lines(run.output);
  std::string line;
  std::size_t row = 0;
  bool corrected_cell_annotated = false;
  while (std::getline(lines, line) && row < kTruthTable.size()) {
    const std::string expected =
        std::string(kTruthTable[row][0]) + "," + kTruthTable[row][1];
    ok = ok && line.rfind(expected, 0) == 0;
    if (kTruthTable[row][0] == std::string("3124"))
      corrected_cell_annotated = line.find('#') != std::string::npos;
    ++row;
  }
  ok = ok && row == kTruthTable.size();
  // the four cells the source table prints correctly, verbatim
  ok = ok && contains(run.output, "1324,1414") && contains(run.output, "2314,4114") &&
       contains(run.output, "2341,4123") && contains(run.output, "3142,2323");
  report(9, ok && corrected_cell_annotated,
         "the table subcommand reproduces all 24 profile words with the corrected, "
         "annotated 3124 cell");
}

void criterion_10() {
  std::mt19937 rng(20260809);
  std::bernoulli_distribution bit(0.4);
  bool ok = true;
  for (const auto [p, q] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const BlockShape shape(p, q);
    for (int rep = 0; rep < 100; ++rep) {
      BinaryMatrix m(shape.n());
      for (int r = 1; r <= shape.n(); ++r)
        for (int c = 1; c <= shape.n(); ++c)
          if (bit(rng)) m.set(r, c, true);
      const BinaryMatrix t = m.transposed();
      ok = ok && outer_block_transpose(inner_partial_transpose(m, shape), shape) == t;
      ok = ok && inner_partial_transpose(outer_block_transpose(m, shape), shape) == t;
    }
  }
  report(10, ok,
         "inner and outer block transposes compose to the full transpose on 100 "
         "random matrices per shape");
}

void criterion_11() {
  Stopwatch watch;
  bool ok = true;
  for (int n : {4, 6}) {
    for (int p = 1; p <= n; ++p) {
      if (n % p != 0) continue;
      const BlockShape forward(p, n / p);
      const BlockShape backward(n / p, p);
      std::set<Permutation> images;
      std::size_t total = 0;
      LexPermutationStream stream(n);
      Permutation pi = Permutation::identity(n);
      while (stream.next(pi)) {
        ++total;
        const Permutation image = shuffle_conjugate(pi, forward);
        images.insert(image);
        ok = ok && shuffle_conjugate(image, backward) == pi;
        // the (p,q) shuffle exchanges the two block readings of the statistic
        ok = ok && gamma_image_is_permutation(pi, backward) ==
                       gamma_image_is_permutation(image, forward);
      }
      ok = ok && images.size() == total;  // bijection
    }
  }
  ok = ok && count_z_oracle(2, 3).value == 144 && count_z_oracle(3, 2).value == 144;
  const double t = watch.seconds();
  report(11, ok && t < 5.0,
         "shuffle conjugation is a self-inverting bijection transporting the "
         "statistic; Z(2,3) = Z(3,2) = 144 by oracle (" +
             std::to_string(t) + " s)");
}

void criterion_12() {
  bool ok = true;
  for (int q = 1; q <= 50; ++q) {
    const auto values = zt_corollaries(q);
    const BigCount bq(q);
    ok = ok && values.rectangle == bq * (bq + 1) * (2 * bq - 1);
    ok = ok && values.square == 2 * (bq * bq * bq - bq * bq);
    ok = ok && values.rectangle == zt_closed(q + 1, q);
    ok = ok && values.square == zt_closed(q, q);
  }
  const std::array<int, 5> halved{1, 9, 30, 70, 135};
  for (int q = 1; q <= 5; ++q)
    ok = ok && zt_corollaries(q).rectangle / 2 == halved[static_cast<std::size_t>(q - 1)];
  report(12, ok,
         "zt corollary identities hold for q <= 50 and the halved sequence starts "
         "1, 9, 30, 70, 135");
}

void criterion_13() {
  bool ok = true;
  for (int q = 0; q <= 30; ++q) ok = ok && telephone(q) == telephone_sum(q);
  for (int q = 1; q <= 8; ++q)
    ok = ok && telephone(q) == BigCount(involutions(q).size());
  report(13, ok,
         "telephone numbers match the explicit sum for q <= 30 and the involution "
         "enumeration for q <= 8");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_tests <path-to-cli>\n";
    return 2;
  }
  cli = argv[1];

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();

  // one shared verify run feeds criteria 6 and 7
  const std::string report_path = "acceptance_verify_report.txt";
  std::remove(report_path.c_str());
  const auto verify = run_command(cli + " verify --max-n 6 --report " + report_path);
  criterion_6(verify.output, verify.exit_code);
  criterion_7(verify.output, verify.exit_code);
  std::remove(report_path.c_str());

  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 13 acceptance criteria passed\n";
  return 0;
}
