#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptcount/big_count.hpp"
#include "ptcount/block_shape.hpp"
#include "ptcount/permutation.hpp"

namespace ptcount {

/// The counted statistics. zt_perm and zt_fixed are deliberately distinct:
/// over symmetric matrices, "partial transpose is a permutation" and "partial
/// transpose equals the matrix" are NOT equivalent (first counterexamples at
/// n = 6), so both are first-class and every disagreement is reported.
enum class Statistic { z, ze, zt_perm, zt_fixed };

std::string to_string(Statistic stat);
std::optional<Statistic> parse_statistic(std::string_view name);

struct OracleOptions {
  /// Worker threads for the S_n scan. The scan is partitioned by the first
  /// word position and partial counts are added in partition order, so the
  /// result never depends on this value.
  int jobs = 1;
  /// Largest n for which a full S_n scan is attempted.
  int naive_guard = 10;
  /// zt statistics only: whether the identity counts as an involution.
  bool include_identity = true;
  /// When positive, attach the lexicographically first k witnesses.
  int witness_limit = 0;
};

struct CountReport {
  std::string statistic;
  int p = 0;
  int q = 0;
  std::string method;
  BigCount value;
  double elapsed_seconds = 0.0;
  std::vector<Permutation> witness_sample;
};

/// Ground truth by exhaustive scan of S_pq: permutations whose partial
/// transpose is a permutation matrix.
CountReport count_z_oracle(int p, int q, const OracleOptions& opts = {});

/// Ground truth: permutations equal to their partial transpose.
CountReport count_ze_oracle(int p, int q, const OracleOptions& opts = {});

/// Ground truth over involutions; `variant` picks zt_perm or zt_fixed.
CountReport count_zt_oracle(int p, int q, Statistic variant,
                            const OracleOptions& opts = {});

/// Same value as count_z_oracle, computed without scanning S_n: enumerates
/// composition-vector pairs with matching marginal tables by backtracking and
/// multiplies the placement factors. Throws when p > p_guard (or p > 5, the
/// hard ceiling of the composition machinery).
CountReport count_z_backtrack(int p, int q, int p_guard = 5);

/// Lexicographically first `limit` permutations satisfying the statistic's
/// predicate.
std::vector<Permutation> witnesses(Statistic stat, int p, int q, int limit,
                                   const OracleOptions& opts = {});

/// All symmetric P whose partial transpose is a permutation matrix other than
/// the identity and P itself. An empty result confirms, for this shape, the
/// claim that no third possibility exists.
std::vector<Permutation> check_symmetric_claim(int p, int q,
                                               const OracleOptions& opts = {});

/// Predicate behind the z statistics.
bool gamma_image_is_permutation(const Permutation& pi, const BlockShape& shape);

/// Predicate behind the ze statistics.
bool gamma_fixes_matrix(const Permutation& pi, const BlockShape& shape);

}  // namespace ptcount
