#include "ptcount/oracle.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "ptcount/binary_matrix.hpp"
#include "ptcount/combinatorics.hpp"
#include "ptcount/compositions.hpp"
#include "ptcount/enumeration.hpp"
#include "ptcount/partial_transpose.hpp"

namespace ptcount {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_scan_guard(int n, int guard) {
  if (n > guard)
    throw std::invalid_argument(
        "n = " + std::to_string(n) + " exceeds the naive oracle guard of " +
        std::to_string(guard) +
        " (use the backtrack counter for z, or raise the guard)");
}

void check_shape_args(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be >= 1");
}

/// Counts words of S_n satisfying `pred`, partitioned by the first word
/// position. Partial counts are summed in partition order, so the result is
/// independent of the number of workers.
template <typename Pred>
BigCount scan_count(int n, int jobs, Pred pred) {
  std::vector<unsigned long long> partials(static_cast<std::size_t>(n), 0);
  auto scan_partition = [&](int first) {
    unsigned long long local = 0;
    LexPermutationStream stream(n, first);
    Permutation pi = Permutation::identity(n);
    while (stream.next(pi))
      if (pred(pi)) ++local;
    partials[static_cast<std::size_t>(first) - 1] = local;
  };
  if (jobs <= 1) {
    for (int first = 1; first <= n; ++first) scan_partition(first);
  } else {
    std::atomic<int> next_first{1};
    auto worker = [&] {
      for (int first = next_first.fetch_add(1); first <= n;
           first = next_first.fetch_add(1))
        scan_partition(first);
    };
    std::vector<std::thread> pool;
    const int width = std::min(jobs, n);
    pool.reserve(static_cast<std::size_t>(width));
    for (int t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  BigCount total = 0;
  for (auto part : partials) total += part;
  return total;
}

bool is_zt(Statistic stat) {
  return stat == Statistic::zt_perm || stat == Statistic::zt_fixed;
}

bool statistic_holds(Statistic stat, const Permutation& pi, const BlockShape& shape) {
  switch (stat) {
    case Statistic::z:
      return gamma_image_is_permutation(pi, shape);
    case Statistic::ze:
      return gamma_fixes_matrix(pi, shape);
    case Statistic::zt_perm:
      return pi.is_involution() && gamma_image_is_permutation(pi, shape);
    case Statistic::zt_fixed:
      return pi.is_involution() && gamma_fixes_matrix(pi, shape);
  }
  return false;
}

std::vector<Permutation> collect_witnesses(Statistic stat, int p, int q, int limit,
                                           const OracleOptions& opts) {
  const BlockShape shape(p, q);
  std::vector<Permutation> out;
  if (limit <= 0) return out;
  check_scan_guard(shape.n(), opts.naive_guard);
  if (is_zt(stat)) {
    for (const Permutation& pi : involutions(shape.n())) {
      if (!opts.include_identity && pi == Permutation::identity(shape.n())) continue;
      if (statistic_holds(stat, pi, shape)) {
        out.push_back(pi);
        if (static_cast<int>(out.size()) == limit) break;
      }
    }
    return out;
  }
  LexPermutationStream stream(shape.n());
  Permutation pi = Permutation::identity(shape.n());
  while (stream.next(pi)) {
    if (statistic_holds(stat, pi, shape)) {
      out.push_back(pi);
      if (static_cast<int>(out.size()) == limit) break;
    }
  }
  return out;
}

CountReport scan_report(Statistic stat, int p, int q, const OracleOptions& opts) {
  check_shape_args(p, q);
  const BlockShape shape(p, q);
  check_scan_guard(shape.n(), opts.naive_guard);
  const auto start = Clock::now();
  CountReport report;
  report.statistic = to_string(stat);
  report.p = p;
  report.q = q;
  report.method = "oracle";
  if (is_zt(stat)) {
    const Permutation id = Permutation::identity(shape.n());
    unsigned long long count = 0;
    for (const Permutation& pi : involutions(shape.n())) {
      if (!opts.include_identity && pi == id) continue;
      if (statistic_holds(stat, pi, shape)) ++count;
    }
    report.value = count;
  } else {
    report.value = scan_count(shape.n(), opts.jobs,
                              [&](const Permutation& pi) {
                                return statistic_holds(stat, pi, shape);
                              });
  }
  report.elapsed_seconds = seconds_since(start);
  if (opts.witness_limit > 0)
    report.witness_sample = collect_witnesses(stat, p, q, opts.witness_limit, opts);
  return report;
}

}  // namespace

std::string to_string(Statistic stat) {
  switch (stat) {
    case Statistic::z: return "z";
    case Statistic::ze: return "ze";
    case Statistic::zt_perm: return "zt-perm";
    case Statistic::zt_fixed: return "zt-fixed";
  }
  return "?";
}

std::optional<Statistic> parse_statistic(std::string_view name) {
  if (name == "z") return Statistic::z;
  if (name == "ze") return Statistic::ze;
  if (name == "zt-perm") return Statistic::zt_perm;
  if (name == "zt-fixed") return Statistic::zt_fixed;
  return std::nullopt;
}

bool gamma_image_is_permutation(const Permutation& pi, const BlockShape& shape) {
  const BinaryMatrix m = BinaryMatrix::from_permutation(pi);
  return is_permutation_matrix(inner_partial_transpose(m, shape));
}

bool gamma_fixes_matrix(const Permutation& pi, const BlockShape& shape) {
  const BinaryMatrix m = BinaryMatrix::from_permutation(pi);
  return inner_partial_transpose(m, shape) == m;
}

CountReport count_z_oracle(int p, int q, const OracleOptions& opts) {
  return scan_report(Statistic::z, p, q, opts);
}

CountReport count_ze_oracle(int p, int q, const OracleOptions& opts) {
  return scan_report(Statistic::ze, p, q, opts);
}

CountReport count_zt_oracle(int p, int q, Statistic variant, const OracleOptions& opts) {
  if (!is_zt(variant))
    throw std::invalid_argument("count_zt_oracle expects zt-perm or zt-fixed");
  return scan_report(variant, p, q, opts);
}

CountReport count_z_backtrack(int p, int q, int p_guard) {
  check_shape_args(p, q);
  const int effective_guard = std::min(p_guard, 5);
  if (p > effective_guard)
    throw std::invalid_argument("p = " + std::to_string(p) +
                                " exceeds the backtrack guard of " +
                                std::to_string(effective_guard));
  const auto start = Clock::now();
  const auto& group = small_symmetric_group(p);
  const int m = static_cast<int>(group.size());

  CountReport report;
  report.statistic = to_string(Statistic::z);
  report.p = p;
  report.q = q;
  report.method = "backtrack";
  report.value = 0;

  CompositionStream stream(p, q);
  CompositionVector a;
  std::vector<int> partial(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
  std::vector<int> b(static_cast<std::size_t>(m));
  while (stream.next(a)) {
    const MarginalTable target = marginal_table(a);
    const BigCount weight_a = multinomial(q, a.parts);
    BigCount placements = 1;
    for (int cell : target.cells) placements *= factorial(cell);

    // Enumerate the b vectors whose marginal table equals `target`, pruning a
    // branch as soon as any cell of the running table would overflow it. With
    // equal row sums, cellwise <= at a full assignment forces equality, so
    // leaves need no final check.
    std::fill(partial.begin(), partial.end(), 0);
    BigCount b_weight_sum = 0;
    auto apply = [&](int k, int v, int sign) {
      for (int i = 1; i <= p; ++i) {
        const int j = group[static_cast<std::size_t>(k)][static_cast<std::size_t>(i) - 1];
        partial[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(p) +
                static_cast<std::size_t>(j - 1)] += sign * v;
      }
    };
    auto rec = [&](auto&& self, int k, int remaining) -> void {
      if (k == m) {
        b_weight_sum += multinomial(q, b);
        return;
      }
      int cap = remaining;
      for (int i = 1; i <= p; ++i) {
        const int j = group[static_cast<std::size_t>(k)][static_cast<std::size_t>(i) - 1];
        const std::size_t cell = static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(p) +
                                 static_cast<std::size_t>(j - 1);
        cap = std::min(cap, target.cells[cell] - partial[cell]);
      }
      // The last part is forced to absorb whatever remains.
      const int lowest = (k == m - 1) ? remaining : 0;
      for (int v = lowest; v <= cap; ++v) {
        b[static_cast<std::size_t>(k)] = v;
        apply(k, v, +1);
        self(self, k + 1, remaining - v);
        apply(k, v, -1);
      }
    };
    rec(rec, 0, q);
    report.value += weight_a * b_weight_sum * placements;
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

std::vector<Permutation> witnesses(Statistic stat, int p, int q, int limit,
                                   const OracleOptions& opts) {
  check_shape_args(p, q);
  return collect_witnesses(stat, p, q, limit, opts);
}

std::vector<Permutation> check_symmetric_claim(int p, int q, const OracleOptions& opts) {
  check_shape_args(p, q);
  const BlockShape shape(p, q);
  check_scan_guard(shape.n(), opts.naive_guard);
  const BinaryMatrix id = BinaryMatrix::identity(shape.n());
  std::vector<Permutation> counterexamples;
  for (const Permutation& pi : involutions(shape.n())) {
    const BinaryMatrix m = BinaryMatrix::from_permutation(pi);
    const BinaryMatrix image = inner_partial_transpose(m, shape);
    if (is_permutation_matrix(image) && image != m && image != id)
      counterexamples.push_back(pi);
  }
  return counterexamples;
}

}  // namespace ptcount
