#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "sl3f7/classify.hpp"
#include "sl3f7/matrix3.hpp"

namespace sl3f7 {

/// Half-open interval of matrix codes.
struct CodeRange {
  std::uint32_t begin = 0;
  std::uint32_t end = MatCode::kCount;

  std::uint32_t size() const { return end > begin ? end - begin : 0; }
  friend constexpr bool operator==(const CodeRange&, const CodeRange&) = default;
};

inline constexpr CodeRange kFullRange{};

struct ScanOptions {
  unsigned threads = 1;
  /// Called as (finished partitions, total partitions) from worker threads.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Splits r into `parts` contiguous, disjoint, covering sub-ranges.
std::vector<CodeRange> split_range(CodeRange r, std::size_t parts);

namespace detail {

inline constexpr std::uint32_t kLowCount = 117649;  // 7⁶: first two rows
inline constexpr std::uint32_t kHighCount = 343;    // 7³: third row

/// Per first-two-rows data: the entries and the cofactors of the third row.
struct LowEntry {
  std::array<std::uint8_t, 6> e;
  std::array<std::uint8_t, 3> cof;
};

const std::vector<LowEntry>& low_table();

}  // namespace detail

/// Calls visit(const Mat3&, MatCode) for every det-1 matrix in r, ascending.
/// Returning false from visit stops the walk; a void visitor always continues.
template <class Visitor>
void for_each_sl3(CodeRange r, Visitor&& visit) {
  using detail::kLowCount;
  const auto& lows = detail::low_table();
  std::uint32_t code = r.begin;
  while (code < r.end) {
    const std::uint32_t high = code / kLowCount;
    const std::uint32_t stop = std::min<std::uint32_t>(r.end, (high + 1) * kLowCount);
    const int g = static_cast<int>(high % 7), h = static_cast<int>((high / 7) % 7), i = static_cast<int>(high / 49);
    for (std::uint32_t low = code - high * kLowCount, c = code; c < stop; ++low, ++c) {
      const auto& le = lows[low];
      if ((g * le.cof[0] + h * le.cof[1] + i * le.cof[2]) % 7 != 1) continue;
      const Mat3 m(std::array<Fp, 9>{Fp(le.e[0]), Fp(le.e[1]), Fp(le.e[2]), Fp(le.e[3]), Fp(le.e[4]),
                                     Fp(le.e[5]), Fp(g), Fp(h), Fp(i)});
      if constexpr (std::is_same_v<decltype(visit(m, MatCode{c})), bool>) {
        if (!visit(m, MatCode{c})) return;
      } else {
        visit(m, MatCode{c});
      }
    }
    code = stop;
  }
}

/// Runs per_range over a fixed partition of r on up to options.threads
/// workers and folds the partial results in partition order, so the result
/// never depends on the thread count or on scheduling.
template <class T, class PerRange, class Merge>
T parallel_reduce(const ScanOptions& options, CodeRange r, T init, PerRange per_range, Merge merge) {
  using Partial = std::invoke_result_t<PerRange&, CodeRange>;
  constexpr std::size_t kPartitions = 49;
  const auto parts = split_range(r, kPartitions);
  std::vector<std::optional<Partial>> partial(parts.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < parts.size(); k = next++) {
      partial[k].emplace(per_range(parts[k]));
      const std::size_t finished = ++done;
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(finished, parts.size());
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(parts.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& p : partial) merge(init, std::move(*p));
  return init;
}

/// Number of det-1 matrices in r.
std::uint64_t count_sl3(CodeRange r, const ScanOptions& options = {});
/// Number of invertible matrices in r.
std::uint64_t count_invertible(CodeRange r, const ScanOptions& options = {});

struct ScanSummary {
  std::uint64_t group_order = 0;
  std::uint64_t eigenfree_total = 0;
  /// All det-1 matrices per trace.
  std::array<std::uint64_t, 7> all_by_trace{};
  /// Eigenvector-free det-1 matrices per trace.
  std::array<std::uint64_t, 7> by_trace{};
  std::map<ClassLabel, std::uint64_t> by_label;

  ScanSummary& operator+=(const ScanSummary& o);
  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

ScanSummary census(const ScanOptions& options = {});
ScanSummary census_range(CodeRange r);

struct CentralizerReport {
  static constexpr std::uint64_t kListLimit = 1024;

  Mat3 subject;
  std::uint64_t size = 0;
  bool is_cyclic = false;
  std::optional<Mat3> generator;
  /// Ascending; filled only when size ≤ kListLimit.
  std::vector<MatCode> elements;
};

CentralizerReport centralizer(const Mat3& m, const ScanOptions& options = {});
std::uint64_t class_size(const Mat3& m, const ScanOptions& options = {});

/// {g·M·g⁻¹ : g ∈ SL₃(F₇)} by brute force, ascending.
/// Throws Error(OrbitTooLarge) past `cap` distinct elements.
std::vector<MatCode> orbit_oracle(const Mat3& m, const ScanOptions& options = {}, std::uint64_t cap = 1u << 20);

/// Every det-1 matrix carrying the given eigenfree label, ascending.
std::vector<MatCode> codes_with_label(const ClassLabel& l, const ScanOptions& options = {});

/// Elements g ≠ I with g¹⁹ = I.
std::uint64_t order19_element_count(const ScanOptions& options = {});
/// Number of Sylow 19-subgroups; validated against the Sylow constraints.
std::uint64_t sylow19_count(const ScanOptions& options = {});

/// |{g : g⟨P⟩g⁻¹ = ⟨P⟩}| for P of order 19; throws Error(WrongOrder).
std::uint64_t normalizer_of_cyclic(const Mat3& p, const ScanOptions& options = {});

/// True iff no element has order exactly n, for n ∈ {3, 9, 27}
/// (gⁿ = I and g^(n/3) ≠ I). Throws Error(UnsupportedOrder) otherwise.
bool order_absence_check(int n, const ScanOptions& options = {});

struct PowerTableRow {
  int k = 0;
  Mat3 power;
  Fp trace;
  std::optional<ClassLabel> label;
  /// "identity", "scalar 2I", "scalar 4I" or "eigenvector" when unlabelled.
  std::string note;
};

std::vector<PowerTableRow> power_table(const Mat3& m, int limit);

/// Commutant of the [0,4] matrix [[0,1,3],[0,0,1],[1,0,0]]: the matrices
/// [[a,b,3b+d],[d,a−3d,b],[b,d,a]].
Mat3 trace_zero_commutant(Fp a, Fp b, Fp d);

/// det of trace_zero_commutant(a,b,d), written as the cubic
/// a³ − 3d·a² − (3b² + 3bd)·a + (b³ + d³ + 2db² − d²b).
Fp commutant_det_polynomial(Fp a, Fp b, Fp d);

/// One row of the (b, d) table: the cubic in a whose roots give det = 1.
struct CommutantSolutionRow {
  Fp b;
  Fp d;
  /// a³ + c2·a² + c1·a + c0, coefficients in F₇.
  std::array<Fp, 3> coeffs;  // {c0, c1, c2}
  std::vector<Fp> solutions;
};

std::vector<CommutantSolutionRow> commutant_solution_table();

}  // namespace sl3f7
