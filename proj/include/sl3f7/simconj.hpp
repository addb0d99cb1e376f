#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sl3f7/classify.hpp"
#include "sl3f7/matrix3.hpp"
#include "sl3f7/scan.hpp"

namespace sl3f7 {

/// Where a stripped scalar (I, 2I or 4I) sat in the original tuple.
struct ScalarSlot {
  std::size_t index;
  Fp value;

  friend constexpr bool operator==(const ScalarSlot&, const ScalarSlot&) = default;
};

/// A commuting tuple whose non-scalar members are all eigenvector-free and
/// all powers of one order-57 base.
struct CommutingTuple {
  /// Non-scalar members in original order.
  std::vector<Mat3> members;
  /// Original position of each member.
  std::vector<std::size_t> positions;
  Mat3 base;
  /// members[k] = base^exponents[k], exponents in [0, 56].
  std::vector<int> exponents;
  std::vector<ScalarSlot> scalars;
  std::size_t length = 0;
};

/// Every non-scalar member has an eigenvector.
struct AllEigen {
  std::vector<ScalarSlot> scalars;
  std::size_t length = 0;
};

/// Eigenvector-free and eigenvector-carrying members together; cannot
/// happen for a commuting tuple and signals a bug or bad input.
struct Rejected {
  std::string diagnostics;
};

using TupleAnalysis = std::variant<CommutingTuple, AllEigen, Rejected>;

/// Throws Error(NotInSL3), Error(NotCommuting) or Error(EmptyAfterScalarStrip).
TupleAnalysis analyze_tuple(const std::vector<Mat3>& ms);

/// Centralizer of an eigenvector-free M in SL₃(F₇), computed inside the
/// algebra F₇[M] = {aI + bM + cM²}; ascending by code.
std::vector<Mat3> eigenfree_centralizer(const Mat3& m);

struct SimConjVerdict {
  bool equivalent = false;
  std::optional<Mat3> witness;
  std::optional<std::string> certificate;
};

/// Throws Error(LengthMismatch).
SimConjVerdict decide_simconj(const CommutingTuple& t1, const CommutingTuple& t2,
                              const ScanOptions& options = {});

/// MatCode-least g with g·A·g⁻¹ = B, by full scan.
std::optional<Mat3> find_conjugator(const Mat3& a, const Mat3& b, const ScanOptions& options = {});

/// One power of the [0,4] base matrix per eigenfree label, least exponent.
struct CommutingReps {
  std::map<ClassLabel, Mat3> reps;
  std::map<ClassLabel, int> exponent;
  /// Exponents k in [1, 56], k ∉ {19, 38}, grouped by the label of M₀ᵏ.
  std::map<ClassLabel, std::vector<int>> powers_by_label;
};

/// Throws Error(IncompleteCover) if some label is missed.
CommutingReps eighteen_commuting_reps();

}  // namespace sl3f7
