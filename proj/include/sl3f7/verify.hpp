#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sl3f7/matrix3.hpp"
#include "sl3f7/scan.hpp"
#include "sl3f7/simconj.hpp"

namespace sl3f7 {

enum class Suite { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Deterministic summary; no timings, so reports compare byte for byte.
  std::string detail;
  double elapsed_seconds = 0.0;
};

/// Runs the acceptance criteria in order. Quick leaves out the orbit oracle
/// for the other 16 labels, the {X, Y, Z} closure and the maximality witness.
std::vector<CriterionResult> run_acceptance(Suite suite, const ScanOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  label catalog: ..." style line.
std::string format_result(const CriterionResult& r);

/// Uniform over SL₃(F₇) by rejection on random codes.
Mat3 random_sl3(std::mt19937_64& rng);
/// Uniform over the eigenvector-free elements of SL₃(F₇).
Mat3 random_eigenfree(std::mt19937_64& rng);

/// Brute-force simultaneous conjugacy: every g with g·A₁·g⁻¹ = B₁ is
/// g₀·c for one conjugator g₀ and c in the scanned centralizer of A₁; test
/// each against the remaining coordinates. A₁ is the first non-scalar member.
bool brute_force_simconj(const std::vector<Mat3>& a, const std::vector<Mat3>& b, const ScanOptions& options = {});

/// Randomized tuple pairs for the simultaneous-conjugacy check: roughly half
/// conjugate by construction, the rest with one exponent perturbed.
struct TuplePair {
  std::vector<Mat3> first;
  std::vector<Mat3> second;
  bool conjugate_by_construction = false;
};
std::vector<TuplePair> random_tuple_pairs(std::size_t count, std::mt19937_64& rng);

}  // namespace sl3f7
