#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl3f7/matrix3.hpp"

namespace sl3f7 {

struct GeneratorSet {
  std::vector<Mat3> gens;
};

/// X = [[1,0,1],[0,6,6],[0,1,0]], Y = [[0,1,0],[0,0,1],[1,0,0]],
/// Z = [[0,1,0],[1,0,0],[6,6,6]]; together they generate SL₃(F₇).
Mat3 generator_x();
Mat3 generator_y();
Mat3 generator_z();
GeneratorSet default_generators();

/// Transvections and one diagonal element generating the parabolic subgroup.
GeneratorSet parabolic_generators();

/// det = 1 and the (2,1), (3,1) entries vanish.
bool in_parabolic(const Mat3& m);

/// Direct count over the 7⁷ free entry tuples.
std::uint64_t parabolic_size();

/// Order of ⟨gens⟩ by breadth-first closure over matrix codes, using each
/// generator and its inverse. Throws Error(InvalidArgument) for an empty or
/// non-det-1 generator set.
std::uint64_t generator_closure(const GeneratorSet& gens);

enum class Side { Left, Right };
enum class ReductionTarget { Y, Z };

struct ReductionStep {
  Side side;
  Mat3 factor;
};

/// Left/right multiplications by parabolic elements carrying `start` to `target`.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Mat3 start;
  Mat3 target;

  /// Applies the steps in order to `start`.
  Mat3 recompose() const;
  /// recompose() == target and every factor lies in the parabolic subgroup.
  bool verify() const;
};

/// Row/column elimination by parabolic factors. Free step parameters take
/// the least value in 0..6 that works, so traces are deterministic.
/// Throws Error(InParabolic) when A is in the parabolic subgroup and
/// Error(NotInSL3) when det(A) ≠ 1.
ReductionTrace reduce_to_generator(const Mat3& a, ReductionTarget target);

std::string to_string(ReductionTarget t);

}  // namespace sl3f7
