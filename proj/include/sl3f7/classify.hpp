#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sl3f7/field.hpp"
#include "sl3f7/matrix3.hpp"

namespace sl3f7 {

/// [i, j] names the characteristic polynomial λ³ − iλ² + jλ − 1.
struct ClassLabel {
  Fp i;
  Fp j;

  CubicPoly cubic() const { return CubicPoly{i, j}; }
  bool is_eigenfree() const { return !cubic().has_fp_root(); }

  friend constexpr bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend constexpr auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

std::string to_string(const ClassLabel& label);

inline constexpr std::size_t kEigenfreeLabelCount = 18;

/// All (i, j) whose cubic has no root in F₇, lexicographic.
std::vector<ClassLabel> eigenfree_labels();

/// Throws Error(NotInSL3) or Error(HasEigenvector).
ClassLabel class_label(const Mat3& m);

/// [i, j] → [2i, 4j], the label of 2M.
ClassLabel scale_label(const ClassLabel& l);
/// [i, j] → [j, i], the label of M⁻¹.
ClassLabel inverse_label(const ClassLabel& l);
/// Label of Rᵏ for the catalogue representative R of l.
/// Throws Error(PowerLeavesEigenfreeSet) when Rᵏ is scalar or has an eigenvector.
ClassLabel power_class_map(const ClassLabel& l, int k);
/// Order (19 or 57) shared by every root of the label's cubic in F₇³.
int order_of_label(const ClassLabel& l);
/// MatCode-least element of SL₃(F₇) with the label's characteristic polynomial.
Mat3 representative(const ClassLabel& l);
/// Lexicographic minimum of the scaling orbit {l, 2·l, 4·l}.
ClassLabel psl_label(const ClassLabel& l);

/// Immutable table built once on first use; safe for concurrent reads.
struct ClassCatalog {
  std::vector<ClassLabel> labels;
  std::map<ClassLabel, int> order_of;
  std::map<ClassLabel, Mat3> representative_of;

  std::size_t index_of(const ClassLabel& l) const;
};

const ClassCatalog& catalog();

/// Dense lookup used by the scans: index 0..17 of an eigenfree label, or −1.
/// Only valid for det = 1 matrices.
int eigenfree_index(Fp trace, Fp minors);

/// Hand-picked matrices that serve as fixtures and as entry points for the
/// power-map and commuting-representative constructions.
namespace known {
/// [0,4], order 57, M¹⁹ = 4I; the base of the commuting representatives.
Mat3 rep_04();
/// [0,2], order 19; the matrix whose first 20 powers are tabulated.
Mat3 rep_02();
/// [1,0], order 57.
Mat3 rep_10();
/// [1,3], order 19; the trace-1 power-table matrix.
Mat3 rep_13();
/// [1,5], order 57, M¹⁹ = 2I.
Mat3 rep_15();
/// [6,2], M¹⁹ = 2I.
Mat3 rep_62();
}  // namespace known

}  // namespace sl3f7
