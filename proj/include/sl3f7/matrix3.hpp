#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "sl3f7/field.hpp"

namespace sl3f7 {

/// Base-7 packing of the nine entries, entry 0 least significant.
struct MatCode {
  static constexpr std::uint32_t kCount = 40353607;  // 7⁹

  std::uint32_t value = 0;

  friend constexpr bool operator==(MatCode, MatCode) = default;
  friend constexpr auto operator<=>(MatCode, MatCode) = default;
};

/// 3×3 matrix over F₇, row-major. Entries a..i in the usual layout
///
///   a b c
///   d e f
///   g h i
///
/// live at indices 0..8.
class Mat3 {
 public:
  constexpr Mat3() = default;
  constexpr explicit Mat3(const std::array<Fp, 9>& entries) : e_(entries) {}
  constexpr Mat3(std::initializer_list<int> entries) {
    std::size_t k = 0;
    for (int v : entries) {
      if (k < 9) e_[k] = Fp(v);
      ++k;
    }
  }

  static constexpr Mat3 zero() { return Mat3(); }
  static constexpr Mat3 scalar(Fp s) {
    Mat3 m;
    m.e_[0] = m.e_[4] = m.e_[8] = s;
    return m;
  }
  static constexpr Mat3 identity() { return scalar(Fp(1)); }

  constexpr Fp operator()(int row, int col) const { return e_[static_cast<std::size_t>(3 * row + col)]; }
  constexpr Fp& operator()(int row, int col) { return e_[static_cast<std::size_t>(3 * row + col)]; }
  constexpr Fp operator[](int k) const { return e_[static_cast<std::size_t>(k)]; }
  constexpr const std::array<Fp, 9>& entries() const { return e_; }

  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Mat3 operator*(Fp s, const Mat3& m);
  friend Mat3 operator+(const Mat3& a, const Mat3& b);
  friend Mat3 operator-(const Mat3& a, const Mat3& b);

  Mat3 pow(std::uint64_t n) const;
  Fp trace() const { return e_[0] + e_[4] + e_[8]; }
  bool is_scalar() const;

  friend constexpr bool operator==(const Mat3&, const Mat3&) = default;

 private:
  std::array<Fp, 9> e_{};
};

/// Coefficients of det(λI − M) = λ³ − trace·λ² + minors·λ − det.
struct CharPoly {
  Fp trace;
  Fp minors;  // sum of the three principal 2×2 minors
  Fp det;

  Fp eval(Fp x) const { return x * x * x - trace * x * x + minors * x - det; }
  bool has_fp_root() const;
  /// Only meaningful when det = 1.
  CubicPoly cubic() const { return CubicPoly{trace, minors}; }

  friend constexpr bool operator==(const CharPoly&, const CharPoly&) = default;
};

Fp det(const Mat3& m);
CharPoly char_poly(const Mat3& m);

/// True iff the characteristic polynomial has a root in F₇.
bool has_fp_eigenvalue(const Mat3& m);

/// Gaussian elimination on M − λI; independent of the root test above.
bool null_space_has_nonzero(const Mat3& m, Fp lambda);

/// Adjugate times det⁻¹; throws Error(SingularMatrix).
Mat3 inverse(const Mat3& m);

/// Least n ≥ 1 with Mⁿ = I; throws Error(SingularMatrix) when det = 0.
std::uint64_t mat_order(const Mat3& m);

MatCode encode(const Mat3& m);
/// Throws Error(CodeOutOfRange) for codes ≥ 7⁹.
Mat3 decode(MatCode code);

/// Rows separated by ';', entries by whitespace. Signed entries in [−6, 6]
/// are accepted and reduced mod 7. Throws Error(Parse).
Mat3 parse_matrix(std::string_view text);
/// Same layout as parse_matrix accepts; `signed_entries` prints −3..3.
std::string format_matrix(const Mat3& m, bool signed_entries = false);

inline constexpr std::uint64_t kSL3Order = 5630688;   // 2⁵·3³·7³·19
inline constexpr std::uint64_t kGL3Order = 33784128;  // (7³−1)(7³−7)(7³−7²)

}  // namespace sl3f7
