#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace sl3f7 {

inline constexpr int kPrime = 7;

/// Residue class modulo 7, always stored as its canonical representative 0..6.
class Fp {
 public:
  constexpr Fp() = default;
  constexpr Fp(int v) : v_(static_cast<std::uint8_t>(((v % kPrime) + kPrime) % kPrime)) {}

  constexpr int value() const noexcept { return v_; }
  constexpr bool is_zero() const noexcept { return v_ == 0; }

  /// Signed representative in [-3, 3].
  constexpr int signed_value() const noexcept { return v_ > 3 ? v_ - kPrime : v_; }

  friend constexpr Fp operator+(Fp a, Fp b) { return Fp(a.v_ + b.v_); }
  friend constexpr Fp operator-(Fp a, Fp b) { return Fp(a.v_ - b.v_ + kPrime); }
  friend constexpr Fp operator*(Fp a, Fp b) { return Fp(a.v_ * b.v_); }
  constexpr Fp operator-() const { return Fp(kPrime - v_); }
  constexpr Fp& operator+=(Fp o) { return *this = *this + o; }
  constexpr Fp& operator-=(Fp o) { return *this = *this - o; }
  constexpr Fp& operator*=(Fp o) { return *this = *this * o; }

  friend constexpr bool operator==(Fp, Fp) = default;
  friend constexpr auto operator<=>(Fp, Fp) = default;

 private:
  std::uint8_t v_ = 0;
};

/// Multiplicative inverse; throws Error(ZeroInverse) for 0.
Fp fp_inv(Fp a);

/// Element c0 + c1·x + c2·x² of F₇[x]/(x³ + 2x − 1) ≅ F₇³.
class Ext {
 public:
  static constexpr int kPackedCount = kPrime * kPrime * kPrime;  // 343
  static constexpr int kUnitGroupOrder = kPackedCount - 1;       // 342

  constexpr Ext() = default;
  constexpr Ext(Fp c0, Fp c1, Fp c2) : c_{c0, c1, c2} {}
  constexpr explicit Ext(Fp constant) : c_{constant, Fp(0), Fp(0)} {}

  static constexpr Ext x() { return Ext(Fp(0), Fp(1), Fp(0)); }
  static constexpr Ext from_packed(int packed) {
    return Ext(Fp(packed % kPrime), Fp((packed / kPrime) % kPrime), Fp(packed / (kPrime * kPrime)));
  }

  /// c0 + 7·c1 + 49·c2, the iteration order used for root listings.
  constexpr int packed() const noexcept {
    return c_[0].value() + kPrime * c_[1].value() + kPrime * kPrime * c_[2].value();
  }

  constexpr Fp operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  constexpr bool is_zero() const noexcept { return packed() == 0; }
  constexpr bool is_constant() const noexcept { return c_[1].is_zero() && c_[2].is_zero(); }

  friend constexpr Ext operator+(Ext a, Ext b) {
    return Ext(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]);
  }
  friend constexpr Ext operator-(Ext a, Ext b) {
    return Ext(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]);
  }
  friend Ext operator*(Ext a, Ext b);

  Ext pow(std::uint64_t n) const;
  Ext frobenius() const { return pow(kPrime); }

  friend constexpr bool operator==(Ext, Ext) = default;

 private:
  std::array<Fp, 3> c_{};
};

Ext ext_mul(Ext a, Ext b);

/// Least n ≥ 1 with aⁿ = 1; throws Error(ZeroElement) for 0.
int ext_order(Ext a);

/// λ³ − i·λ² + j·λ − 1.
struct CubicPoly {
  Fp i;
  Fp j;

  Fp eval(Fp x) const { return x * x * x - i * x * x + j * x - Fp(1); }
  Ext eval(Ext x) const {
    const Ext x2 = x * x;
    return x2 * x - Ext(i) * x2 + Ext(j) * x - Ext(Fp(1));
  }
  bool has_fp_root() const;

  friend constexpr bool operator==(const CubicPoly&, const CubicPoly&) = default;
};

/// All roots in F₇³ by exhaustive evaluation, ascending by packed value.
std::vector<Ext> cubic_roots_ext(const CubicPoly& p);

/// The modulus x³ + 2x − 1 has no root in F₇; checked once at first use.
bool modulus_is_irreducible();

}  // namespace sl3f7
