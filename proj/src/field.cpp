#include "sl3f7/field.hpp"

#include "sl3f7/error.hpp"

namespace sl3f7 {

namespace {

// x³ ≡ 1 − 2x (mod x³ + 2x − 1).
constexpr int kReduceX3Const = 1;
constexpr int kReduceX3Linear = kPrime - 2;

constexpr bool modulus_has_no_fp_root() {
  for (int x = 0; x < kPrime; ++x) {
    if ((x * x * x + 2 * x - 1 + 7 * kPrime) % kPrime == 0) return false;
  }
  return true;
}

static_assert(modulus_has_no_fp_root(), "x^3 + 2x - 1 must be irreducible over F7");

constexpr std::array<int, 12> kDivisors342 = {1, 2, 3, 6, 9, 18, 19, 38, 57, 114, 171, 342};

}  // namespace

Fp fp_inv(Fp a) {
  static constexpr std::array<int, kPrime> kInverse = {0, 1, 4, 5, 2, 3, 6};
  if (a.is_zero()) throw Error(ErrorKind::ZeroInverse, "0 has no inverse in F7");
  return Fp(kInverse[static_cast<std::size_t>(a.value())]);
}

Ext operator*(Ext a, Ext b) {
  // Schoolbook product into degree ≤ 4, then fold x⁴ and x³ down.
  std::array<int, 5> t{};
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) t[static_cast<std::size_t>(p + q)] += a[p].value() * b[q].value();
  }
  for (int d = 4; d >= 3; --d) {
    const int top = t[static_cast<std::size_t>(d)] % kPrime;
    t[static_cast<std::size_t>(d)] = 0;
    t[static_cast<std::size_t>(d - 3)] += top * kReduceX3Const;
    t[static_cast<std::size_t>(d - 2)] += top * kReduceX3Linear;
  }
  return Ext(Fp(t[0]), Fp(t[1]), Fp(t[2]));
}

Ext ext_mul(Ext a, Ext b) { return a * b; }

Ext Ext::pow(std::uint64_t n) const {
  Ext result(Fp(1));
  Ext base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

int ext_order(Ext a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "0 has no multiplicative order");
  const Ext one(Fp(1));
  for (int d : kDivisors342) {
    if (a.pow(static_cast<std::uint64_t>(d)) == one) return d;
  }
  // Unreachable: the unit group has order 342.
  throw Error(ErrorKind::ZeroElement, "order does not divide 342");
}

bool CubicPoly::has_fp_root() const {
  for (int x = 0; x < kPrime; ++x) {
    if (eval(Fp(x)).is_zero()) return true;
  }
  return false;
}

std::vector<Ext> cubic_roots_ext(const CubicPoly& p) {
  std::vector<Ext> roots;
  for (int k = 0; k < Ext::kPackedCount; ++k) {
    const Ext x = Ext::from_packed(k);
    if (p.eval(x).is_zero()) roots.push_back(x);
  }
  return roots;
}

bool modulus_is_irreducible() { return modulus_has_no_fp_root(); }

}  // namespace sl3f7
