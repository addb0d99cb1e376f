#include "sl3f7/matrix3.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "sl3f7/error.hpp"

namespace sl3f7 {

namespace {

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::uint64_t>& sl3_divisors() {
  static const std::vector<std::uint64_t> d = divisors_of(kSL3Order);
  return d;
}

const std::vector<std::uint64_t>& gl3_divisors() {
  static const std::vector<std::uint64_t> d = divisors_of(kGL3Order);
  return d;
}

std::uint64_t first_identity_divisor(const Mat3& m, const std::vector<std::uint64_t>& candidates) {
  const Mat3 id = Mat3::identity();
  for (std::uint64_t d : candidates) {
    if (m.pow(d) == id) return d;
  }
  throw Error(ErrorKind::SingularMatrix, "no divisor of the group order annihilates the matrix");
}

}  // namespace

Mat3 operator*(const Mat3& a, const Mat3& b) {
  std::array<Fp, 9> out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int s = a(r, 0).value() * b(0, c).value() + a(r, 1).value() * b(1, c).value() +
                    a(r, 2).value() * b(2, c).value();
      out[static_cast<std::size_t>(3 * r + c)] = Fp(s);
    }
  }
  return Mat3(out);
}

Mat3 operator*(Fp s, const Mat3& m) {
  std::array<Fp, 9> out;
  for (int k = 0; k < 9; ++k) out[static_cast<std::size_t>(k)] = s * m[k];
  return Mat3(out);
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
  std::array<Fp, 9> out;
  for (int k = 0; k < 9; ++k) out[static_cast<std::size_t>(k)] = a[k] + b[k];
  return Mat3(out);
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  std::array<Fp, 9> out;
  for (int k = 0; k < 9; ++k) out[static_cast<std::size_t>(k)] = a[k] - b[k];
  return Mat3(out);
}

Mat3 Mat3::pow(std::uint64_t n) const {
  Mat3 result = identity();
  Mat3 base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

bool Mat3::is_scalar() const {
  return e_[1].is_zero() && e_[2].is_zero() && e_[3].is_zero() && e_[5].is_zero() && e_[6].is_zero() &&
         e_[7].is_zero() && e_[0] == e_[4] && e_[4] == e_[8];
}

bool CharPoly::has_fp_root() const {
  for (int x = 0; x < kPrime; ++x) {
    if (eval(Fp(x)).is_zero()) return true;
  }
  return false;
}

Fp det(const Mat3& m) {
  const int a = m[0].value(), b = m[1].value(), c = m[2].value();
  const int d = m[3].value(), e = m[4].value(), f = m[5].value();
  const int g = m[6].value(), h = m[7].value(), i = m[8].value();
  return Fp(a * e * i + b * f * g + c * d * h - c * e * g - a * f * h - b * d * i);
}

CharPoly char_poly(const Mat3& m) {
  const Fp minors = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) + (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) +
                    (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0));
  return CharPoly{m.trace(), minors, det(m)};
}

bool has_fp_eigenvalue(const Mat3& m) { return char_poly(m).has_fp_root(); }

bool null_space_has_nonzero(const Mat3& m, Fp lambda) {
  std::array<std::array<Fp, 3>, 3> rows;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) rows[r][c] = m(r, c) - (r == c ? lambda : Fp(0));
  }
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int pivot = -1;
    for (int r = rank; r < 3; ++r) {
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const Fp scale = fp_inv(rows[rank][col]);
    for (int c = 0; c < 3; ++c) rows[rank][c] *= scale;
    for (int r = 0; r < 3; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Fp factor = rows[r][col];
      for (int c = 0; c < 3; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank < 3;
}

Mat3 inverse(const Mat3& m) {
  const Fp d = det(m);
  if (d.is_zero()) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  const Fp s = fp_inv(d);
  // Adjugate: transpose of the cofactor matrix.
  std::array<Fp, 9> adj;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int r1 = (c + 1) % 3, r2 = (c + 2) % 3;
      const int c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      adj[static_cast<std::size_t>(3 * r + c)] = s * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1));
    }
  }
  return Mat3(adj);
}

std::uint64_t mat_order(const Mat3& m) {
  const Fp d = det(m);
  if (d.is_zero()) throw Error(ErrorKind::SingularMatrix, "singular matrices have no order");
  if (d == Fp(1)) {
    if (!has_fp_eigenvalue(m)) {
      static const std::vector<std::uint64_t> kEigenfreeOrders = {19, 57};
      return first_identity_divisor(m, kEigenfreeOrders);
    }
    return first_identity_divisor(m, sl3_divisors());
  }
  return first_identity_divisor(m, gl3_divisors());
}

MatCode encode(const Mat3& m) {
  std::uint32_t code = 0;
  for (int k = 8; k >= 0; --k) code = code * kPrime + static_cast<std::uint32_t>(m[k].value());
  return MatCode{code};
}

Mat3 decode(MatCode code) {
  if (code.value >= MatCode::kCount) {
    throw Error(ErrorKind::CodeOutOfRange, "code " + std::to_string(code.value) + " is not below 7^9");
  }
  std::array<Fp, 9> e;
  std::uint32_t v = code.value;
  for (auto& x : e) {
    x = Fp(static_cast<int>(v % kPrime));
    v /= kPrime;
  }
  return Mat3(e);
}

Mat3 parse_matrix(std::string_view text) {
  std::vector<std::vector<int>> rows(1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch == ';') {
      rows.emplace_back();
      ++pos;
    } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++pos;
    } else {
      std::size_t start = pos;
      if (ch == '+' || ch == '-') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      int v = 0;
      const char* first = text.data() + start + (text[start] == '+' ? 1 : 0);
      const auto [ptr, ec] = std::from_chars(first, text.data() + pos, v);
      if (ec != std::errc() || ptr != text.data() + pos || pos == start) {
        throw Error(ErrorKind::Parse, "bad matrix entry near '" + std::string(text.substr(start, 8)) + "'");
      }
      if (v < -6 || v > 6) throw Error(ErrorKind::Parse, "entry " + std::to_string(v) + " outside [-6, 6]");
      rows.back().push_back(v);
    }
  }
  // Tolerate a trailing separator.
  if (rows.size() == 4 && rows.back().empty()) rows.pop_back();
  if (rows.size() != 3) throw Error(ErrorKind::Parse, "expected 3 rows, got " + std::to_string(rows.size()));
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    if (rows[static_cast<std::size_t>(r)].size() != 3) {
      throw Error(ErrorKind::Parse, "row " + std::to_string(r + 1) + " does not have 3 entries");
    }
    for (int c = 0; c < 3; ++c) m(r, c) = Fp(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return m;
}

std::string format_matrix(const Mat3& m, bool signed_entries) {
  std::ostringstream os;
  for (int r = 0; r < 3; ++r) {
    if (r > 0) os << "; ";
    for (int c = 0; c < 3; ++c) {
      if (c > 0) os << ' ';
      os << (signed_entries ? m(r, c).signed_value() : m(r, c).value());
    }
  }
  return os.str();
}

}  // namespace sl3f7
