#include "sl3f7/scan.hpp"

#include <algorithm>
#include <numeric>

#include "sl3f7/error.hpp"

namespace sl3f7 {

namespace {

// Dense presence set over all 7⁹ codes (~4.8 MB).
class CodeBitmap {
 public:
  CodeBitmap() : words_((MatCode::kCount + 63) / 64, 0) {}

  bool insert(std::uint32_t code) {
    auto& w = words_[code >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (code & 63u);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  std::uint64_t count() const { return count_; }

  std::vector<MatCode> to_codes() const {
    std::vector<MatCode> out;
    out.reserve(count_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        const int bit = __builtin_ctzll(w);
        out.push_back(MatCode{static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(bit))});
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
  std::uint64_t count_ = 0;
};

// 2⁵·3³·7³, the part of the group order prime to 19.
constexpr std::uint64_t kSylow19Index = kSL3Order / 19;

template <class Pred>
std::uint64_t count_matching(const ScanOptions& options, Pred pred) {
  return parallel_reduce(
      options, kFullRange, std::uint64_t{0},
      [&](CodeRange r) {
        std::uint64_t n = 0;
        for_each_sl3(r, [&](const Mat3& g, MatCode) {
          if (pred(g)) ++n;
        });
        return n;
      },
      [](std::uint64_t& acc, std::uint64_t part) { acc += part; });
}

}  // namespace

namespace detail {

const std::vector<LowEntry>& low_table() {
  static const std::vector<LowEntry> table = [] {
    std::vector<LowEntry> t(kLowCount);
    for (std::uint32_t low = 0; low < kLowCount; ++low) {
      std::array<int, 6> e{};
      std::uint32_t v = low;
      for (auto& x : e) {
        x = static_cast<int>(v % 7);
        v /= 7;
      }
      const int a = e[0], b = e[1], c = e[2], d = e[3], ee = e[4], f = e[5];
      auto& entry = t[low];
      for (int k = 0; k < 6; ++k) entry.e[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(e[static_cast<std::size_t>(k)]);
      entry.cof = {static_cast<std::uint8_t>(Fp(b * f - c * ee).value()),
                   static_cast<std::uint8_t>(Fp(c * d - a * f).value()),
                   static_cast<std::uint8_t>(Fp(a * ee - b * d).value())};
    }
    return t;
  }();
  return table;
}

}  // namespace detail

std::vector<CodeRange> split_range(CodeRange r, std::size_t parts) {
  parts = std::max<std::size_t>(parts, 1);
  std::vector<CodeRange> out;
  const std::uint64_t n = r.size();
  for (std::size_t k = 0; k < parts; ++k) {
    const auto lo = static_cast<std::uint32_t>(r.begin + n * k / parts);
    const auto hi = static_cast<std::uint32_t>(r.begin + n * (k + 1) / parts);
    out.push_back(CodeRange{lo, hi});
  }
  return out;
}

std::uint64_t count_sl3(CodeRange r, const ScanOptions& options) {
  return parallel_reduce(
      options, r, std::uint64_t{0},
      [](CodeRange part) {
        std::uint64_t n = 0;
        for_each_sl3(part, [&](const Mat3&, MatCode) { ++n; });
        return n;
      },
      [](std::uint64_t& acc, std::uint64_t part) { acc += part; });
}

std::uint64_t count_invertible(CodeRange r, const ScanOptions& options) {
  return parallel_reduce(
      options, r, std::uint64_t{0},
      [](CodeRange part) {
        using detail::kLowCount;
        const auto& lows = detail::low_table();
        std::uint64_t n = 0;
        for (std::uint32_t c = part.begin; c < part.end; ++c) {
          const std::uint32_t high = c / kLowCount;
          const auto& le = lows[c - high * kLowCount];
          const int g = static_cast<int>(high % 7), h = static_cast<int>((high / 7) % 7),
                    i = static_cast<int>(high / 49);
          if ((g * le.cof[0] + h * le.cof[1] + i * le.cof[2]) % 7 != 0) ++n;
        }
        return n;
      },
      [](std::uint64_t& acc, std::uint64_t part) { acc += part; });
}

ScanSummary& ScanSummary::operator+=(const ScanSummary& o) {
  group_order += o.group_order;
  eigenfree_total += o.eigenfree_total;
  for (std::size_t t = 0; t < 7; ++t) {
    all_by_trace[t] += o.all_by_trace[t];
    by_trace[t] += o.by_trace[t];
  }
  for (const auto& [l, n] : o.by_label) by_label[l] += n;
  return *this;
}

ScanSummary census_range(CodeRange r) {
  std::array<std::uint64_t, kEigenfreeLabelCount> per_label{};
  ScanSummary s;
  for_each_sl3(r, [&](const Mat3& m, MatCode) {
    const CharPoly cp = char_poly(m);
    const auto t = static_cast<std::size_t>(cp.trace.value());
    ++s.group_order;
    ++s.all_by_trace[t];
    const int idx = eigenfree_index(cp.trace, cp.minors);
    if (idx < 0) return;
    ++s.eigenfree_total;
    ++s.by_trace[t];
    ++per_label[static_cast<std::size_t>(idx)];
  });
  const auto labels = eigenfree_labels();
  for (std::size_t k = 0; k < labels.size(); ++k) s.by_label[labels[k]] = per_label[k];
  return s;
}

ScanSummary census(const ScanOptions& options) {
  return parallel_reduce(
      options, kFullRange, ScanSummary{}, [](CodeRange r) { return census_range(r); },
      [](ScanSummary& acc, const ScanSummary& part) { acc += part; });
}

CentralizerReport centralizer(const Mat3& m, const ScanOptions& options) {
  struct Partial {
    std::uint64_t size = 0;
    std::vector<MatCode> codes;
  };
  const Partial total = parallel_reduce(
      options, kFullRange, Partial{},
      [&](CodeRange r) {
        Partial p;
        for_each_sl3(r, [&](const Mat3& g, MatCode code) {
          if (g * m != m * g) return;
          ++p.size;
          if (p.codes.size() <= CentralizerReport::kListLimit) p.codes.push_back(code);
        });
        return p;
      },
      [](Partial& acc, Partial&& part) {
        acc.size += part.size;
        if (acc.size <= CentralizerReport::kListLimit) {
          acc.codes.insert(acc.codes.end(), part.codes.begin(), part.codes.end());
        } else {
          acc.codes.clear();
        }
      });

  CentralizerReport report;
  report.subject = m;
  report.size = total.size;
  if (total.size <= CentralizerReport::kListLimit) {
    report.elements = total.codes;
    for (MatCode c : report.elements) {
      const Mat3 g = decode(c);
      if (mat_order(g) == report.size) {
        report.is_cyclic = true;
        report.generator = g;
        break;
      }
    }
  }
  // Larger centralizers are never cyclic: no element of GL₃(F₇) has order
  // above 7³ − 1 = 342.
  return report;
}

std::uint64_t class_size(const Mat3& m, const ScanOptions& options) {
  if (det(m) != Fp(1)) throw Error(ErrorKind::NotInSL3, "class_size needs a det-1 matrix");
  return kSL3Order / centralizer(m, options).size;
}

std::vector<MatCode> orbit_oracle(const Mat3& m, const ScanOptions& options, std::uint64_t cap) {
  if (det(m) != Fp(1)) throw Error(ErrorKind::NotInSL3, "orbit_oracle needs a det-1 matrix");
  CodeBitmap seen = parallel_reduce(
      options, kFullRange, CodeBitmap{},
      [&](CodeRange r) {
        std::vector<std::uint32_t> codes;
        for_each_sl3(r, [&](const Mat3& g, MatCode) { codes.push_back(encode(g * m * inverse(g)).value); });
        std::sort(codes.begin(), codes.end());
        codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
        return codes;
      },
      [](CodeBitmap& acc, std::vector<std::uint32_t>&& part) {
        for (std::uint32_t c : part) acc.insert(c);
      });
  if (seen.count() > cap) {
    throw Error(ErrorKind::OrbitTooLarge,
                "orbit has " + std::to_string(seen.count()) + " elements, cap is " + std::to_string(cap));
  }
  return seen.to_codes();
}

std::vector<MatCode> codes_with_label(const ClassLabel& l, const ScanOptions& options) {
  if (!l.is_eigenfree()) throw Error(ErrorKind::NotEigenfree, to_string(l) + " has a root in F7");
  return parallel_reduce(
      options, kFullRange, std::vector<MatCode>{},
      [&](CodeRange r) {
        std::vector<MatCode> out;
        for_each_sl3(r, [&](const Mat3& g, MatCode code) {
          const CharPoly cp = char_poly(g);
          if (cp.trace == l.i && cp.minors == l.j) out.push_back(code);
        });
        return out;
      },
      [](std::vector<MatCode>& acc, std::vector<MatCode>&& part) {
        acc.insert(acc.end(), part.begin(), part.end());
      });
}

std::uint64_t order19_element_count(const ScanOptions& options) {
  const Mat3 id = Mat3::identity();
  return count_matching(options, [&](const Mat3& g) { return g != id && g.pow(19) == id; });
}

std::uint64_t sylow19_count(const ScanOptions& options) {
  const std::uint64_t elements = order19_element_count(options);
  // Distinct subgroups of prime order 19 meet trivially, 18 generators each.
  if (elements % 18 != 0) {
    throw Error(ErrorKind::NonIntegerCount, std::to_string(elements) + " order-19 elements is not a multiple of 18");
  }
  const std::uint64_t n = elements / 18;
  if (n % 19 != 1 || kSylow19Index % n != 0) {
    throw Error(ErrorKind::NonIntegerCount,
                "n19 = " + std::to_string(n) + " violates n19 = 1 mod 19 or n19 | 2^5*3^3*7^3");
  }
  return n;
}

std::uint64_t normalizer_of_cyclic(const Mat3& p, const ScanOptions& options) {
  if (det(p) != Fp(1) || mat_order(p) != 19) {
    throw Error(ErrorKind::WrongOrder, "normalizer_of_cyclic needs an element of order 19");
  }
  std::vector<MatCode> subgroup;
  Mat3 q = Mat3::identity();
  for (int k = 0; k < 19; ++k, q = q * p) subgroup.push_back(encode(q));
  std::sort(subgroup.begin(), subgroup.end());
  return count_matching(options, [&](const Mat3& g) {
    return std::binary_search(subgroup.begin(), subgroup.end(), encode(g * p * inverse(g)));
  });
}

bool order_absence_check(int n, const ScanOptions& options) {
  if (n != 3 && n != 9 && n != 27) {
    throw Error(ErrorKind::UnsupportedOrder, "order_absence_check supports 3, 9 and 27, got " + std::to_string(n));
  }
  const Mat3 id = Mat3::identity();
  const std::uint64_t third = static_cast<std::uint64_t>(n / 3);
  const std::uint64_t found = count_matching(options, [&](const Mat3& g) {
    const Mat3 r = g.pow(third);
    return r != id && r * r * r == id;
  });
  return found == 0;
}

std::vector<PowerTableRow> power_table(const Mat3& m, int limit) {
  if (det(m) != Fp(1)) throw Error(ErrorKind::NotInSL3, "power_table needs a det-1 matrix");
  if (limit < 1 || limit > 120) throw Error(ErrorKind::InvalidArgument, "limit must lie in [1, 120]");
  std::vector<PowerTableRow> rows;
  Mat3 p = m;
  for (int k = 1; k <= limit; ++k, p = p * m) {
    PowerTableRow row;
    row.k = k;
    row.power = p;
    row.trace = p.trace();
    if (p == Mat3::identity()) {
      row.note = "identity";
    } else if (p.is_scalar()) {
      row.note = "scalar " + std::to_string(p[0].value()) + "I";
    } else if (has_fp_eigenvalue(p)) {
      row.note = "eigenvector";
    } else {
      row.label = class_label(p);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat3 trace_zero_commutant(Fp a, Fp b, Fp d) {
  return Mat3(std::array<Fp, 9>{a, b, Fp(3) * b + d, d, a - Fp(3) * d, b, b, d, a});
}

Fp commutant_det_polynomial(Fp a, Fp b, Fp d) {
  return a * a * a + b * b * b + d * d * d - Fp(3) * a * a * d - Fp(3) * a * b * b + Fp(2) * d * b * b -
         d * d * b - Fp(3) * b * a * d;
}

std::vector<CommutantSolutionRow> commutant_solution_table() {
  std::vector<CommutantSolutionRow> rows;
  for (int bv = 0; bv < kPrime; ++bv) {
    for (int dv = 0; dv < kPrime; ++dv) {
      const Fp b(bv), d(dv);
      CommutantSolutionRow row{b, d, {}, {}};
      row.coeffs = {b * b * b + d * d * d + Fp(2) * d * b * b - d * d * b - Fp(1),
                    -(Fp(3) * b * b + Fp(3) * b * d), -(Fp(3) * d)};
      for (int av = 0; av < kPrime; ++av) {
        const Fp a(av);
        if ((a * a * a + row.coeffs[2] * a * a + row.coeffs[1] * a + row.coeffs[0]).is_zero()) {
          row.solutions.push_back(a);
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace sl3f7
