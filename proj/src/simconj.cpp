#include "sl3f7/simconj.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "sl3f7/error.hpp"

namespace sl3f7 {

namespace {

constexpr int kCyclicOrder = 57;

int inverse_mod_57(int u) {
  for (int v = 1; v < kCyclicOrder; ++v) {
    if (u * v % kCyclicOrder == 1) return v;
  }
  throw Error(ErrorKind::InvalidArgument, std::to_string(u) + " is not a unit mod 57");
}

// Discrete log table for the cyclic group generated by base.
std::map<MatCode, int> power_index(const Mat3& base) {
  std::map<MatCode, int> index;
  Mat3 p = Mat3::identity();
  for (int k = 0; k < kCyclicOrder; ++k, p = p * base) index.emplace(encode(p), k);
  return index;
}

}  // namespace

std::vector<Mat3> eigenfree_centralizer(const Mat3& m) {
  if (det(m) != Fp(1) || has_fp_eigenvalue(m)) {
    throw Error(ErrorKind::NotEigenfree, "eigenfree_centralizer needs an eigenvector-free det-1 matrix");
  }
  // An eigenvector-free M is cyclic, so everything commuting with it is a
  // polynomial in M.
  const Mat3 id = Mat3::identity();
  const Mat3 m2 = m * m;
  std::vector<std::pair<MatCode, Mat3>> found;
  for (int a = 0; a < kPrime; ++a)
    for (int b = 0; b < kPrime; ++b)
      for (int c = 0; c < kPrime; ++c) {
        const Mat3 s = Fp(a) * id + Fp(b) * m + Fp(c) * m2;
        if (det(s) == Fp(1)) found.emplace_back(encode(s), s);
      }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Mat3> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(f.second);
  return out;
}

TupleAnalysis analyze_tuple(const std::vector<Mat3>& ms) {
  if (ms.empty()) throw Error(ErrorKind::EmptyAfterScalarStrip, "tuple is empty");
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (det(ms[k]) != Fp(1)) throw Error(ErrorKind::NotInSL3, "member " + std::to_string(k + 1) + " has det != 1");
  }
  for (std::size_t p = 0; p < ms.size(); ++p) {
    for (std::size_t q = p + 1; q < ms.size(); ++q) {
      if (ms[p] * ms[q] != ms[q] * ms[p]) {
        throw Error(ErrorKind::NotCommuting,
                    "members " + std::to_string(p + 1) + " and " + std::to_string(q + 1) + " do not commute");
      }
    }
  }

  std::vector<ScalarSlot> scalars;
  std::vector<std::size_t> positions;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (ms[k].is_scalar()) {
      scalars.push_back({k, ms[k][0]});
    } else {
      positions.push_back(k);
    }
  }
  if (positions.empty()) throw Error(ErrorKind::EmptyAfterScalarStrip, "every member is I, 2I or 4I");

  std::vector<std::size_t> eigenfree;
  std::vector<std::size_t> with_eigen;
  for (std::size_t k : positions) (has_fp_eigenvalue(ms[k]) ? with_eigen : eigenfree).push_back(k);
  if (eigenfree.empty()) return AllEigen{std::move(scalars), ms.size()};
  if (!with_eigen.empty()) {
    return Rejected{"member " + std::to_string(eigenfree.front() + 1) + " is eigenvector-free but member " +
                    std::to_string(with_eigen.front() + 1) + " has an eigenvector"};
  }

  CommutingTuple t;
  t.length = ms.size();
  t.scalars = std::move(scalars);
  t.positions = positions;
  for (std::size_t k : positions) t.members.push_back(ms[k]);

  // Prefer a member that already generates the centralizer.
  std::optional<Mat3> base;
  for (const Mat3& m : t.members) {
    if (mat_order(m) == kCyclicOrder) {
      base = m;
      break;
    }
  }
  if (!base) {
    for (const Mat3& c : eigenfree_centralizer(t.members.front())) {
      if (mat_order(c) == kCyclicOrder) {
        base = c;
        break;
      }
    }
  }
  if (!base) return Rejected{"centralizer of member " + std::to_string(positions.front() + 1) + " is not cyclic of order 57"};
  t.base = *base;

  const auto index = power_index(t.base);
  for (std::size_t k = 0; k < t.members.size(); ++k) {
    const auto it = index.find(encode(t.members[k]));
    if (it == index.end()) {
      return Rejected{"member " + std::to_string(positions[k] + 1) + " is not a power of the common base"};
    }
    t.exponents.push_back(it->second);
  }
  return t;
}

std::optional<Mat3> find_conjugator(const Mat3& a, const Mat3& b, const ScanOptions& options) {
  if (det(a) != Fp(1) || det(b) != Fp(1)) throw Error(ErrorKind::NotInSL3, "find_conjugator needs det-1 matrices");
  if (char_poly(a) != char_poly(b)) return std::nullopt;

  const auto parts = split_range(kFullRange, 49);
  std::atomic<std::uint32_t> best{MatCode::kCount};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < parts.size(); k = next++) {
      if (parts[k].begin >= best.load()) continue;
      for_each_sl3(parts[k], [&](const Mat3& g, MatCode code) {
        if (code.value >= best.load()) return false;
        if (g * a != b * g) return true;
        std::uint32_t cur = best.load();
        while (code.value < cur && !best.compare_exchange_weak(cur, code.value)) {
        }
        return false;
      });
    }
  };
  const unsigned n = std::max(1u, options.threads);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (best.load() == MatCode::kCount) return std::nullopt;
  return decode(MatCode{best.load()});
}

SimConjVerdict decide_simconj(const CommutingTuple& t1, const CommutingTuple& t2, const ScanOptions& options) {
  if (t1.length != t2.length) {
    throw Error(ErrorKind::LengthMismatch,
                "tuples have lengths " + std::to_string(t1.length) + " and " + std::to_string(t2.length));
  }
  SimConjVerdict verdict;

  // Scalars are central: they must sit at the same places with the same values.
  if (t1.scalars != t2.scalars) {
    std::size_t at = t1.length;
    for (std::size_t k = 0; k < std::max(t1.scalars.size(), t2.scalars.size()); ++k) {
      if (k >= t1.scalars.size() || k >= t2.scalars.size() || t1.scalars[k] != t2.scalars[k]) {
        const std::size_t i1 = k < t1.scalars.size() ? t1.scalars[k].index : t1.length;
        const std::size_t i2 = k < t2.scalars.size() ? t2.scalars[k].index : t2.length;
        at = std::min(i1, i2);
        break;
      }
    }
    verdict.certificate = "class mismatch at index " + std::to_string(at + 1) + " (scalar member)";
    return verdict;
  }

  for (std::size_t k = 0; k < t1.members.size(); ++k) {
    if (class_label(t1.members[k]) != class_label(t2.members[k])) {
      verdict.certificate = "class mismatch at index " + std::to_string(t1.positions[k] + 1) + ": " +
                            to_string(class_label(t1.members[k])) + " vs " + to_string(class_label(t2.members[k]));
      return verdict;
    }
  }

  // A conjugator sends base₁ to some generator base₂ᵘ of the second
  // centralizer; the tuples match iff some u fixes the label and the exponents.
  const ClassLabel base_label = class_label(t1.base);
  for (int u = 1; u < kCyclicOrder; ++u) {
    if (std::gcd(u, kCyclicOrder) != 1) continue;
    const Mat3 candidate = t2.base.pow(static_cast<std::uint64_t>(u));
    if (class_label(candidate) != base_label) continue;
    const int uinv = inverse_mod_57(u);
    bool match = true;
    for (std::size_t k = 0; k < t1.exponents.size() && match; ++k) {
      match = t1.exponents[k] == t2.exponents[k] * uinv % kCyclicOrder;
    }
    if (!match) continue;

    const auto g = find_conjugator(t1.base, candidate, options);
    if (!g) throw Error(ErrorKind::InvalidArgument, "labels agree but no conjugator was found");
    const Mat3 ginv = inverse(*g);
    for (std::size_t k = 0; k < t1.members.size(); ++k) {
      if (*g * t1.members[k] * ginv != t2.members[k]) {
        throw Error(ErrorKind::InvalidArgument, "conjugator failed verification");
      }
    }
    verdict.equivalent = true;
    verdict.witness = *g;
    return verdict;
  }
  verdict.certificate = "no generator of the second centralizer matches the exponents modulo 57";
  return verdict;
}

CommutingReps eighteen_commuting_reps() {
  const Mat3 base = known::rep_04();
  CommutingReps out;
  Mat3 p = Mat3::identity();
  for (int k = 1; k < kCyclicOrder; ++k) {
    p = p * base;
    if (k % 19 == 0) continue;
    const ClassLabel l = class_label(p);
    out.powers_by_label[l].push_back(k);
    if (!out.reps.contains(l)) {
      out.reps.emplace(l, p);
      out.exponent.emplace(l, k);
    }
  }
  if (out.reps.size() != kEigenfreeLabelCount) {
    throw Error(ErrorKind::IncompleteCover,
                "powers of the base reach " + std::to_string(out.reps.size()) + " labels, expected 18");
  }
  return out;
}

}  // namespace sl3f7
