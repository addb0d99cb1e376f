#include <doctest.h>

#include <random>
#include <set>

#include "sl3f7/classify.hpp"
#include "sl3f7/error.hpp"
#include "sl3f7/scan.hpp"
#include "sl3f7/serialize.hpp"
#include "sl3f7/verify.hpp"

using namespace sl3f7;

namespace {

ClassLabel L(int i, int j) { return ClassLabel{Fp(i), Fp(j)}; }

const Mat3 kM0{0, 1, 3, 0, 0, 1, 1, 0, 0};
const Mat3 kM2{0, 2, 6, 0, 0, 2, 2, 0, 0};

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

// Full census shared across cases; the scan is the slow part.
const ScanSummary& full_census() {
  static const ScanSummary s = census(ScanOptions{});
  return s;
}

}  // namespace

TEST_CASE("split_range covers without overlap") {
  for (std::size_t parts : {1u, 2u, 7u, 49u, 1000u}) {
    const auto pieces = split_range(CodeRange{5, 100005}, parts);
    std::uint32_t next = 5;
    for (const auto& p : pieces) {
      CHECK(p.begin == next);
      next = p.end;
    }
    CHECK(next == 100005);
  }
}

TEST_CASE("for_each_sl3 matches decode-and-det on sub-ranges") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint32_t> d(0, MatCode::kCount - 300000);
  for (int n = 0; n < 20; ++n) {
    const std::uint32_t begin = d(rng);
    const CodeRange r{begin, begin + 1 + static_cast<std::uint32_t>(rng() % 300000)};
    std::vector<std::uint32_t> fast, slow;
    for_each_sl3(r, [&](const Mat3& m, MatCode c) {
      REQUIRE(encode(m) == c);
      fast.push_back(c.value);
    });
    for (std::uint32_t c = r.begin; c < r.end; ++c) {
      if (det(decode(MatCode{c})) == Fp(1)) slow.push_back(c);
    }
    REQUIRE(fast == slow);
  }
}

TEST_CASE("for_each_sl3 stops when the visitor returns false") {
  int seen = 0;
  for_each_sl3(kFullRange, [&](const Mat3&, MatCode) { return ++seen < 10; });
  CHECK(seen == 10);
}

TEST_CASE("group orders") {
  CHECK(count_sl3(kFullRange) == 5630688);
  const CodeRange lo{0, MatCode::kCount / 2}, hi{MatCode::kCount / 2, MatCode::kCount};
  CHECK(count_sl3(lo) + count_sl3(hi) == 5630688);
  CHECK(count_invertible(kFullRange) == 33784128);
}

TEST_CASE("census totals") {
  const auto& s = full_census();
  CHECK(s.group_order == 5630688);
  CHECK(s.eigenfree_total == 1778112);
  CHECK(s.by_trace[0] == 296352);
  CHECK(s.by_trace[3] == 197568);
  std::uint64_t label_sum = 0, trace_sum = 0;
  for (const auto& [l, n] : s.by_label) {
    CHECK(n == 98784);
    label_sum += n;
  }
  for (auto n : s.by_trace) trace_sum += n;
  CHECK(label_sum == s.eigenfree_total);
  CHECK(trace_sum == s.eigenfree_total);
}

TEST_CASE("census is independent of partitioning") {
  ScanSummary merged;
  for (const auto& r : split_range(kFullRange, 13)) merged += census_range(r);
  CHECK(merged == full_census());
  ScanOptions four;
  four.threads = 4;
  CHECK(census(four) == full_census());
}

TEST_CASE("centralizer") {
  const auto c0 = centralizer(kM0);
  CHECK(c0.size == 57);
  CHECK(c0.is_cyclic);
  REQUIRE(c0.generator.has_value());
  CHECK(mat_order(*c0.generator) == 57);
  for (MatCode c : c0.elements) {
    const Mat3 g = decode(c);
    CHECK(det(g) == Fp(1));
    CHECK(g * kM0 == kM0 * g);
  }
  CHECK(centralizer(Fp(2) * kM0).elements == c0.elements);
  const auto ci = centralizer(Mat3::identity());
  CHECK(ci.size == 5630688);
  CHECK_FALSE(ci.is_cyclic);
  CHECK(ci.elements.empty());
}

TEST_CASE("centralizers of all representatives are cyclic of order 57") {
  for (const auto& l : eigenfree_labels()) {
    const auto c = centralizer(representative(l));
    CHECK(c.size == 57);
    CHECK(c.is_cyclic);
  }
}

TEST_CASE("class sizes") {
  CHECK(class_size(kM0) == 98784);
  CHECK(class_size(Mat3::identity()) == 1);
}

TEST_CASE("orbit oracle") {
  CHECK(orbit_oracle(Mat3::identity()) == std::vector<MatCode>{encode(Mat3::identity())});
  const auto orbit = orbit_oracle(kM0);
  CHECK(orbit.size() == 98784);
  CHECK(std::is_sorted(orbit.begin(), orbit.end()));
  CHECK(orbit == codes_with_label(L(0, 4)));
  CHECK(kind_of([] { orbit_oracle(kM0, {}, 1000); }) == ErrorKind::OrbitTooLarge);
}

TEST_CASE("Sylow 19 count") {
  CHECK(order19_element_count() == 592704);
  const auto n = sylow19_count();
  CHECK(n == 32928);
  CHECK(n % 19 == 1);
  CHECK((32ull * 27 * 343) % n == 0);
}

TEST_CASE("normalizer") {
  const auto n = normalizer_of_cyclic(kM2);
  CHECK(n == 171);
  CHECK(n % 57 == 0);
  CHECK(n / 19 == 9);
  CHECK(kind_of([] { normalizer_of_cyclic(kM0); }) == ErrorKind::WrongOrder);
}

TEST_CASE("order absence") {
  CHECK(order_absence_check(9));
  CHECK(order_absence_check(27));
  CHECK_FALSE(order_absence_check(3));
  CHECK(kind_of([] { order_absence_check(5); }) == ErrorKind::UnsupportedOrder);
}

TEST_CASE("power table of M2") {
  const auto rows = power_table(kM2, 20);
  REQUIRE(rows.size() == 20);
  const std::vector<int> traces = {0, 3, 3, 1, 4, 1, 0, 2, 1, 3, 0, 2, 3, 3, 3, 4, 4, 2, 3, 0};
  // Matrices as printed in the paper's table, signed entries (row 10 corrected).
  const std::vector<std::string> printed = {
      "0 2 -1; 0 0 2; 2 0 0",      "-2 0 -3; -3 0 0; 0 -3 -2",  "1 3 2; 0 1 3; 3 0 1",
      "-3 2 -2; -1 0 2; 2 -1 -3",  "3 1 0; -3 -2 1; 1 -3 3",    "0 -1 -1; 2 1 -1; -1 2 0",
      "-2 0 -2; -2 -3 0; 0 -2 -2", "3 3 2; 0 3 3; 3 0 3",       "-3 -1 3; -1 0 -1; -1 -1 -3",
      "-1 1 1; -2 -2 1; 1 -2 -1",   "2 -2 3; 2 3 -2; -2 2 2",    "-1 -3 1; 3 -3 -3; -3 3 -1",
      "2 -2 2; 1 -1 -2; -2 1 2",   "-3 -3 1; 3 2 -3; -3 3 -3",  "2 1 -3; 1 -1 1; 1 1 2",
      "1 -3 0; 2 2 -3; -3 2 1",    "0 2 0; 1 -3 2; 2 1 0",      "0 0 -3; -3 2 0; 0 -3 0",
      "1 0 0; 0 1 0; 0 0 1",       "0 2 -1; 0 0 2; 2 0 0"};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CAPTURE(k + 1);
    CHECK(rows[k].k == static_cast<int>(k + 1));
    CHECK(rows[k].power == kM2.pow(k + 1));
    CHECK(format_matrix(rows[k].power, true) == printed[k]);
    CHECK(rows[k].trace.value() == traces[k]);
  }
  // Row 10 is printed with i = 1, which contradicts its own trace 3.
  const Mat3 as_printed = parse_matrix("-1 1 1; -2 -2 1; 1 -2 1");
  CHECK(as_printed.trace() != Fp(traces[9]));
  CHECK(as_printed != rows[9].power);
  CHECK(rows[18].note == "identity");
  CHECK_FALSE(rows[18].label.has_value());
  CHECK(row_label_text(rows[0]) == "[0,2]");
  CHECK(row_label_text(rows[1]) == "[3,4]");
}

TEST_CASE("power table of the trace-1 representative") {
  const Mat3 t1{0, 1, 4, 0, 1, 5, 1, 0, 0};
  const auto rows = power_table(t1, 20);
  for (int k : {1, 7, 11, 20}) CHECK(row_label_text(rows[static_cast<std::size_t>(k - 1)]) == "[1,3]");
  for (int k : {5, 16, 17}) CHECK(row_label_text(rows[static_cast<std::size_t>(k - 1)]) == "[0,2]");
  for (int k : {8, 12, 18}) CHECK(row_label_text(rows[static_cast<std::size_t>(k - 1)]) == "[3,1]");
}

TEST_CASE("power table notes and limits") {
  const auto rows = power_table(kM0, 57);
  CHECK(rows[18].note == "scalar 4I");
  CHECK(rows[56].note == "identity");
  CHECK(kind_of([] { power_table(kM0, 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { power_table(kM0, 121); }) == ErrorKind::InvalidArgument);
  CHECK(power_table(kM0, 120).size() == 120);
  const Mat3 unipotent{1, 1, 0, 0, 1, 0, 0, 0, 1};
  CHECK(power_table(unipotent, 2)[0].note == "eigenvector");
}

TEST_CASE("trace-zero commutant family") {
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      for (int d = 0; d < 7; ++d) {
        const Mat3 s = trace_zero_commutant(Fp(a), Fp(b), Fp(d));
        CHECK(s * kM0 == kM0 * s);
        CHECK(commutant_det_polynomial(Fp(a), Fp(b), Fp(d)) == det(s));
      }
    }
  }
  const auto table = commutant_solution_table();
  CHECK(table.size() == 49);
  std::size_t total = 0;
  for (const auto& row : table) {
    for (Fp a : row.solutions) CHECK(det(trace_zero_commutant(a, row.b, row.d)) == Fp(1));
    total += row.solutions.size();
  }
  CHECK(total == 57);
}

TEST_CASE("thread count does not change results") {
  ScanOptions one, four;
  four.threads = 4;
  CHECK(centralizer(kM2, one).elements == centralizer(kM2, four).elements);
  CHECK(count_sl3(kFullRange, one) == count_sl3(kFullRange, four));
  CHECK(orbit_oracle(kM2, one) == orbit_oracle(kM2, four));
}
