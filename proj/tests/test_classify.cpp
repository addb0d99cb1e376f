#include <doctest.h>

#include <random>
#include <set>

#include "sl3f7/classify.hpp"
#include "sl3f7/error.hpp"
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

}  // namespace

TEST_CASE("eigenfree_labels") {
  const auto labels = eigenfree_labels();
  CHECK(labels.size() == 18);
  CHECK(std::is_sorted(labels.begin(), labels.end()));
  std::set<ClassLabel> s(labels.begin(), labels.end());
  for (auto l : {L(0, 1), L(0, 2), L(0, 4), L(1, 5)}) CHECK(s.contains(l));
  CHECK_FALSE(s.contains(L(1, 6)));
  std::array<int, 7> per_trace{};
  for (const auto& l : labels) ++per_trace[static_cast<std::size_t>(l.i.value())];
  CHECK(per_trace == std::array<int, 7>{3, 3, 3, 2, 3, 2, 2});
}

TEST_CASE("class_label examples and errors") {
  CHECK(class_label(kM0) == L(0, 4));
  CHECK(class_label(Fp(2) * kM0) == L(0, 2));
  CHECK(class_label(kM2 * kM2) == L(3, 4));
  CHECK(kind_of([] { class_label(Mat3::identity()); }) == ErrorKind::HasEigenvector);
  CHECK(kind_of([] { class_label(Fp(3) * kM0); }) == ErrorKind::NotInSL3);
}

TEST_CASE("scale_label") {
  CHECK(scale_label(L(0, 4)) == L(0, 2));
  CHECK(scale_label(L(1, 3)) == L(2, 5));
  CHECK(scale_label(L(3, 1)) == L(6, 4));
  for (const auto& l : eigenfree_labels()) {
    CHECK(scale_label(l).is_eigenfree());
    CHECK(scale_label(l) != l);
    CHECK(scale_label(scale_label(scale_label(l))) == l);
    CHECK(class_label(Fp(2) * representative(l)) == scale_label(l));
  }
  CHECK(kind_of([] { scale_label(L(3, 3)); }) == ErrorKind::NotEigenfree);
}

TEST_CASE("inverse_label") {
  CHECK(inverse_label(L(0, 2)) == L(2, 0));
  CHECK(inverse_label(L(3, 4)) == L(4, 3));
  CHECK(kind_of([] { inverse_label(L(3, 3)); }) == ErrorKind::NotEigenfree);
  for (const auto& l : eigenfree_labels()) {
    CHECK(inverse_label(inverse_label(l)) == l);
    CHECK(class_label(inverse(representative(l))) == inverse_label(l));
  }
}

TEST_CASE("power_class_map examples") {
  CHECK(power_class_map(L(0, 2), 2) == L(3, 4));
  CHECK(power_class_map(L(0, 2), 7) == L(0, 2));
  CHECK(power_class_map(L(3, 4), 2) == L(1, 3));
}

TEST_CASE("power_class_map errors") {
  CHECK(kind_of([] { power_class_map(L(0, 2), 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { power_class_map(L(0, 2), 57); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { power_class_map(L(0, 2), 19); }) == ErrorKind::PowerLeavesEigenfreeSet);
  CHECK(kind_of([] { power_class_map(L(0, 4), 38); }) == ErrorKind::PowerLeavesEigenfreeSet);
  CHECK(kind_of([] { power_class_map(L(3, 3), 2); }) == ErrorKind::NotEigenfree);
}

TEST_CASE("power_class_map is independent of the representative") {
  std::mt19937_64 rng(21);
  for (const auto& l : eigenfree_labels()) {
    const Mat3 g = random_sl3(rng);
    const Mat3 m = g * representative(l) * inverse(g);
    for (int k = 1; k <= 56; ++k) {
      const Mat3 p = m.pow(static_cast<std::uint64_t>(k));
      if (p.is_scalar() || has_fp_eigenvalue(p)) {
        CHECK_THROWS_AS(power_class_map(l, k), Error);
      } else {
        CHECK(power_class_map(l, k) == class_label(p));
      }
    }
  }
}

TEST_CASE("power maps: cycles, Frobenius and inversion") {
  const std::vector<ClassLabel> cycle = {L(3, 4), L(1, 3), L(2, 0), L(4, 3), L(3, 1), L(0, 2)};
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    CHECK(power_class_map(cycle[k], 2) == cycle[(k + 1) % 6]);
    CHECK(power_class_map(cycle[k], 11) == cycle[k]);
    CHECK(power_class_map(cycle[k], 18) == inverse_label(cycle[k]));
    CHECK(power_class_map(cycle[k], 4) == cycle[(k + 2) % 6]);
  }
  for (const auto& l : eigenfree_labels()) {
    CHECK(power_class_map(l, 7) == l);
    CHECK(power_class_map(l, 49) == l);
    CHECK(power_class_map(l, 56) == inverse_label(l));
  }
}

TEST_CASE("order_of_label") {
  CHECK(order_of_label(L(0, 2)) == 19);
  CHECK(order_of_label(L(0, 4)) == 57);
  CHECK(order_of_label(L(4, 3)) == 19);
  CHECK(kind_of([] { order_of_label(L(3, 3)); }) == ErrorKind::NotEigenfree);
  std::set<ClassLabel> nineteen;
  for (const auto& l : eigenfree_labels()) {
    const int n = order_of_label(l);
    CHECK((n == 19 || n == 57));
    CHECK(mat_order(representative(l)) == static_cast<std::uint64_t>(n));
    if (n == 19) nineteen.insert(l);
  }
  CHECK(nineteen == std::set<ClassLabel>{L(0, 2), L(1, 3), L(2, 0), L(3, 1), L(3, 4), L(4, 3)});
}

TEST_CASE("representative is the least code with the label") {
  for (const auto& l : eigenfree_labels()) {
    const Mat3 r = representative(l);
    CHECK(det(r) == Fp(1));
    CHECK(class_label(r) == l);
  }
  // Brute force for one label over the low codes.
  const Mat3 r = representative(L(0, 4));
  for (std::uint32_t c = 0; c < encode(r).value; ++c) {
    const Mat3 m = decode(MatCode{c});
    if (det(m) != Fp(1)) continue;
    const auto cp = char_poly(m);
    REQUIRE_FALSE((cp.trace == Fp(0) && cp.minors == Fp(4)));
  }
  CHECK(kind_of([] { representative(L(3, 3)); }) == ErrorKind::NotEigenfree);
}

TEST_CASE("catalog") {
  const auto& cat = catalog();
  CHECK(cat.labels == eigenfree_labels());
  int nineteen = 0;
  for (const auto& l : cat.labels) {
    CHECK(cat.order_of.at(l) == order_of_label(l));
    nineteen += cat.order_of.at(l) == 19;
    CHECK(cat.labels[cat.index_of(l)] == l);
    CHECK(eigenfree_index(l.i, l.j) == static_cast<int>(cat.index_of(l)));
  }
  CHECK(nineteen == 6);
  CHECK(eigenfree_index(Fp(3), Fp(3)) == -1);
}

TEST_CASE("psl_label") {
  CHECK(psl_label(L(0, 4)) == L(0, 1));
  std::map<ClassLabel, int> orbit_sizes;
  for (const auto& l : eigenfree_labels()) {
    const ClassLabel p = psl_label(l);
    CHECK(psl_label(p) == p);
    CHECK(p <= l);
    ++orbit_sizes[p];
  }
  CHECK(orbit_sizes.size() == 6);
  for (const auto& [p, n] : orbit_sizes) CHECK(n == 3);
}

TEST_CASE("paper fixtures") {
  CHECK(known::rep_04() == kM0);
  CHECK(known::rep_02() == kM2);
  CHECK(class_label(known::rep_10()) == L(1, 0));
  CHECK(class_label(known::rep_13()) == L(1, 3));
  CHECK(class_label(known::rep_15()) == L(1, 5));
  CHECK(class_label(known::rep_62()) == L(6, 2));
  CHECK(known::rep_10().pow(19) == Mat3::scalar(Fp(4)));
  CHECK(known::rep_15().pow(19) == Mat3::scalar(Fp(2)));
  CHECK(known::rep_62().pow(19) == Mat3::scalar(Fp(2)));
  CHECK(mat_order(known::rep_62()) == 57);
}

TEST_CASE("printed [-1,4] representative is not in SL3") {
  const Mat3 printed{0, 2, 3, 0, 1, -1, 1, 0, 0};
  CHECK(det(printed) == Fp(2));
  CHECK(printed.trace() == Fp(1));
  CHECK(kind_of([&] { class_label(printed); }) == ErrorKind::NotInSL3);
  CHECK(order_of_label(L(6, 4)) == 57);
}

TEST_CASE("labels are conjugation invariant") {
  std::mt19937_64 rng(22);
  const auto labels = eigenfree_labels();
  for (int n = 0; n < 1000; ++n) {
    const ClassLabel& l = labels[static_cast<std::size_t>(n) % labels.size()];
    const Mat3 g = random_sl3(rng);
    REQUIRE(class_label(g * representative(l) * inverse(g)) == l);
  }
}
