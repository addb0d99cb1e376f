#include <doctest.h>

#include <random>
#include <set>

#include "sl3f7/classify.hpp"
#include "sl3f7/error.hpp"
#include "sl3f7/scan.hpp"
#include "sl3f7/simconj.hpp"
#include "sl3f7/verify.hpp"

using namespace sl3f7;

namespace {

ClassLabel L(int i, int j) { return ClassLabel{Fp(i), Fp(j)}; }

const Mat3 kM0{0, 1, 3, 0, 0, 1, 1, 0, 0};
const Mat3 kM2{0, 2, 6, 0, 0, 2, 2, 0, 0};
const Mat3 kY{0, 1, 0, 0, 0, 1, 1, 0, 0};

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

CommutingTuple commuting(const std::vector<Mat3>& ms) {
  auto a = analyze_tuple(ms);
  REQUIRE(std::holds_alternative<CommutingTuple>(a));
  return std::get<CommutingTuple>(a);
}

bool equivalent(const std::vector<Mat3>& a, const std::vector<Mat3>& b) {
  return decide_simconj(commuting(a), commuting(b)).equivalent;
}

std::vector<Mat3> conjugate(const std::vector<Mat3>& ms, const Mat3& g) {
  const Mat3 gi = inverse(g);
  std::vector<Mat3> out;
  for (const auto& m : ms) out.push_back(g * m * gi);
  return out;
}

void check_members(const CommutingTuple& t) {
  for (std::size_t k = 0; k < t.members.size(); ++k) {
    CHECK(t.members[k] == t.base.pow(static_cast<std::uint64_t>(t.exponents[k])));
    CHECK(t.exponents[k] >= 0);
    CHECK(t.exponents[k] < 57);
  }
  CHECK(mat_order(t.base) == 57);
}

}  // namespace

TEST_CASE("analyze_tuple: powers of M0") {
  const auto t = commuting({kM0, kM0.pow(20), kM0.pow(5)});
  CHECK(t.base == kM0);
  CHECK(t.exponents == std::vector<int>{1, 20, 5});
  CHECK(t.length == 3);
  check_members(t);
}

TEST_CASE("analyze_tuple: M2 and 2M2 share an order-57 base") {
  const auto t = commuting({kM2, Fp(2) * kM2});
  check_members(t);
  CHECK(t.members.size() == 2);
}

TEST_CASE("analyze_tuple: scalars are stripped and recorded") {
  const auto t = commuting({Mat3::scalar(Fp(2)), kM0, Mat3::identity(), kM0.pow(2)});
  CHECK(t.members.size() == 2);
  CHECK(t.positions == std::vector<std::size_t>{1, 3});
  CHECK(t.scalars == std::vector<ScalarSlot>{{0, Fp(2)}, {2, Fp(1)}});
  CHECK(t.length == 4);
  check_members(t);
}

TEST_CASE("analyze_tuple: eigenvector tuples and errors") {
  const Mat3 u1{1, 1, 0, 0, 1, 0, 0, 0, 1}, u2{1, 2, 0, 0, 1, 0, 0, 0, 1};
  const auto a = analyze_tuple({u1, u2});
  CHECK(std::holds_alternative<AllEigen>(a));
  CHECK(kind_of([&] { analyze_tuple({kM0, kY}); }) == ErrorKind::NotCommuting);
  CHECK(kind_of([] { analyze_tuple({}); }) == ErrorKind::EmptyAfterScalarStrip);
  CHECK(kind_of([] { analyze_tuple({Mat3::identity(), Mat3::scalar(Fp(4))}); }) ==
        ErrorKind::EmptyAfterScalarStrip);
  CHECK(kind_of([] { analyze_tuple({Fp(3) * kM0}); }) == ErrorKind::NotInSL3);
}

TEST_CASE("analyze_tuple never rejects powers plus scalars") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> e(1, 56), s(0, 3);
  for (int n = 0; n < 100; ++n) {
    const Mat3 m = random_eigenfree(rng);
    std::vector<Mat3> ms;
    for (int k = 0; k < 4; ++k) {
      const int x = e(rng);
      ms.push_back(s(rng) == 0 ? Mat3::scalar(Fp(x % 3 == 0 ? 1 : x % 3 == 1 ? 2 : 4)) : m.pow(static_cast<std::uint64_t>(x)));
    }
    bool any_nonscalar = false;
    for (const auto& x : ms) any_nonscalar |= !x.is_scalar();
    if (!any_nonscalar) continue;
    const auto a = analyze_tuple(ms);
    REQUIRE(std::holds_alternative<CommutingTuple>(a));
    check_members(std::get<CommutingTuple>(a));
  }
}

TEST_CASE("eigenfree_centralizer agrees with the scan") {
  for (const auto& l : eigenfree_labels()) {
    const Mat3 r = representative(l);
    const auto fast = eigenfree_centralizer(r);
    std::vector<MatCode> codes;
    for (const auto& m : fast) codes.push_back(encode(m));
    CHECK(std::is_sorted(codes.begin(), codes.end()));
    CHECK(codes == centralizer(r).elements);
  }
}

TEST_CASE("decide_simconj examples") {
  std::mt19937_64 rng(52);
  const Mat3 g = random_sl3(rng);
  const std::vector<Mat3> t1 = {kM0, kM0.pow(5)};
  const auto v = decide_simconj(commuting(t1), commuting(conjugate(t1, g)));
  CHECK(v.equivalent);
  REQUIRE(v.witness.has_value());
  const auto image = conjugate(t1, *v.witness);
  CHECK(image == conjugate(t1, g));

  const auto no = decide_simconj(commuting(t1), commuting({kM0, kM0.pow(10)}));
  CHECK_FALSE(no.equivalent);
  CHECK(no.certificate.has_value());

  for (const auto& l : eigenfree_labels()) {
    const Mat3 h = random_sl3(rng);
    CHECK(equivalent({representative(l)}, {h * representative(l) * inverse(h)}));
  }
  CHECK_FALSE(equivalent({kM0}, {Fp(2) * kM0}));
  CHECK(kind_of([&] { decide_simconj(commuting({kM0}), commuting({kM0, kM0})); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("decide_simconj with scalar slots") {
  std::mt19937_64 rng(53);
  const Mat3 g = random_sl3(rng);
  const std::vector<Mat3> t = {Mat3::scalar(Fp(2)), kM0, kM0.pow(4)};
  CHECK(equivalent(t, conjugate(t, g)));
  CHECK_FALSE(equivalent(t, {Mat3::scalar(Fp(4)), kM0, kM0.pow(4)}));
  CHECK_FALSE(equivalent(t, {kM0, Mat3::scalar(Fp(2)), kM0.pow(4)}));
}

TEST_CASE("decide_simconj is an equivalence relation on samples") {
  std::mt19937_64 rng(54);
  const auto pairs = random_tuple_pairs(12, rng);
  for (const auto& p : pairs) {
    const auto a = commuting(p.first), b = commuting(p.second);
    CHECK(decide_simconj(a, a).equivalent);
    CHECK(decide_simconj(a, b).equivalent == decide_simconj(b, a).equivalent);
    // Transitivity on a constructed triple: b ~ conj(b).
    const Mat3 h = random_sl3(rng);
    const auto c = commuting(conjugate(p.second, h));
    CHECK(decide_simconj(b, c).equivalent);
    CHECK(decide_simconj(a, c).equivalent == decide_simconj(a, b).equivalent);
  }
}

TEST_CASE("verdict does not depend on the base generator chosen") {
  std::mt19937_64 rng(55);
  const Mat3 m = kM0;
  const std::vector<Mat3> t = {m.pow(2), m.pow(7)};
  const Mat3 g = random_sl3(rng);
  const auto reference = decide_simconj(commuting(t), commuting(conjugate(t, g))).equivalent;
  for (int u : {1, 2, 5, 11, 55}) {
    // Reorder so that a different power becomes the first order-57 member.
    const std::vector<Mat3> s = {m.pow(static_cast<std::uint64_t>(u)), m.pow(2), m.pow(7)};
    const auto other = commuting(s);
    check_members(other);
    CHECK(decide_simconj(other, commuting(conjugate(s, g))).equivalent == reference);
  }
}

TEST_CASE("decide_simconj agrees with the brute-force oracle") {
  std::mt19937_64 rng(56);
  const auto pairs = random_tuple_pairs(20, rng);
  for (const auto& p : pairs) {
    const auto v = decide_simconj(commuting(p.first), commuting(p.second));
    CHECK(v.equivalent == brute_force_simconj(p.first, p.second));
    if (p.conjugate_by_construction) CHECK(v.equivalent);
    if (v.equivalent) {
      REQUIRE(v.witness.has_value());
      CHECK(conjugate(p.first, *v.witness) == p.second);
    }
  }
}

TEST_CASE("find_conjugator") {
  const auto self = find_conjugator(kM0, kM0);
  REQUIRE(self.has_value());
  CHECK(*self * kM0 * inverse(*self) == kM0);
  CHECK_FALSE(find_conjugator(kM0, Fp(2) * kM0).has_value());
  const Mat3 r = representative(L(0, 2));
  const auto g = find_conjugator(r, kM2);
  REQUIRE(g.has_value());
  CHECK(*g * r * inverse(*g) == kM2);
  ScanOptions four;
  four.threads = 4;
  CHECK(find_conjugator(r, kM2, four) == g);
}

TEST_CASE("eighteen commuting representatives") {
  const auto reps = eighteen_commuting_reps();
  CHECK(reps.reps.size() == 18);
  CHECK(reps.reps.at(L(0, 4)) == kM0);
  CHECK(reps.exponent.at(L(0, 4)) == 1);
  std::multiset<ClassLabel> seen;
  for (int k = 1; k <= 56; ++k) {
    if (k % 19 == 0) continue;
    seen.insert(class_label(kM0.pow(static_cast<std::uint64_t>(k))));
  }
  CHECK(seen.size() == 54);
  for (const auto& l : eigenfree_labels()) {
    CHECK(seen.count(l) == 3);
    const auto& ks = reps.powers_by_label.at(l);
    CHECK(ks.size() == 3);
    CHECK(reps.exponent.at(l) == ks.front());
    CHECK(reps.reps.at(l) == kM0.pow(static_cast<std::uint64_t>(ks.front())));
  }
  for (const auto& [a, ma] : reps.reps) {
    for (const auto& [b, mb] : reps.reps) CHECK(ma * mb == mb * ma);
  }
}
