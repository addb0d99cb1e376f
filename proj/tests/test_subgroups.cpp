#include <doctest.h>

#include <random>

#include "sl3f7/error.hpp"
#include "sl3f7/subgroups.hpp"
#include "sl3f7/verify.hpp"

using namespace sl3f7;

namespace {

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

TEST_CASE("generators") {
  CHECK(generator_x() == Mat3{1, 0, 1, 0, 6, 6, 0, 1, 0});
  CHECK(generator_y() == Mat3{0, 1, 0, 0, 0, 1, 1, 0, 0});
  CHECK(generator_z() == Mat3{0, 1, 0, 1, 0, 0, 6, 6, 6});
  for (const auto& g : default_generators().gens) CHECK(det(g) == Fp(1));
  for (const auto& g : parabolic_generators().gens) CHECK(in_parabolic(g));
}

TEST_CASE("in_parabolic") {
  CHECK(in_parabolic(Mat3::identity()));
  CHECK_FALSE(in_parabolic(kM0));
  CHECK(in_parabolic(generator_x()));
  CHECK_FALSE(in_parabolic(Mat3{2, 0, 0, 0, 1, 0, 0, 0, 1}));
}

TEST_CASE("parabolic size") {
  const auto h = parabolic_size();
  CHECK(h == 98784);
  CHECK(h == (49 - 1) * (49 - 7) * 49);
  CHECK(kSL3Order / h == 57);
  CHECK(kSL3Order % h == 0);
}

TEST_CASE("small closures") {
  CHECK(generator_closure(GeneratorSet{{kM2}}) == 19);
  CHECK(generator_closure(GeneratorSet{{kM0}}) == 57);
  CHECK(generator_closure(GeneratorSet{{generator_y()}}) == 3);
  CHECK(generator_closure(parabolic_generators()) == 98784);
  CHECK(kind_of([] { generator_closure(GeneratorSet{}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { generator_closure(GeneratorSet{{Mat3::scalar(Fp(3))}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("X, Y, Z generate SL3(F7)") { CHECK(generator_closure(default_generators()) == 5630688); }

TEST_CASE("maximality witness on a few samples") {
  std::mt19937_64 rng(41);
  for (int n = 0; n < 3;) {
    const Mat3 a = random_sl3(rng);
    if (in_parabolic(a)) continue;
    GeneratorSet gens = parabolic_generators();
    gens.gens.push_back(a);
    CHECK(generator_closure(gens) == 5630688);
    ++n;
  }
}

TEST_CASE("reduction examples") {
  for (auto target : {ReductionTarget::Y, ReductionTarget::Z}) {
    const Mat3 goal = target == ReductionTarget::Y ? generator_y() : generator_z();
    const auto self = reduce_to_generator(goal, target);
    CHECK(self.verify());
    CHECK(self.recompose() == goal);
    const auto t = reduce_to_generator(kM0, target);
    CHECK(t.verify());
    CHECK(t.start == kM0);
    CHECK(t.target == goal);
    for (const auto& s : t.steps) CHECK(in_parabolic(s.factor));
  }
  CHECK(kind_of([] { reduce_to_generator(Mat3::identity(), ReductionTarget::Y); }) == ErrorKind::InParabolic);
  CHECK(kind_of([] { reduce_to_generator(Fp(3) * kM0, ReductionTarget::Z); }) == ErrorKind::NotInSL3);
}

TEST_CASE("recompose applies left and right factors") {
  ReductionTrace t;
  t.start = kM0;
  const Mat3 l = generator_x(), r = Mat3{1, 1, 0, 0, 1, 0, 0, 0, 1};
  t.steps = {{Side::Left, l}, {Side::Right, r}};
  CHECK(t.recompose() == l * kM0 * r);
  t.target = l * kM0 * r;
  CHECK(t.verify());
  t.target = kM0;
  CHECK_FALSE(t.verify());
  t.target = kM0 * kM0;
  t.steps = {{Side::Right, kM0}};
  CHECK_FALSE(t.verify());
}

TEST_CASE("random reductions verify and are deterministic") {
  std::mt19937_64 rng(42);
  for (int n = 0; n < 1000;) {
    const Mat3 a = random_sl3(rng);
    if (in_parabolic(a)) continue;
    for (auto target : {ReductionTarget::Y, ReductionTarget::Z}) {
      const auto t = reduce_to_generator(a, target);
      REQUIRE(t.verify());
      const auto again = reduce_to_generator(a, target);
      REQUIRE(again.steps.size() == t.steps.size());
      for (std::size_t k = 0; k < t.steps.size(); ++k) REQUIRE(again.steps[k].factor == t.steps[k].factor);
    }
    ++n;
  }
}
