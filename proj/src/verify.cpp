#include "sl3f7/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "sl3f7/classify.hpp"
#include "sl3f7/error.hpp"
#include "sl3f7/serialize.hpp"
#include "sl3f7/subgroups.hpp"

namespace sl3f7 {

namespace {

constexpr std::uint64_t kClassSize = 98784;        // 2⁵·3²·7³
constexpr std::uint64_t kEigenfreeTotal = 1778112;  // 2⁶·3⁴·7³
constexpr std::uint64_t kWideTrace = 296352;
constexpr std::uint64_t kNarrowTrace = 197568;
constexpr std::uint64_t kSylow19 = 32928;  // 2⁵·3·7³
constexpr std::uint64_t kOrder19Elements = 592704;
constexpr std::uint64_t kNormalizer = 171;
constexpr double kGroupScanBudget = 60.0;
constexpr double kLongRunBudget = 300.0;

constexpr std::uint64_t kSimconjSeed = 0x51c0'2026;
constexpr std::uint64_t kReductionSeed = 0x7ed0'2026;
constexpr std::uint64_t kWitnessSeed = 0x3a11'2026;
constexpr std::size_t kSimconjPairs = 50;
constexpr std::size_t kReductionSamples = 1000;
constexpr std::size_t kWitnessSamples = 100;

ClassLabel L(int i, int j) { return ClassLabel{Fp(i), Fp(j)}; }

const std::vector<ClassLabel>& expected_labels() {
  static const std::vector<ClassLabel> v = {L(0, 1), L(0, 2), L(0, 4), L(1, 0), L(1, 3), L(1, 5),
                                            L(2, 0), L(2, 5), L(2, 6), L(3, 1), L(3, 4), L(4, 0),
                                            L(4, 3), L(4, 6), L(5, 1), L(5, 2), L(6, 2), L(6, 4)};
  return v;
}

const std::set<ClassLabel>& order19_labels() {
  static const std::set<ClassLabel> s = {L(0, 2), L(1, 3), L(2, 0), L(3, 1), L(3, 4), L(4, 3)};
  return s;
}

// Reference power tables: trace and class columns.
const std::vector<int> kM2Traces = {0, 3, 3, 1, 4, 1, 0, 2, 1, 3, 0, 2, 3, 3, 3, 4, 4, 2, 3, 0};
const std::vector<std::string> kM2Classes = {"[0,2]", "[3,4]", "[3,4]", "[1,3]", "[4,3]", "[1,3]", "[0,2]",
                                             "[2,0]", "[1,3]", "[3,1]", "[0,2]", "[2,0]", "[3,1]", "[3,4]",
                                             "[3,1]", "[4,3]", "[4,3]", "[2,0]", "identity", "[0,2]"};
const std::vector<std::string> kTraceOneClasses = {"[1,3]", "[2,0]", "[2,0]", "[4,3]", "[0,2]", "[4,3]", "[1,3]",
                                                   "[3,1]", "[4,3]", "[3,4]", "[1,3]", "[3,1]", "[3,4]", "[2,0]",
                                                   "[3,4]", "[0,2]", "[0,2]", "[3,1]", "identity", "[1,3]"};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << " = " << got << ", expected " << want;
      failures_.push_back(os.str());
    }
  }
  bool ok() const { return failures_.empty(); }
  std::string failures() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

std::string describe(const Check& c, const std::string& summary) { return c.ok() ? summary : c.failures(); }

struct Context {
  Suite suite;
  ScanOptions options;
  std::optional<ScanSummary> census;

  const ScanSummary& summary() {
    if (!census) census = sl3f7::census(options);
    return *census;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

CriterionResult c1_group_order(Context& ctx) {
  Check c;
  const auto t0 = Clock::now();
  const std::uint64_t n = count_sl3(kFullRange, ctx.options);
  const double elapsed = seconds_since(t0);
  c.equal(n, kSL3Order, "|SL3(F7)|");
  c.expect(elapsed <= kGroupScanBudget, "group scan exceeded 60 s");
  const std::uint64_t gl = count_invertible(kFullRange, ctx.options);
  c.equal(gl, kGL3Order, "|GL3(F7)|");
  c.equal(gl, 6 * n, "|GL3| / |SL3| * 6");
  return {1, "group order", c.ok(), describe(c, "|SL3(F7)| = 5630688, |GL3(F7)| = 33784128"), 0.0};
}

CriterionResult c2_census(Context& ctx) {
  Check c;
  const auto& s = ctx.summary();
  c.equal(s.group_order, kSL3Order, "group_order");
  c.equal(s.eigenfree_total, kEigenfreeTotal, "eigenfree_total");
  for (int t = 0; t < kPrime; ++t) {
    const bool wide = t == 0 || t == 1 || t == 2 || t == 4;
    c.equal(s.by_trace[static_cast<std::size_t>(t)], wide ? kWideTrace : kNarrowTrace,
            "by_trace[" + std::to_string(t) + "]");
  }
  std::uint64_t sum = 0;
  for (auto v : s.all_by_trace) sum += v;
  c.equal(sum, kSL3Order, "sum of all_by_trace");
  return {2, "eigenfree census", c.ok(),
          describe(c, "1778112 eigenvector-free; traces 0,1,2,4 -> 296352; traces 3,5,6 -> 197568"), 0.0};
}

CriterionResult c3_labels(Context& ctx) {
  Check c;
  const auto labels = eigenfree_labels();
  c.equal(labels.size(), kEigenfreeLabelCount, "label count");
  c.expect(labels == expected_labels(), "label list differs from the reference list");
  c.expect(std::find(labels.begin(), labels.end(), L(1, 5)) != labels.end(), "[1,5] missing");
  c.expect(std::find(labels.begin(), labels.end(), L(1, 6)) == labels.end(), "[1,6] present");
  const auto& s = ctx.summary();
  c.equal(s.by_label.size(), kEigenfreeLabelCount, "census label count");
  for (const auto& [l, n] : s.by_label) c.equal(n, kClassSize, "count of " + to_string(l));
  return {3, "label catalog", c.ok(), describe(c, "18 labels incl. [1,5] not [1,6]; each has 98784 matrices"), 0.0};
}

CriterionResult c4_orders(Context&) {
  Check c;
  const auto& cat = catalog();
  for (const auto& l : cat.labels) {
    const int want = order19_labels().contains(l) ? 19 : 57;
    c.equal(order_of_label(l), want, "order_of_label" + to_string(l));
    c.equal(mat_order(representative(l)), static_cast<std::uint64_t>(want), "mat_order(rep " + to_string(l) + ")");
  }
  c.expect(known::rep_04().pow(19) == Mat3::scalar(Fp(4)), "M0^19 != 4I");
  c.expect(known::rep_10().pow(19) == Mat3::scalar(Fp(4)), "[1,0] representative ^19 != 4I");
  return {4, "orders", c.ok(), describe(c, "6 labels of order 19, 12 of order 57; M0^19 = 4I; [1,0]^19 = 4I"), 0.0};
}

CriterionResult c5_eigenvalue_orders(Context&) {
  Check c;
  const Ext one(Fp(1));
  for (const auto& l : {L(0, 2), L(4, 3), L(3, 1), L(1, 3)}) {
    const auto roots = cubic_roots_ext(l.cubic());
    c.equal(roots.size(), std::size_t{3}, "root count of " + to_string(l));
    for (const auto& r : roots) {
      c.expect(r.pow(19) == one, to_string(l) + " root^19 != 1");
      c.expect(r != one, to_string(l) + " root equals 1");
      c.expect(r.pow(21) == r.pow(2), to_string(l) + " root^21 != root^2");
    }
  }
  return {5, "eigenvalue orders", c.ok(), describe(c, "roots of [0,2],[4,3],[3,1],[1,3] satisfy r^19 = 1, r != 1"), 0.0};
}

CriterionResult c6_centralizer(Context& ctx) {
  Check c;
  const Mat3 m0 = known::rep_04();
  const auto rep = centralizer(m0, ctx.options);
  c.equal(rep.size, std::uint64_t{57}, "|C(M0)|");
  c.expect(rep.is_cyclic, "C(M0) not cyclic");
  std::vector<MatCode> powers;
  Mat3 p = Mat3::identity();
  for (int k = 0; k < 57; ++k, p = p * m0) powers.push_back(encode(p));
  std::sort(powers.begin(), powers.end());
  c.expect(rep.elements == powers, "C(M0) != powers of M0");
  if (rep.generator) {
    std::vector<MatCode> gen_powers;
    Mat3 q = Mat3::identity();
    for (int k = 0; k < 57; ++k, q = q * *rep.generator) gen_powers.push_back(encode(q));
    std::sort(gen_powers.begin(), gen_powers.end());
    c.expect(gen_powers == rep.elements, "reported generator does not reproduce C(M0)");
  }
  std::vector<MatCode> commutant;
  for (int a = 0; a < kPrime; ++a)
    for (int b = 0; b < kPrime; ++b)
      for (int d = 0; d < kPrime; ++d) {
        const Mat3 s = trace_zero_commutant(Fp(a), Fp(b), Fp(d));
        if (det(s) == Fp(1)) commutant.push_back(encode(s));
      }
  std::sort(commutant.begin(), commutant.end());
  c.expect(commutant == rep.elements, "det-1 commutant family != C(M0)");
  std::size_t solutions = 0;
  for (const auto& row : commutant_solution_table()) solutions += row.solutions.size();
  c.equal(solutions, std::size_t{57}, "(b,d) table solutions");
  return {6, "centralizer of M0", c.ok(), describe(c, "57 elements, cyclic, = powers of M0; (b,d) table has 57 solutions"),
          0.0};
}

CriterionResult c7_conjugacy(Context& ctx) {
  Check c;
  const auto& cat = catalog();
  for (const auto& l : cat.labels) {
    c.equal(class_size(representative(l), ctx.options), kClassSize, "class_size(rep " + to_string(l) + ")");
  }
  std::vector<ClassLabel> orbit_labels = {L(0, 4), L(0, 2)};
  if (ctx.suite == Suite::Full) {
    for (const auto& l : cat.labels) {
      if (l != L(0, 4) && l != L(0, 2)) orbit_labels.push_back(l);
    }
  }
  for (const auto& l : orbit_labels) {
    const Mat3 start = l == L(0, 4) ? known::rep_04() : l == L(0, 2) ? known::rep_02() : representative(l);
    const auto t0 = Clock::now();
    const auto orbit = orbit_oracle(start, ctx.options);
    c.expect(seconds_since(t0) <= kLongRunBudget, "orbit oracle for " + to_string(l) + " exceeded 5 min");
    c.equal(orbit.size(), kClassSize, "|orbit " + to_string(l) + "|");
    c.expect(orbit == codes_with_label(l, ctx.options), "orbit of " + to_string(l) + " != label set");
  }
  return {7, "conjugacy classes", c.ok(),
          describe(c, "class size 98784 for all 18; orbit = label set for " + std::to_string(orbit_labels.size()) +
                          " labels"),
          0.0};
}

CriterionResult c8_power_tables(Context&) {
  Check c;
  const auto m2 = power_table(known::rep_02(), 20);
  for (std::size_t k = 0; k < m2.size(); ++k) {
    c.equal(m2[k].trace.value(), kM2Traces[k], "[0,2] table trace row " + std::to_string(k + 1));
    c.equal(row_label_text(m2[k]), kM2Classes[k], "[0,2] table class row " + std::to_string(k + 1));
  }
  const auto t1 = power_table(known::rep_13(), 20);
  for (std::size_t k = 0; k < t1.size(); ++k) {
    c.equal(row_label_text(t1[k]), kTraceOneClasses[k], "trace-1 table class row " + std::to_string(k + 1));
  }
  return {8, "power tables", c.ok(), describe(c, "[0,2] and trace-1 tables reproduce 20 rows each"), 0.0};
}

CriterionResult c9_power_maps(Context&) {
  Check c;
  const std::vector<ClassLabel> six_cycle = {L(3, 4), L(1, 3), L(2, 0), L(4, 3), L(3, 1), L(0, 2)};
  for (std::size_t k = 0; k < six_cycle.size(); ++k) {
    const auto& from = six_cycle[k];
    const auto& to = six_cycle[(k + 1) % six_cycle.size()];
    c.expect(power_class_map(from, 2) == to, "square of " + to_string(from));
    c.expect(power_class_map(from, 18) == inverse_label(from), "power 18 of " + to_string(from));
  }
  // 11 = 7² only modulo 19; for order 57 the Frobenius square is 49.
  for (const auto& l : catalog().labels) {
    c.expect(power_class_map(l, 7) == l, "power 7 of " + to_string(l));
    if (order19_labels().contains(l)) {
      c.expect(power_class_map(l, 11) == l, "power 11 of " + to_string(l));
    } else {
      c.expect(power_class_map(l, 49) == l, "power 49 of " + to_string(l));
      c.expect(power_class_map(l, 11) != l, "power 11 fixes order-57 label " + to_string(l));
    }
  }
  const std::vector<std::vector<ClassLabel>> three_cycles = {{L(3, 4), L(2, 0), L(3, 1)}, {L(1, 3), L(4, 3), L(0, 2)}};
  for (const auto& cyc : three_cycles) {
    for (std::size_t k = 0; k < 3; ++k) {
      c.expect(power_class_map(cyc[k], 4) == cyc[(k + 1) % 3], "power 4 of " + to_string(cyc[k]));
    }
  }
  return {9, "power-map bijections", c.ok(), describe(c, "x^2 six-cycle, x^7 = id on all 18, x^11 = id on order 19 (x^49 on order 57), x^18 = inverse, x^4 two 3-cycles"),
          0.0};
}

CriterionResult c10_sylow(Context& ctx) {
  Check c;
  const std::uint64_t elements = order19_element_count(ctx.options);
  c.equal(elements, kOrder19Elements, "order-19 elements");
  c.equal(elements, 18 * kSylow19, "18 * n19");
  c.equal(elements, 6 * kClassSize, "6 * class size");
  std::uint64_t n = 0;
  try {
    n = sylow19_count(ctx.options);
  } catch (const Error& e) {
    c.expect(false, e.what());
  }
  c.equal(n, kSylow19, "n19");
  c.equal(n % 19, std::uint64_t{1}, "n19 mod 19");
  return {10, "Sylow 19-subgroups", c.ok(), describe(c, "n19 = 32928 = 1 mod 19; 592704 elements of order 19"), 0.0};
}

CriterionResult c11_normalizer(Context& ctx) {
  Check c;
  const std::uint64_t n = normalizer_of_cyclic(known::rep_02(), ctx.options);
  c.equal(n, kNormalizer, "|N(<M2>)|");
  c.equal(n % 57, std::uint64_t{0}, "|N| mod 57");
  c.equal(kSL3Order / n, kSylow19, "index of the normalizer");
  return {11, "normalizer", c.ok(), describe(c, "|N(<M2>)| = 171 = 9 * 19"), 0.0};
}

CriterionResult c12_order_absence(Context& ctx) {
  Check c;
  c.expect(order_absence_check(9, ctx.options), "an element of order 9 exists");
  c.expect(order_absence_check(27, ctx.options), "an element of order 27 exists");
  c.expect(!order_absence_check(3, ctx.options), "no element of order 3 found");
  return {12, "no elements of order 9 or 27", c.ok(), describe(c, "orders 9 and 27 absent; order 3 present"), 0.0};
}

CriterionResult c13_commuting_reps(Context&) {
  Check c;
  const auto reps = eighteen_commuting_reps();
  c.equal(reps.reps.size(), kEigenfreeLabelCount, "labels covered");
  std::size_t total = 0;
  for (const auto& [l, ks] : reps.powers_by_label) {
    c.equal(ks.size(), std::size_t{3}, "powers in " + to_string(l));
    total += ks.size();
  }
  c.equal(total, std::size_t{54}, "non-scalar powers");
  c.expect(reps.exponent.at(L(0, 4)) == 1, "[0,4] not represented by M0 itself");
  for (const auto& [l1, m1] : reps.reps) {
    for (const auto& [l2, m2] : reps.reps) c.expect(m1 * m2 == m2 * m1, "reps do not commute");
    c.expect(class_label(m1) == l1, "rep label mismatch");
  }
  return {13, "commuting representatives", c.ok(), describe(c, "18 labels from powers of M0; 54 powers split 18 x 3"), 0.0};
}

CriterionResult c14_simconj(Context& ctx) {
  Check c;
  std::mt19937_64 rng(kSimconjSeed);
  const auto pairs = random_tuple_pairs(kSimconjPairs, rng);
  std::size_t equivalent = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& p = pairs[k];
    const auto a1 = analyze_tuple(p.first);
    const auto a2 = analyze_tuple(p.second);
    const auto* t1 = std::get_if<CommutingTuple>(&a1);
    const auto* t2 = std::get_if<CommutingTuple>(&a2);
    if (!t1 || !t2) {
      c.expect(false, "pair " + std::to_string(k) + " did not analyze to commuting tuples");
      continue;
    }
    const auto verdict = decide_simconj(*t1, *t2, ctx.options);
    const bool oracle = brute_force_simconj(p.first, p.second, ctx.options);
    c.expect(verdict.equivalent == oracle, "pair " + std::to_string(k) + " disagrees with the oracle");
    if (p.conjugate_by_construction) c.expect(verdict.equivalent, "pair " + std::to_string(k) + " conjugate but rejected");
    if (verdict.equivalent) {
      ++equivalent;
      c.expect(verdict.witness.has_value(), "pair " + std::to_string(k) + " has no witness");
      if (verdict.witness) {
        const Mat3 g = *verdict.witness;
        const Mat3 gi = inverse(g);
        for (std::size_t m = 0; m < p.first.size(); ++m) {
          c.expect(g * p.first[m] * gi == p.second[m], "pair " + std::to_string(k) + " witness fails");
        }
      }
    }
  }
  return {14, "simultaneous conjugacy", c.ok(),
          describe(c, std::to_string(pairs.size()) + " pairs agree with the brute-force oracle (" +
                          std::to_string(equivalent) + " equivalent, witnesses verified)"),
          0.0};
}

CriterionResult c15_subgroups(Context& ctx) {
  Check c;
  const std::uint64_t h = parabolic_size();
  c.equal(h, kClassSize, "|H|");
  c.equal(h, std::uint64_t{(49 - 1) * (49 - 7) * 49}, "(7^2-1)(7^2-7)7^2");
  c.equal(h * 57, kSL3Order, "57 |H|");
  c.equal(generator_closure(parabolic_generators()), kClassSize, "closure of the H generators");

  std::mt19937_64 rng(kReductionSeed);
  std::size_t verified = 0;
  while (verified < kReductionSamples) {
    const Mat3 a = random_sl3(rng);
    if (in_parabolic(a)) continue;
    c.expect(reduce_to_generator(a, ReductionTarget::Y).verify(), "reduction to Y failed for " + format_matrix(a));
    c.expect(reduce_to_generator(a, ReductionTarget::Z).verify(), "reduction to Z failed for " + format_matrix(a));
    ++verified;
  }
  std::string summary = "|H| = 98784 = 5630688 / 57; 1000 reductions to Y and Z verified";
  if (ctx.suite == Suite::Full) {
    const auto t0 = Clock::now();
    c.equal(generator_closure(default_generators()), kSL3Order, "|<X,Y,Z>|");
    c.expect(seconds_since(t0) <= kLongRunBudget, "closure exceeded 5 min");

    std::mt19937_64 wrng(kWitnessSeed);
    std::size_t witnessed = 0;
    while (witnessed < kWitnessSamples) {
      const Mat3 a = random_sl3(wrng);
      if (in_parabolic(a)) continue;
      GeneratorSet gens = parabolic_generators();
      gens.gens.push_back(a);
      c.equal(generator_closure(gens), kSL3Order, "|<H, A>| for " + format_matrix(a));
      ++witnessed;
    }
    summary += "; <X,Y,Z> = SL3(F7); <H, A> = SL3(F7) for 100 samples";
  }
  return {15, "parabolic subgroup", c.ok(), describe(c, summary), 0.0};
}

CriterionResult c16_psl(Context&) {
  Check c;
  std::map<ClassLabel, std::vector<ClassLabel>> orbits;
  for (const auto& l : catalog().labels) orbits[psl_label(l)].push_back(l);
  c.equal(orbits.size(), std::size_t{6}, "PSL classes");
  for (const auto& [p, members] : orbits) {
    c.equal(members.size(), std::size_t{3}, "orbit size of " + to_string(p));
    c.expect(psl_label(p) == p, "psl_label not idempotent at " + to_string(p));
  }
  return {16, "PSL collapse", c.ok(), describe(c, "18 labels collapse to 6 classes of 3"), 0.0};
}

}  // namespace

Mat3 random_sl3(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, MatCode::kCount - 1);
  for (;;) {
    const Mat3 m = decode(MatCode{dist(rng)});
    if (det(m) == Fp(1)) return m;
  }
}

Mat3 random_eigenfree(std::mt19937_64& rng) {
  for (;;) {
    const Mat3 m = random_sl3(rng);
    if (!has_fp_eigenvalue(m)) return m;
  }
}

bool brute_force_simconj(const std::vector<Mat3>& a, const std::vector<Mat3>& b, const ScanOptions& options) {
  if (a.size() != b.size()) return false;
  std::size_t pivot = a.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_scalar()) {
      pivot = k;
      break;
    }
  }
  if (pivot == a.size()) return a == b;
  const auto g0 = find_conjugator(a[pivot], b[pivot], options);
  if (!g0) return false;
  const auto cent = centralizer(a[pivot], options);
  if (cent.elements.size() != cent.size) {
    throw Error(ErrorKind::InvalidArgument, "brute-force oracle needs a small centralizer");
  }
  for (MatCode code : cent.elements) {
    const Mat3 g = *g0 * decode(code);
    const Mat3 gi = inverse(g);
    bool all = true;
    for (std::size_t k = 0; k < a.size() && all; ++k) all = g * a[k] * gi == b[k];
    if (all) return true;
  }
  return false;
}

std::vector<TuplePair> random_tuple_pairs(std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length_dist(1, 4);
  std::uniform_int_distribution<int> exp_dist(1, 56);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<TuplePair> out;
  while (out.size() < count) {
    Mat3 base = random_eigenfree(rng);
    if (mat_order(base) != 57) base = Fp(2) * base;
    const int len = length_dist(rng);
    std::vector<int> exps;
    for (int k = 0; k < len; ++k) {
      int e = exp_dist(rng);
      while (e % 19 == 0) e = exp_dist(rng);
      exps.push_back(e);
    }
    TuplePair pair;
    pair.conjugate_by_construction = coin(rng) == 1;
    std::vector<int> second = exps;
    if (!pair.conjugate_by_construction) {
      std::uniform_int_distribution<std::size_t> pick(0, exps.size() - 1);
      const std::size_t at = pick(rng);
      // Half the time stay inside the same class (Frobenius twist), half
      // the time move anywhere.
      if (coin(rng) == 1) {
        second[at] = second[at] * 7 % 57;
      } else {
        int e = exp_dist(rng);
        while (e % 19 == 0) e = exp_dist(rng);
        second[at] = e;
      }
    }
    const Mat3 h = random_sl3(rng);
    const Mat3 hi = inverse(h);
    for (std::size_t k = 0; k < exps.size(); ++k) {
      pair.first.push_back(base.pow(static_cast<std::uint64_t>(exps[k])));
      pair.second.push_back(h * base.pow(static_cast<std::uint64_t>(second[k])) * hi);
    }
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<CriterionResult> run_acceptance(Suite suite, const ScanOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  using Runner = CriterionResult (*)(Context&);
  static constexpr Runner kRunners[] = {c1_group_order, c2_census,      c3_labels,       c4_orders,
                                        c5_eigenvalue_orders, c6_centralizer, c7_conjugacy,    c8_power_tables,
                                        c9_power_maps, c10_sylow,       c11_normalizer, c12_order_absence,
                                        c13_commuting_reps, c14_simconj, c15_subgroups, c16_psl};
  Context ctx{suite, options, std::nullopt};
  std::vector<CriterionResult> results;
  for (Runner run : kRunners) {
    const auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = run(ctx);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (r.id == 0) r.id = static_cast<int>(results.size()) + 1;
    r.elapsed_seconds = seconds_since(t0);
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name << ": " << r.detail;
  return os.str();
}

}  // namespace sl3f7
