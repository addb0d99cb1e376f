#include "sl3f7/subgroups.hpp"

#include <deque>

#include "sl3f7/error.hpp"

namespace sl3f7 {

namespace {

// I + s·E(r,c).
Mat3 transvection(int row, int col, Fp s) {
  Mat3 t = Mat3::identity();
  t(row, col) = s;
  return t;
}

Mat3 diagonal(Fp a, Fp b, Fp c) {
  Mat3 d;
  d(0, 0) = a;
  d(1, 1) = b;
  d(2, 2) = c;
  return d;
}

class Reducer {
 public:
  Reducer(const Mat3& a, ReductionTarget target) {
    trace_.start = a;
    trace_.target = target == ReductionTarget::Y ? generator_y() : generator_z();
    cur_ = a;
  }

  Fp at(int r, int c) const { return cur_(r, c); }

  void left(const Mat3& f) {
    if (f == Mat3::identity()) return;
    cur_ = f * cur_;
    trace_.steps.push_back({Side::Left, f});
  }

  void right(const Mat3& f) {
    if (f == Mat3::identity()) return;
    cur_ = cur_ * f;
    trace_.steps.push_back({Side::Right, f});
  }

  ReductionTrace finish() {
    if (cur_ != trace_.target) throw Error(ErrorKind::InvalidArgument, "reduction did not reach its target");
    return std::move(trace_);
  }

 private:
  ReductionTrace trace_;
  Mat3 cur_;
};

// Least s in 1..6 with base + s·step ≠ 0; step must be nonzero.
Fp least_nonzero_shift(Fp base, Fp step) {
  for (int s = 1; s < kPrime; ++s) {
    if (!(base + Fp(s) * step).is_zero()) return Fp(s);
  }
  return Fp(1);
}

void reduce_to_y(Reducer& r) {
  // Bottom-left entry nonzero.
  if (r.at(2, 0).is_zero()) r.left(transvection(2, 1, least_nonzero_shift(r.at(2, 0), r.at(1, 0))));

  // Clear the top and middle of column 1 with row 3, then scale row 3 so
  // that entry becomes 1 (row 2 absorbs the inverse scale).
  const Fp g = r.at(2, 0);
  const Fp ginv = fp_inv(g);
  Mat3 clear = Mat3::identity();
  clear(0, 2) = -(r.at(0, 0) * ginv);
  clear(1, 2) = -(r.at(1, 0) * ginv);
  r.left(clear);
  r.left(diagonal(Fp(1), g, ginv));

  // Clear the bottom row beyond column 1 with column 1.
  Mat3 clear_bottom = Mat3::identity();
  clear_bottom(0, 1) = -r.at(2, 1);
  clear_bottom(0, 2) = -r.at(2, 2);
  r.right(clear_bottom);

  // Now [[0,b,c],[0,e,f],[1,0,0]] with bf − ce = 1. Make b nonzero by adding
  // a multiple of row 2 to row 1 (e ≠ 0 whenever b = 0).
  if (r.at(0, 1).is_zero()) r.left(transvection(0, 1, least_nonzero_shift(r.at(0, 1), r.at(1, 1))));

  // Clear c with column 2, then e with column 3; the determinant forces f = 1/b.
  r.right(transvection(1, 2, -(r.at(0, 2) * fp_inv(r.at(0, 1)))));
  r.right(transvection(2, 1, -(r.at(1, 1) * fp_inv(r.at(1, 2)))));

  const Fp b = r.at(0, 1);
  r.right(diagonal(Fp(1), fp_inv(b), b));
}

void reduce_to_z(Reducer& r) {
  // Top-left entry zero, using whichever of rows 2 and 3 has a nonzero lead.
  if (!r.at(0, 0).is_zero()) {
    Mat3 f = Mat3::identity();
    if (!r.at(1, 0).is_zero()) {
      f(0, 1) = -(r.at(0, 0) * fp_inv(r.at(1, 0)));
    } else {
      f(0, 2) = -(r.at(0, 0) * fp_inv(r.at(2, 0)));
    }
    r.left(f);
  }

  // Middle-left entry nonzero.
  if (r.at(1, 0).is_zero()) r.left(transvection(1, 2, least_nonzero_shift(r.at(1, 0), r.at(2, 0))));

  // Clear the middle row beyond column 1 with column 1.
  const Fp dinv = fp_inv(r.at(1, 0));
  Mat3 clear_middle = Mat3::identity();
  clear_middle(0, 1) = -(r.at(1, 1) * dinv);
  clear_middle(0, 2) = -(r.at(1, 2) * dinv);
  r.right(clear_middle);

  // Top-middle entry nonzero (c ≠ 0 whenever b = 0).
  if (r.at(0, 1).is_zero()) r.right(transvection(2, 1, least_nonzero_shift(r.at(0, 1), r.at(0, 2))));

  // Top-right entry zero.
  r.right(transvection(1, 2, -(r.at(0, 2) * fp_inv(r.at(0, 1)))));

  // Now [[0,b,0],[d,0,0],[g,h,i]] with −bdi = 1. Make the bottom row (i,i,i).
  const Fp d = r.at(1, 0);
  const Fp i = r.at(2, 2);
  r.left(transvection(2, 1, (i - r.at(2, 0)) * fp_inv(d)));
  r.right(transvection(2, 1, (i - r.at(2, 1)) * fp_inv(i)));

  r.left(diagonal(-(i * d), fp_inv(d), -fp_inv(i)));
}

}  // namespace

Mat3 generator_x() { return Mat3{1, 0, 1, 0, -1, -1, 0, 1, 0}; }
Mat3 generator_y() { return Mat3{0, 1, 0, 0, 0, 1, 1, 0, 0}; }
Mat3 generator_z() { return Mat3{0, 1, 0, 1, 0, 0, -1, -1, -1}; }

GeneratorSet default_generators() { return GeneratorSet{{generator_x(), generator_y(), generator_z()}}; }

GeneratorSet parabolic_generators() {
  // 3 is a primitive root mod 7, so diag(5, 3, 1) together with SL₂ on the
  // lower block reaches every admissible determinant split.
  return GeneratorSet{{transvection(0, 1, Fp(1)), transvection(0, 2, Fp(1)), transvection(1, 2, Fp(1)),
                       transvection(2, 1, Fp(1)), diagonal(Fp(5), Fp(3), Fp(1))}};
}

bool in_parabolic(const Mat3& m) { return m(1, 0).is_zero() && m(2, 0).is_zero() && det(m) == Fp(1); }

std::uint64_t parabolic_size() {
  std::uint64_t n = 0;
  // det = a·(ei − fh); b and c are free.
  for (int a = 0; a < kPrime; ++a)
    for (int e = 0; e < kPrime; ++e)
      for (int f = 0; f < kPrime; ++f)
        for (int h = 0; h < kPrime; ++h)
          for (int i = 0; i < kPrime; ++i)
            for (int b = 0; b < kPrime; ++b)
              for (int c = 0; c < kPrime; ++c) {
                if (in_parabolic(Mat3{a, b, c, 0, e, f, 0, h, i})) ++n;
              }
  return n;
}

std::uint64_t generator_closure(const GeneratorSet& gens) {
  if (gens.gens.empty()) throw Error(ErrorKind::InvalidArgument, "generator set is empty");
  std::vector<Mat3> moves;
  for (const Mat3& g : gens.gens) {
    if (det(g) != Fp(1)) throw Error(ErrorKind::InvalidArgument, "generators must have det 1");
    moves.push_back(g);
    const Mat3 gi = inverse(g);
    if (gi != g) moves.push_back(gi);
  }

  std::vector<std::uint64_t> seen((MatCode::kCount + 63) / 64, 0);
  auto insert = [&](MatCode c) {
    auto& w = seen[c.value >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (c.value & 63u);
    if (w & bit) return false;
    w |= bit;
    return true;
  };

  std::vector<MatCode> frontier{encode(Mat3::identity())};
  insert(frontier.front());
  std::uint64_t size = 1;
  std::vector<MatCode> next;
  while (!frontier.empty()) {
    next.clear();
    for (MatCode c : frontier) {
      const Mat3 m = decode(c);
      for (const Mat3& g : moves) {
        const MatCode nc = encode(m * g);
        if (!insert(nc)) continue;
        if (++size > kSL3Order) throw Error(ErrorKind::ClosureCapExceeded, "closure exceeded |SL3(F7)|");
        next.push_back(nc);
      }
    }
    frontier.swap(next);
  }
  return size;
}

Mat3 ReductionTrace::recompose() const {
  Mat3 m = start;
  for (const auto& s : steps) m = s.side == Side::Left ? s.factor * m : m * s.factor;
  return m;
}

bool ReductionTrace::verify() const {
  for (const auto& s : steps) {
    if (!in_parabolic(s.factor)) return false;
  }
  return recompose() == target;
}

ReductionTrace reduce_to_generator(const Mat3& a, ReductionTarget target) {
  if (det(a) != Fp(1)) throw Error(ErrorKind::NotInSL3, "reduction needs a det-1 matrix");
  if (in_parabolic(a)) throw Error(ErrorKind::InParabolic, "matrix already lies in the parabolic subgroup");
  Reducer r(a, target);
  if (target == ReductionTarget::Y) {
    reduce_to_y(r);
  } else {
    reduce_to_z(r);
  }
  return r.finish();
}

std::string to_string(ReductionTarget t) { return t == ReductionTarget::Y ? "Y" : "Z"; }

}  // namespace sl3f7
