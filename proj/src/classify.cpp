#include "sl3f7/classify.hpp"

#include <algorithm>

#include "sl3f7/error.hpp"

namespace sl3f7 {

namespace {

void require_eigenfree(const ClassLabel& l) {
  if (!l.is_eigenfree()) throw Error(ErrorKind::NotEigenfree, to_string(l) + " has a root in F7");
}

ClassCatalog build_catalog() {
  ClassCatalog cat;
  cat.labels = eigenfree_labels();
  for (const auto& l : cat.labels) cat.order_of[l] = order_of_label(l);

  // One ascending sweep finds the least code for every label at once.
  std::size_t missing = cat.labels.size();
  for (std::uint32_t code = 0; code < MatCode::kCount && missing > 0; ++code) {
    const Mat3 m = decode(MatCode{code});
    const CharPoly cp = char_poly(m);
    if (cp.det != Fp(1)) continue;
    const ClassLabel l{cp.trace, cp.minors};
    if (!l.is_eigenfree() || cat.representative_of.contains(l)) continue;
    cat.representative_of.emplace(l, m);
    --missing;
  }
  return cat;
}

}  // namespace

std::string to_string(const ClassLabel& label) {
  return "[" + std::to_string(label.i.value()) + "," + std::to_string(label.j.value()) + "]";
}

std::vector<ClassLabel> eigenfree_labels() {
  std::vector<ClassLabel> out;
  for (int i = 0; i < kPrime; ++i) {
    for (int j = 0; j < kPrime; ++j) {
      const ClassLabel l{Fp(i), Fp(j)};
      if (l.is_eigenfree()) out.push_back(l);
    }
  }
  return out;
}

ClassLabel class_label(const Mat3& m) {
  const CharPoly cp = char_poly(m);
  if (cp.det != Fp(1)) throw Error(ErrorKind::NotInSL3, "det = " + std::to_string(cp.det.value()));
  if (cp.has_fp_root()) throw Error(ErrorKind::HasEigenvector, "matrix has an eigenvalue in F7");
  return ClassLabel{cp.trace, cp.minors};
}

ClassLabel scale_label(const ClassLabel& l) {
  require_eigenfree(l);
  return ClassLabel{Fp(2) * l.i, Fp(4) * l.j};
}

ClassLabel inverse_label(const ClassLabel& l) {
  require_eigenfree(l);
  return ClassLabel{l.j, l.i};
}

ClassLabel power_class_map(const ClassLabel& l, int k) {
  require_eigenfree(l);
  if (k < 1 || k > 56) throw Error(ErrorKind::InvalidArgument, "exponent must lie in [1, 56]");
  const Mat3 p = representative(l).pow(static_cast<std::uint64_t>(k));
  if (p.is_scalar() || has_fp_eigenvalue(p)) {
    throw Error(ErrorKind::PowerLeavesEigenfreeSet,
                to_string(l) + " to the power " + std::to_string(k) + " leaves the eigenvector-free set");
  }
  return class_label(p);
}

int order_of_label(const ClassLabel& l) {
  require_eigenfree(l);
  const auto roots = cubic_roots_ext(l.cubic());
  return ext_order(roots.front());
}

Mat3 representative(const ClassLabel& l) {
  require_eigenfree(l);
  return catalog().representative_of.at(l);
}

ClassLabel psl_label(const ClassLabel& l) {
  const ClassLabel s1 = scale_label(l);
  const ClassLabel s2 = scale_label(s1);
  return std::min({l, s1, s2});
}

std::size_t ClassCatalog::index_of(const ClassLabel& l) const {
  const auto it = std::lower_bound(labels.begin(), labels.end(), l);
  if (it == labels.end() || *it != l) throw Error(ErrorKind::NotEigenfree, to_string(l) + " is not catalogued");
  return static_cast<std::size_t>(it - labels.begin());
}

const ClassCatalog& catalog() {
  static const ClassCatalog cat = build_catalog();
  return cat;
}

int eigenfree_index(Fp trace, Fp minors) {
  static const auto table = [] {
    std::array<int, kPrime * kPrime> t{};
    t.fill(-1);
    const auto labels = eigenfree_labels();
    for (std::size_t k = 0; k < labels.size(); ++k) {
      t[static_cast<std::size_t>(labels[k].i.value() * kPrime + labels[k].j.value())] = static_cast<int>(k);
    }
    return t;
  }();
  return table[static_cast<std::size_t>(trace.value() * kPrime + minors.value())];
}

namespace known {
Mat3 rep_04() { return Mat3{0, 1, 3, 0, 0, 1, 1, 0, 0}; }
Mat3 rep_02() { return Mat3{0, 2, -1, 0, 0, 2, 2, 0, 0}; }
Mat3 rep_10() { return Mat3{0, 1, 0, 0, 1, -1, -1, 0, 0}; }
Mat3 rep_13() { return Mat3{0, 1, -3, 0, 1, -2, 1, 0, 0}; }
Mat3 rep_15() { return Mat3{0, 3, 2, 0, 1, 1, 1, 0, 0}; }
Mat3 rep_62() { return Mat3{0, 3, 2, 0, -1, -1, -1, 0, 0}; }
}  // namespace known

}  // namespace sl3f7
