#include "sidon/correspondence.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sidon {

Lattice relation_lattice(const AbelianGroup& group, std::span<const GroupElement> elems) {
  for (const auto& e : elems) group.require(e);
  const std::size_t n = elems.size();
  const std::size_t k = group.rank();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "kernel lattice needs at least one element");

  // Rows [e_i | c_i] and [0 | d_j e_j] generate {(x, sum x_i c_i + D z)}.
  // In the lower-triangular HNF the first n rows are supported on the first
  // n columns, so they span the intersection with Z^n x {0}: the kernel.
  IntMatrix m(n + k, n + k);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
    for (std::size_t j = 0; j < k; ++j) m(i, n + j) = elems[i].coords[j];
  }
  for (std::size_t j = 0; j < k; ++j) m(n + j, n + j) = group.factors()[j];
  Lattice full = hnf(m);

  IntMatrix top(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) top(i, j) = full.hnf()(i, j);
  return Lattice::from_canonical(std::move(top));
}

Lattice kernel_lattice(const AbelianGroup& group, std::span<const GroupElement> elems) {
  Lattice l = relation_lattice(group, elems);
  if (l.det() != group.order())
    throw Error(ErrorCode::NotGenerating, "elements generate a subgroup of order " + std::to_string(l.det()) +
                                              " in a group of order " + std::to_string(group.order()));
  return l;
}

namespace {

std::vector<GroupElement> nonzero_part(const AbelianGroup& group, std::span<const GroupElement> set) {
  if (set.empty()) throw Error(ErrorCode::InvalidArgument, "set must be nonempty");
  for (const auto& e : set) group.require(e);
  std::vector<GroupElement> out;
  for (std::size_t i = 1; i < set.size(); ++i) out.push_back(group.sub(set[i], set[0]));
  return out;
}

GroupConversion unit_vector_set(const Lattice& lattice) {
  QuotientGroup q = group_from_lattice(lattice);
  std::vector<GroupElement> set{q.group.zero()};
  for (const auto& img : q.projection.unit_images()) set.push_back(img);
  std::set<GroupElement> unique(set.begin(), set.end());
  return GroupConversion{q.group, std::move(set), Verdict{}, unique.size()};
}

}  // namespace

LatticeConversion bh_to_packing(const AbelianGroup& group, std::span<const GroupElement> set, Int h) {
  Verdict bh = is_bh_set(group, set, h);
  if (!bh.holds) throw VerdictError(ErrorCode::NotABhSet, "input is not a B_h set", bh);
  auto elems = nonzero_part(group, set);
  if (elems.empty()) throw Error(ErrorCode::InvalidArgument, "set needs at least two elements");
  Lattice l = kernel_lattice(group, elems);
  Verdict v = classify_arrangement(shape_points(ShapeSpec::simplex(static_cast<int>(elems.size()), h)), l);
  return LatticeConversion{l, v};
}

GroupConversion packing_to_bh(const Lattice& lattice, Int h) {
  Verdict arr = classify_arrangement(shape_points(ShapeSpec::simplex(static_cast<int>(lattice.dim()), h)), lattice);
  if (arr.arrangement != Arrangement::PackingOnly && arr.arrangement != Arrangement::Tiling)
    throw VerdictError(ErrorCode::NotAPacking, "simplex translates overlap", arr);
  GroupConversion out = unit_vector_set(lattice);
  out.verdict = is_bh_set(out.group, out.set, h);
  return out;
}

LatticeConversion basis_to_covering(const AbelianGroup& group, std::span<const GroupElement> set, Int h) {
  Verdict basis = is_h_basis(group, set, h);
  if (!basis.holds) throw VerdictError(ErrorCode::NotAnHBasis, "input is not an h-basis", basis);
  auto elems = nonzero_part(group, set);
  if (elems.empty()) throw Error(ErrorCode::InvalidArgument, "set needs at least two elements");
  Lattice l = kernel_lattice(group, elems);
  Verdict v = classify_arrangement(shape_points(ShapeSpec::simplex(static_cast<int>(elems.size()), h)), l);
  return LatticeConversion{l, v};
}

GroupConversion covering_to_basis(const Lattice& lattice, Int h) {
  Verdict arr = classify_arrangement(shape_points(ShapeSpec::simplex(static_cast<int>(lattice.dim()), h)), lattice);
  if (arr.arrangement != Arrangement::CoveringOnly && arr.arrangement != Arrangement::Tiling)
    throw VerdictError(ErrorCode::NotACovering, "simplex translates leave a coset uncovered", arr);
  GroupConversion out = unit_vector_set(lattice);
  out.verdict = is_h_basis(out.group, out.set, h);
  return out;
}

Rational rational_determinant(const RationalMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw Error(ErrorCode::NonSquare, "rational basis must be square");
  RationalMatrix m = a;
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == Rational(0)) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == Rational(0)) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return det;
}

Discretization discretize_lattice(const RationalMatrix& basis, Int h, const Rational& eps) {
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "h must be >= 1");
  if (eps < Rational(0) || eps >= Rational(1)) throw Error(ErrorCode::InvalidArgument, "eps must lie in [0, 1)");
  if (rational_determinant(basis) == Rational(0)) throw Error(ErrorCode::SingularBasis, "continuous basis is singular");
  const std::size_t n = basis.size();

  IntMatrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = (basis[i][j] * Rational(h)).round_half_up();
  if (scaled.determinant() == 0) throw Error(ErrorCode::DegenerateRounding, "rounded basis is singular");
  Lattice l = hnf(scaled);

  Int side = ((Rational(1) - eps) * Rational(h)).floor();
  PointSet pts = shape_points(ShapeSpec::simplex(static_cast<int>(n), side));
  Verdict v = classify_arrangement(pts, l);
  Int count = static_cast<Int>(pts.size());
  return Discretization{h, l, side, count, v, Rational(count, l.det())};
}

std::optional<Discretization> smallest_packing_discretization(const RationalMatrix& basis, const Rational& eps,
                                                              Int h_max) {
  for (Int h = 1; h <= h_max; ++h) {
    try {
      Discretization d = discretize_lattice(basis, h, eps);
      if (d.verdict.arrangement == Arrangement::PackingOnly || d.verdict.arrangement == Arrangement::Tiling) return d;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateRounding) throw;
    }
  }
  return std::nullopt;
}

}  // namespace sidon
