#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "sidon/checked.hpp"

namespace sidon {

enum class ShapeKind { Simplex, DiffBody, CrossPolytope };

/// Parameters of one of the discrete bodies in Z^n:
///   simplex:n=N,h=H   {x >= 0, sum x_i <= H}
///   diff:n=N,r=R,t=T  {x - y : x in simplex(R), y in simplex(T)}
///   cross:n=N,r=R     {sum |x_i| <= R}
struct ShapeSpec {
  ShapeKind kind = ShapeKind::Simplex;
  int n = 1;
  Int h = 0;  // simplex sidelength
  Int r = 0;  // diff body / cross-polytope radius
  Int t = 0;  // diff body subtrahend

  static ShapeSpec simplex(int n, Int h);
  static ShapeSpec diff(int n, Int r, Int t);
  static ShapeSpec cross(int n, Int r);
  // Throws ParseError for anything outside the grammar above.
  static ShapeSpec parse(std::string_view text);

  void validate() const;
  std::string str() const;
  // Sidelength of the equivalent simplex packing problem (h, r+t, or r).
  Int order() const;

  friend bool operator==(const ShapeSpec&, const ShapeSpec&) = default;
};

/// Finite subset of Z^n, deduplicated and sorted lexicographically.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t n, std::vector<IntVector> points);

  std::size_t dim() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<IntVector>& points() const { return points_; }
  bool contains(std::span<const Int> p) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<IntVector> points_;
};

PointSet shape_points(const ShapeSpec& spec);
// Closed form C(h+n, n) for simplices, enumeration otherwise.
Int shape_cardinality(const ShapeSpec& spec);

// Membership predicates (used by the enumeration above and by renderers).
bool in_simplex(std::span<const Int> x, Int h);
bool in_diff_body(std::span<const Int> x, Int r, Int t);
bool in_cross_polytope(std::span<const Int> x, Int r);

// Visits every point of the simplex in lexicographic order. If `fn` returns
// bool, returning false stops the walk.
template <typename Fn>
void for_each_simplex_point(std::size_t n, Int h, Fn&& fn) {
  IntVector x(n, 0);
  if (n == 0 || h < 0) {
    if (h >= 0) static_cast<void>(fn(std::span<const Int>(x)));
    return;
  }
  Int total = 0;
  for (;;) {
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, std::span<const Int>>, bool>) {
      if (!fn(std::span<const Int>(x))) return;
    } else {
      fn(std::span<const Int>(x));
    }
    // Successor: bump the last coordinate whose prefix sum is below h.
    std::size_t i = n - 1;
    Int prefix = total;
    while (prefix >= h) {
      if (i == 0) return;
      prefix -= x[i];
      --i;
    }
    ++x[i];
    for (std::size_t j = i + 1; j < n; ++j) x[j] = 0;
    total = prefix + 1;
  }
}

}  // namespace sidon
