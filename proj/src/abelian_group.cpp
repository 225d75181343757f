#include "sidon/abelian_group.hpp"

#include <string>

namespace sidon {

namespace ck = checked;

AbelianGroup::AbelianGroup(IntVector factors) : factors_(std::move(factors)), radix_(factors_.size(), 1) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw Error(ErrorCode::InvalidGroup, "invariant factors must be >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw Error(ErrorCode::InvalidGroup, "invariant factors must form a divisibility chain");
    order_ = ck::mul(order_, factors_[i]);
  }
  for (std::size_t i = factors_.size(); i-- > 1;) radix_[i - 1] = radix_[i] * factors_[i];
}

AbelianGroup AbelianGroup::from_invariant_factors(std::span<const Int> factors) {
  IntVector kept;
  for (Int d : factors) {
    if (d <= 0) throw Error(ErrorCode::InvalidGroup, "invariant factor must be positive (finite group)");
    if (d > 1) kept.push_back(d);
  }
  return AbelianGroup(std::move(kept));
}

AbelianGroup AbelianGroup::cyclic(Int m) {
  if (m < 1) throw Error(ErrorCode::InvalidGroup, "cyclic group order must be >= 1");
  return m == 1 ? AbelianGroup() : AbelianGroup(IntVector{m});
}

bool AbelianGroup::contains(const GroupElement& e) const {
  if (e.coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (e.coords[i] < 0 || e.coords[i] >= factors_[i]) return false;
  return true;
}

void AbelianGroup::require(const GroupElement& e) const {
  if (e.coords.size() != factors_.size())
    throw Error(ErrorCode::ElementNotInGroup,
                "element has " + std::to_string(e.coords.size()) + " coordinates, group has rank " +
                    std::to_string(factors_.size()));
  if (!contains(e)) throw Error(ErrorCode::ElementNotInGroup, "element coordinate out of range");
}

GroupElement AbelianGroup::reduce(std::span<const Int> coords) const {
  if (coords.size() != factors_.size()) throw Error(ErrorCode::GroupMismatch, "coordinate count differs from group rank");
  GroupElement e{IntVector(coords.size())};
  for (std::size_t i = 0; i < coords.size(); ++i) e.coords[i] = ck::floor_mod(coords[i], factors_[i]);
  return e;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r{IntVector(rank())};
  for (std::size_t i = 0; i < rank(); ++i) {
    Int s = a.coords[i] + b.coords[i];
    r.coords[i] = s >= factors_[i] ? s - factors_[i] : s;
  }
  return r;
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
  GroupElement r{IntVector(rank())};
  for (std::size_t i = 0; i < rank(); ++i) {
    Int s = a.coords[i] - b.coords[i];
    r.coords[i] = s < 0 ? s + factors_[i] : s;
  }
  return r;
}

GroupElement AbelianGroup::scale(Int k, const GroupElement& a) const {
  GroupElement r{IntVector(rank())};
  for (std::size_t i = 0; i < rank(); ++i)
    r.coords[i] = ck::floor_mod(ck::mul(ck::floor_mod(k, factors_[i]), a.coords[i]), factors_[i]);
  return r;
}

Int AbelianGroup::index(const GroupElement& e) const {
  Int idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx += e.coords[i] * radix_[i];
  return idx;
}

GroupElement AbelianGroup::element_at(Int index) const {
  GroupElement e{IntVector(rank())};
  for (std::size_t i = 0; i < rank(); ++i) {
    e.coords[i] = index / radix_[i];
    index %= radix_[i];
  }
  return e;
}

GroupElement element_combine(const AbelianGroup& group, std::span<const Int> coeffs,
                             std::span<const GroupElement> elems) {
  if (coeffs.size() != elems.size())
    throw Error(ErrorCode::GroupMismatch, "coefficient and element counts differ");
  GroupElement acc = group.zero();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    group.require(elems[i]);
    acc = group.add(acc, group.scale(coeffs[i], elems[i]));
  }
  return acc;
}

GroupElement GroupProjection::operator()(std::span<const Int> x) const {
  if (x.size() != images_.size()) throw Error(ErrorCode::DimensionMismatch, "projection source dimension mismatch");
  return element_combine(target_, x, images_);
}

QuotientGroup group_from_lattice(const Lattice& lattice) {
  // U H V = D, so x -> x V carries the row span of H onto the row span of D.
  const std::size_t n = lattice.dim();
  SnfResult s = snf(lattice.hnf());
  AbelianGroup group = AbelianGroup::from_invariant_factors(s.d);
  std::vector<GroupElement> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector coords;
    for (std::size_t j = 0; j < n; ++j)
      if (s.d[j] > 1) coords.push_back(ck::floor_mod(s.V(i, j), s.d[j]));
    images.push_back(GroupElement{std::move(coords)});
  }
  return QuotientGroup{group, GroupProjection(group, std::move(images))};
}

}  // namespace sidon
