#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sidon/lattice.hpp"

namespace sidon {

/// Element of a finite Abelian group: residues, one per invariant factor.
struct GroupElement {
  IntVector coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finite Abelian group Z_{d_1} x ... x Z_{d_k} with d_1 | d_2 | ... | d_k
/// and every d_i >= 2. The trivial group has no factors.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Throws InvalidGroup unless `factors` is a divisibility chain of values >= 2.
  explicit AbelianGroup(IntVector factors);
  // Accepts any chain of positive invariant factors (e.g. SNF output) and
  // drops the unit factors.
  static AbelianGroup from_invariant_factors(std::span<const Int> factors);
  static AbelianGroup cyclic(Int m);

  const IntVector& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  Int order() const { return order_; }
  bool is_cyclic() const { return factors_.size() <= 1; }

  GroupElement zero() const { return GroupElement{IntVector(rank(), 0)}; }
  bool contains(const GroupElement& e) const;
  // Throws ElementNotInGroup unless contains(e).
  void require(const GroupElement& e) const;
  // Reduces arbitrary integer coordinates into the group.
  GroupElement reduce(std::span<const Int> coords) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(Int k, const GroupElement& a) const;

  // Mixed-radix encoding in [0, order), coordinate 0 most significant.
  Int index(const GroupElement& e) const;
  GroupElement element_at(Int index) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  IntVector factors_;
  IntVector radix_;
  Int order_ = 1;
};

// Sum of coeffs[i] * elems[i] in G. Throws GroupMismatch / ElementNotInGroup.
GroupElement element_combine(const AbelianGroup& group, std::span<const Int> coeffs,
                             std::span<const GroupElement> elems);

inline bool is_cyclic(const AbelianGroup& group) { return group.is_cyclic(); }

/// Homomorphism Z^n -> Z^n / L, described by the images of the unit vectors.
class GroupProjection {
 public:
  GroupProjection(AbelianGroup target, std::vector<GroupElement> unit_images)
      : target_(std::move(target)), images_(std::move(unit_images)) {}

  std::size_t source_dim() const { return images_.size(); }
  const AbelianGroup& target() const { return target_; }
  const std::vector<GroupElement>& unit_images() const { return images_; }
  GroupElement operator()(std::span<const Int> x) const;

 private:
  AbelianGroup target_;
  std::vector<GroupElement> images_;
};

struct QuotientGroup {
  AbelianGroup group;
  GroupProjection projection;
};

// Z^n / L in invariant-factor form, via the Smith normal form of the HNF.
QuotientGroup group_from_lattice(const Lattice& lattice);

}  // namespace sidon
