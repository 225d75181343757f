#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sidon/abelian_group.hpp"
#include "sidon/rational.hpp"
#include "sidon/verifiers.hpp"

namespace sidon {

/// Failure of a conversion precondition, carrying the verifier's witness.
class VerdictError : public Error {
 public:
  VerdictError(ErrorCode code, const std::string& message, Verdict verdict)
      : Error(code, message), verdict_(std::move(verdict)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

// {x in Z^n : sum x_i elems[i] = 0}. Throws NotGenerating unless the
// elements generate the whole group (det != |G|).
Lattice kernel_lattice(const AbelianGroup& group, std::span<const GroupElement> elems);
// Same lattice without the generation check; its det is the order of the
// subgroup generated by `elems`.
Lattice relation_lattice(const AbelianGroup& group, std::span<const GroupElement> elems);

struct LatticeConversion {
  Lattice lattice;
  Verdict verdict;  // classify_arrangement of the simplex against `lattice`
};

struct GroupConversion {
  AbelianGroup group;
  std::vector<GroupElement> set;  // {0, [e_1], ..., [e_n]}
  Verdict verdict;                // is_bh_set / is_h_basis of `set`
  std::size_t distinct = 0;       // may fall below n+1 when cosets coincide
};

// B_h set -> packing of the simplex of side h. Throws VerdictError{NotABhSet}.
LatticeConversion bh_to_packing(const AbelianGroup& group, std::span<const GroupElement> set, Int h);
// Packing of the simplex -> B_h set in Z^n / L. Throws VerdictError{NotAPacking}.
GroupConversion packing_to_bh(const Lattice& lattice, Int h);
// h-basis -> covering by the simplex. Throws VerdictError{NotAnHBasis}.
LatticeConversion basis_to_covering(const AbelianGroup& group, std::span<const GroupElement> set, Int h);
// Covering by the simplex -> h-basis of Z^n / L. Throws VerdictError{NotACovering}.
GroupConversion covering_to_basis(const Lattice& lattice, Int h);

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational rational_determinant(const RationalMatrix& m);

struct Discretization {
  Int h = 0;
  Lattice lattice;   // h * L_h
  Int sidelength;    // floor((1 - eps) h): the points are the simplex of this side
  Int points = 0;
  Verdict verdict;   // classify_arrangement of those points against `lattice`
  Rational density;  // points / det
};

// Rounds each entry of V to the nearest multiple of 1/h (ties upward), scales
// by h, and classifies (1 - eps) h simplex intersect Z^n against the result.
Discretization discretize_lattice(const RationalMatrix& basis, Int h, const Rational& eps);

// Smallest h in [1, h_max] whose discretization is a packing, if any.
std::optional<Discretization> smallest_packing_discretization(const RationalMatrix& basis, const Rational& eps,
                                                              Int h_max);

}  // namespace sidon
