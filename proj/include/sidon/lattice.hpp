#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sidon/int_matrix.hpp"

namespace sidon {

/// Full-rank sublattice of Z^n, stored as its Hermite normal form.
///
/// Rows of the HNF are generators. The form is lower triangular with a
/// strictly positive diagonal, and every entry below the diagonal is reduced
/// into [0, pivot of its column). Two bases of the same lattice produce the
/// same HNF, so lattices compare by value.
class Lattice {
 public:
  Lattice() = default;  // zero-dimensional lattice, det 1
  // Checks the canonical-form invariants; throws InvalidArgument otherwise.
  static Lattice from_canonical(IntMatrix hnf);

  std::size_t dim() const { return hnf_.rows(); }
  const IntMatrix& hnf() const { return hnf_; }
  Int diagonal(std::size_t i) const { return hnf_(i, i); }
  Int det() const { return det_; }

  bool contains(std::span<const Int> x) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.hnf_ == b.hnf_; }
  // Lexicographic on (diagonal vector, entries below the diagonal in row-major order).
  friend bool operator<(const Lattice& a, const Lattice& b);

 private:
  explicit Lattice(IntMatrix hnf, Int det) : hnf_(std::move(hnf)), det_(det) {}
  IntMatrix hnf_;
  Int det_ = 1;
};

struct SnfResult {
  IntVector d;  // invariant factors, d[i] | d[i+1]
  IntMatrix U;  // unimodular, U * A * V == diag(d)
  IntMatrix V;
};

// Canonical HNF of the lattice generated by the rows of `basis`.
// Throws NonSquare or SingularBasis.
Lattice hnf(const IntMatrix& basis);

// Smith normal form with recorded unimodular transforms. Throws NonSquare.
SnfResult snf(const IntMatrix& a);

// Canonical coset representative of x + L: 0 <= r_i < L.diagonal(i).
IntVector coset_reduce(std::span<const Int> x, const Lattice& lattice);

/// Maps points of Z^n to coset indices in [0, det L) and back.
///
/// The index is the mixed-radix value of the canonical representative with
/// coordinate 0 most significant, so index order equals lexicographic order
/// of representatives.
class CosetIndexer {
 public:
  explicit CosetIndexer(const Lattice& lattice);

  Int size() const { return det_; }
  std::size_t dim() const { return n_; }
  // `scratch` must have dim() entries; avoids allocation in hot loops.
  Int index(std::span<const Int> x, std::span<Int> scratch) const;
  Int index(std::span<const Int> x) const;
  IntVector representative(Int index) const;

 private:
  std::size_t n_;
  Int det_;
  IntVector hnf_;     // row-major copy
  IntVector radix_;   // radix_[i] = product of diagonal(j) for j > i
};

}  // namespace sidon
