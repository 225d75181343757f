#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sidon/abelian_group.hpp"
#include "sidon/shapes.hpp"
#include "sidon/verifiers.hpp"

namespace sidon {

enum class CertificateKind { Phi, PhiCyclic, Psi, Tiling };

std::string to_string(CertificateKind kind);
CertificateKind certificate_kind_from_string(const std::string& text);

/// Witness for a computed extremal value: value = det(lattice) = |group|.
struct Certificate {
  CertificateKind kind = CertificateKind::Phi;
  Int h = 0;
  int n = 0;
  Int value = 0;
  Lattice lattice;
  AbelianGroup group;
  std::vector<GroupElement> set;
  bool verified = false;
  std::optional<ShapeSpec> shape;  // tiling certificates only

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Re-runs the verifier matching the certificate kind from scratch.
bool verify_certificate(const Certificate& cert);

/// All HNF lattices of a given dimension and determinant, addressable by
/// index in lexicographic order of (diagonal, entries below the diagonal).
class HnfEnumeration {
 public:
  HnfEnumeration(std::size_t n, Int det);

  std::size_t dim() const { return n_; }
  Int det() const { return det_; }
  Int size() const { return total_; }
  Lattice at(Int index) const;

 private:
  std::size_t n_;
  Int det_;
  std::vector<IntVector> diagonals_;
  IntVector offsets_;  // offsets_[k] = number of lattices before diagonals_[k]
  Int total_ = 0;
};

// Number of index-m sublattices of Z^2 (sum of divisors of m); test oracle helper.
Int sublattice_count_2d(Int m);

struct SearchOptions {
  Int budget = 100'000'000;  // lattices x points, planned per determinant
  unsigned threads = 1;
  // Start from max |simplex(r) - simplex(t)| over r + t = h as well; sound
  // because those bodies pack with exactly the same lattices.
  bool difference_body_floor = false;
};

// Reads SIMPLEX_SIDON_BUDGET if set, else the given default.
Int default_search_budget(Int fallback = 100'000'000);

// Smallest determinant at which the pigeonhole and density bounds allow a packing.
Int phi_search_floor(Int h, int n, bool difference_body_floor = false);

Certificate search_phi(Int h, int n, bool cyclic_only, const SearchOptions& opts = {});
Certificate search_psi(Int h, int n, const SearchOptions& opts = {});
// Lattices of determinant |shape| only; nullopt certifies that none tiles.
std::optional<Certificate> search_tiling(const ShapeSpec& shape, const SearchOptions& opts = {});

// Certificate for a tiling lattice already known to the caller.
Certificate tiling_certificate(const ShapeSpec& shape, const Lattice& lattice);

// Lowest index in [0, count) satisfying pred, evaluated on a worker pool.
// The answer does not depend on the number of threads.
Int parallel_find_first(Int count, unsigned threads, const std::function<bool(Int, CosetMarks&)>& pred);

}  // namespace sidon
