#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sidon/abelian_group.hpp"
#include "sidon/lattice.hpp"
#include "sidon/shapes.hpp"

namespace sidon {

enum class Arrangement { Neither, PackingOnly, CoveringOnly, Tiling };

std::string to_string(Arrangement a);

/// Outcome of a verifier. Negative outcomes always carry a witness that can
/// be re-checked with element_combine / coset_reduce.
struct Verdict {
  bool holds = false;
  std::optional<Arrangement> arrangement;
  // Two coefficient vectors with equal sums, or two points in one coset.
  std::optional<std::pair<IntVector, IntVector>> collision;
  // An unreachable group element, or the representative of an unhit coset.
  std::optional<IntVector> uncovered;
  Int distinct = 0;  // distinct sums / cosets hit
  Int total = 0;     // group order / det L
};

struct VerifyOptions {
  Int max_vectors = 10'000'000;  // enumeration budget for coefficient vectors
};

// Coefficient form: alpha -> sum alpha_i (b_i - b_0) injective on the simplex of side h.
Verdict is_bh_set(const AbelianGroup& group, std::span<const GroupElement> set, Int h, const VerifyOptions& opts = {});
// Multiset form: all h-fold sums b_{i1} + ... + b_{ih}, i1 <= ... <= ih, distinct.
// Collision witnesses are multiplicity vectors of length |set|.
Verdict is_bh_set_multiset(const AbelianGroup& group, std::span<const GroupElement> set, Int h,
                           const VerifyOptions& opts = {});

Verdict is_h_basis(const AbelianGroup& group, std::span<const GroupElement> set, Int h, const VerifyOptions& opts = {});
Verdict is_generalized_basis(const AbelianGroup& group, std::span<const GroupElement> set, Int r, Int t,
                             const VerifyOptions& opts = {});

Verdict classify_arrangement(const PointSet& shape, const Lattice& lattice);

/// Reusable scratch space for the early-exit probes used by the searches.
class CosetMarks {
 public:
  // Returns true if the points fall in pairwise distinct cosets.
  bool packs(const std::vector<IntVector>& points, const Lattice& lattice);
  // Returns true if the points hit every coset.
  bool covers(const std::vector<IntVector>& points, const Lattice& lattice);

 private:
  void reset(Int size);
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  IntVector scratch_;
};

}  // namespace sidon
