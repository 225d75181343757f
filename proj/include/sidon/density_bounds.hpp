#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sidon/lattice.hpp"
#include "sidon/rational.hpp"
#include "sidon/shapes.hpp"

namespace sidon {

// |S| / det L.
Rational density(const PointSet& shape, const Lattice& lattice);

enum class DensityKind { Packing, Covering };

// C(h+n, n) / extremal value: the discrete lattice packing (or covering)
// density of the simplex once phi (or psi) is known.
Rational discrete_density_ratio(DensityKind kind, Int h, int n, Int extremal_value);

// Lattice packing density of the continuous n-simplex, known for n <= 3.
std::optional<Rational> simplex_packing_density(int n);
// Lattice covering density of the continuous n-simplex, known for n <= 2.
std::optional<Rational> simplex_covering_density(int n);

// h^n / (n! * packing density): a lower bound on phi(h, n) for every h >= 1.
// Throws UnsupportedParameters for n > 3.
Rational simplex_density_lower_bound(Int h, int n);

struct BoundEntry {
  std::string id;
  std::string relation;  // e.g. "phi(h,n) >", "lim phi(h,n)/h^n ="
  std::string formula;
  std::optional<Rational> value;  // absent for symbolic entries
  bool applicable = true;         // outside the formula's stated range when false
  bool asymptotic = false;        // holds only in a limit / for h >= h0
  bool numeric = true;            // false when an o(1) term or unknown constant is involved
  std::string note;
};

struct BoundsTable {
  Int h = 0;
  int n = 0;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& id) const;
};

BoundsTable bounds_report(Int h, int n);

}  // namespace sidon
