#include "sidon/verifiers.hpp"

#include <unordered_map>

namespace sidon {

std::string to_string(Arrangement a) {
  switch (a) {
    case Arrangement::Neither: return "neither";
    case Arrangement::PackingOnly: return "packing-only";
    case Arrangement::CoveringOnly: return "covering-only";
    case Arrangement::Tiling: return "tiling";
  }
  return "unknown";
}

namespace {

constexpr Int kDenseLimit = Int{1} << 26;

// Maps keys in [0, universe) to the ordinal that first claimed them.
class FirstOwner {
 public:
  explicit FirstOwner(Int universe) : universe_(universe) {
    if (universe <= kDenseLimit) dense_.assign(static_cast<std::size_t>(universe), -1);
  }

  // Returns the previous owner, or -1 after recording `ordinal` as owner.
  Int claim(Int key, Int ordinal) {
    if (universe_ <= kDenseLimit) {
      Int& slot = dense_[static_cast<std::size_t>(key)];
      if (slot >= 0) return slot;
      slot = ordinal;
    } else {
      auto [it, inserted] = sparse_.emplace(key, ordinal);
      if (!inserted) return it->second;
    }
    ++size_;
    return -1;
  }

  bool contains(Int key) const {
    if (universe_ <= kDenseLimit) return dense_[static_cast<std::size_t>(key)] >= 0;
    return sparse_.count(key) != 0;
  }

  Int size() const { return size_; }

  // Smallest key never claimed, or -1 if all are claimed.
  Int first_free() const {
    for (Int k = 0; k < universe_; ++k)
      if (!contains(k)) return k;
    return -1;
  }

 private:
  Int universe_;
  Int size_ = 0;
  IntVector dense_;
  std::unordered_map<Int, Int> sparse_;
};

void require_members(const AbelianGroup& group, std::span<const GroupElement> set) {
  if (set.empty()) throw Error(ErrorCode::InvalidArgument, "set must be nonempty");
  for (const auto& e : set) group.require(e);
}

std::vector<GroupElement> translated_tail(const AbelianGroup& group, std::span<const GroupElement> set) {
  std::vector<GroupElement> out;
  out.reserve(set.size() - 1);
  for (std::size_t i = 1; i < set.size(); ++i) out.push_back(group.sub(set[i], set[0]));
  return out;
}

Int budgeted_count(Int h, std::size_t n, const VerifyOptions& opts) {
  Int count = 0;
  try {
    count = checked::binomial(checked::add(h, static_cast<Int>(n)), static_cast<Int>(n));
  } catch (const Error&) {
    throw Error(ErrorCode::CardinalityOverflow, "coefficient count does not fit in 64 bits");
  }
  if (count > opts.max_vectors)
    throw Error(ErrorCode::CardinalityOverflow, "C(h+n,n) = " + std::to_string(count) + " exceeds enumeration budget " +
                                                    std::to_string(opts.max_vectors));
  return count;
}

// Index of sum alpha_i * elems[i], with coordinates reduced per factor.
class Combiner {
 public:
  Combiner(const AbelianGroup& group, const std::vector<GroupElement>& elems)
      : group_(group), elems_(elems), acc_(group.rank()) {}

  Int index(std::span<const Int> alpha) {
    const auto& f = group_.factors();
    std::fill(acc_.begin(), acc_.end(), 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      for (std::size_t j = 0; j < acc_.size(); ++j)
        acc_[j] = checked::floor_mod(checked::add(acc_[j], checked::mul(alpha[i], elems_[i].coords[j])), f[j]);
    }
    return group_.index(GroupElement{acc_});
  }

 private:
  const AbelianGroup& group_;
  const std::vector<GroupElement>& elems_;
  IntVector acc_;
};

IntVector simplex_point_at(std::size_t n, Int h, Int ordinal) {
  IntVector found;
  Int k = 0;
  for_each_simplex_point(n, h, [&](std::span<const Int> x) {
    if (k++ == ordinal) {
      found.assign(x.begin(), x.end());
      return false;
    }
    return true;
  });
  return found;
}

std::vector<IntVector> diff_coefficients(std::size_t n, Int r, Int t) {
  if (n == 0) return {IntVector{}};
  return shape_points(ShapeSpec::diff(static_cast<int>(n), r, t)).points();
}

// `reached` holds sums in the frame translated by -shift; the witness is the
// smallest unreached element of the original frame.
Verdict coverage_verdict(const AbelianGroup& group, const FirstOwner& reached, const GroupElement& shift) {
  Verdict v;
  v.total = group.order();
  v.distinct = reached.size();
  v.holds = v.distinct == v.total;
  for (Int k = 0; !v.holds && k < group.order(); ++k) {
    GroupElement e = group.element_at(k);
    if (!reached.contains(group.index(group.sub(e, shift)))) v.uncovered = e.coords;
    if (v.uncovered) break;
  }
  return v;
}

}  // namespace

Verdict is_bh_set(const AbelianGroup& group, std::span<const GroupElement> set, Int h, const VerifyOptions& opts) {
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "h must be >= 1");
  require_members(group, set);
  const auto elems = translated_tail(group, set);
  const std::size_t n = elems.size();
  budgeted_count(h, n, opts);

  FirstOwner seen(group.order());
  Combiner combine(group, elems);
  Int ordinal = 0;
  Int clash_first = -1, clash_second = -1;
  for_each_simplex_point(n, h, [&](std::span<const Int> alpha) {
    Int prev = seen.claim(combine.index(alpha), ordinal);
    if (prev >= 0) {
      clash_first = prev;
      clash_second = ordinal;
      return false;
    }
    ++ordinal;
    return true;
  });

  Verdict v;
  v.total = group.order();
  v.distinct = seen.size();
  v.holds = clash_second < 0;
  if (!v.holds) v.collision = {simplex_point_at(n, h, clash_first), simplex_point_at(n, h, clash_second)};
  return v;
}

Verdict is_bh_set_multiset(const AbelianGroup& group, std::span<const GroupElement> set, Int h,
                           const VerifyOptions& opts) {
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "h must be >= 1");
  require_members(group, set);
  const std::size_t k = set.size();
  budgeted_count(h, k - 1, opts);

  // Nondecreasing index sequences i_1 <= ... <= i_h over the untranslated set.
  std::vector<std::size_t> idx(static_cast<std::size_t>(h), 0);
  std::unordered_map<Int, std::vector<std::size_t>> seen;
  auto multiplicities = [&](const std::vector<std::size_t>& seq) {
    IntVector m(k, 0);
    for (auto i : seq) ++m[i];
    return m;
  };
  Verdict v;
  v.total = group.order();
  for (;;) {
    GroupElement sum = group.zero();
    for (auto i : idx) sum = group.add(sum, set[i]);
    auto [it, inserted] = seen.emplace(group.index(sum), idx);
    if (!inserted) {
      v.collision = {multiplicities(it->second), multiplicities(idx)};
      break;
    }
    std::size_t pos = idx.size();
    while (pos-- > 0 && idx[pos] == k - 1) {
    }
    if (pos == static_cast<std::size_t>(-1)) break;
    ++idx[pos];
    for (std::size_t j = pos + 1; j < idx.size(); ++j) idx[j] = idx[pos];
  }
  v.distinct = static_cast<Int>(seen.size());
  v.holds = !v.collision.has_value();
  return v;
}

Verdict is_h_basis(const AbelianGroup& group, std::span<const GroupElement> set, Int h, const VerifyOptions& opts) {
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "h must be >= 1");
  require_members(group, set);
  const auto elems = translated_tail(group, set);
  budgeted_count(h, elems.size(), opts);

  FirstOwner reached(group.order());
  Combiner combine(group, elems);
  Int ordinal = 0;
  for_each_simplex_point(elems.size(), h, [&](std::span<const Int> alpha) {
    reached.claim(combine.index(alpha), ordinal++);
    return reached.size() < group.order();
  });
  return coverage_verdict(group, reached, group.scale(h, set[0]));
}

Verdict is_generalized_basis(const AbelianGroup& group, std::span<const GroupElement> set, Int r, Int t,
                             const VerifyOptions& opts) {
  if (r < 0 || t < 0) throw Error(ErrorCode::InvalidArgument, "r and t must be >= 0");
  require_members(group, set);
  const auto elems = translated_tail(group, set);
  budgeted_count(r, elems.size(), opts);
  budgeted_count(t, elems.size(), opts);
  const auto coeffs = diff_coefficients(elems.size(), r, t);
  if (static_cast<Int>(coeffs.size()) > opts.max_vectors)
    throw Error(ErrorCode::CardinalityOverflow, "difference body exceeds enumeration budget");

  FirstOwner reached(group.order());
  Combiner combine(group, elems);
  Int ordinal = 0;
  for (const auto& alpha : coeffs) {
    reached.claim(combine.index(alpha), ordinal++);
    if (reached.size() == group.order()) break;
  }
  return coverage_verdict(group, reached, group.scale(checked::sub(r, t), set[0]));
}

Verdict classify_arrangement(const PointSet& shape, const Lattice& lattice) {
  if (shape.dim() != lattice.dim()) throw Error(ErrorCode::DimensionMismatch, "shape and lattice dimensions differ");
  CosetIndexer indexer(lattice);
  FirstOwner owner(lattice.det());
  IntVector scratch(lattice.dim());
  const auto& pts = shape.points();

  Verdict v;
  v.total = lattice.det();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Int prev = owner.claim(indexer.index(pts[i], scratch), static_cast<Int>(i));
    if (prev >= 0 && !v.collision) v.collision = {pts[static_cast<std::size_t>(prev)], pts[i]};
  }
  v.distinct = owner.size();
  const bool packing = !v.collision.has_value();
  const bool covering = v.distinct == v.total;
  if (!covering) v.uncovered = indexer.representative(owner.first_free());
  v.arrangement = packing ? (covering ? Arrangement::Tiling : Arrangement::PackingOnly)
                          : (covering ? Arrangement::CoveringOnly : Arrangement::Neither);
  v.holds = packing && covering;
  return v;
}

void CosetMarks::reset(Int size) {
  if (static_cast<Int>(stamp_.size()) < size) stamp_.resize(static_cast<std::size_t>(size), 0);
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
}

bool CosetMarks::packs(const std::vector<IntVector>& points, const Lattice& lattice) {
  if (static_cast<Int>(points.size()) > lattice.det()) return false;
  CosetIndexer indexer(lattice);
  reset(lattice.det());
  scratch_.resize(lattice.dim());
  for (const auto& p : points) {
    auto& slot = stamp_[static_cast<std::size_t>(indexer.index(p, scratch_))];
    if (slot == epoch_) return false;
    slot = epoch_;
  }
  return true;
}

bool CosetMarks::covers(const std::vector<IntVector>& points, const Lattice& lattice) {
  Int missing = lattice.det();
  if (static_cast<Int>(points.size()) < missing) return false;
  CosetIndexer indexer(lattice);
  reset(lattice.det());
  scratch_.resize(lattice.dim());
  Int remaining = static_cast<Int>(points.size());
  for (const auto& p : points) {
    auto& slot = stamp_[static_cast<std::size_t>(indexer.index(p, scratch_))];
    --remaining;
    if (slot != epoch_) {
      slot = epoch_;
      if (--missing == 0) return true;
    }
    if (remaining < missing) return false;
  }
  return missing == 0;
}

}  // namespace sidon
