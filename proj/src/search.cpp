#include "sidon/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "sidon/correspondence.hpp"
#include "sidon/density_bounds.hpp"

namespace sidon {

namespace ck = checked;

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Phi: return "phi";
    case CertificateKind::PhiCyclic: return "phi_cyclic";
    case CertificateKind::Psi: return "psi";
    case CertificateKind::Tiling: return "tiling";
  }
  return "unknown";
}

CertificateKind certificate_kind_from_string(const std::string& text) {
  if (text == "phi") return CertificateKind::Phi;
  if (text == "phi_cyclic") return CertificateKind::PhiCyclic;
  if (text == "psi") return CertificateKind::Psi;
  if (text == "tiling") return CertificateKind::Tiling;
  throw Error(ErrorCode::ParseError, "unknown certificate kind '" + text + "'");
}

namespace {

void ordered_factorizations(Int m, std::size_t slots, IntVector& prefix, std::vector<IntVector>& out) {
  if (slots == 1) {
    prefix.push_back(m);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (Int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    prefix.push_back(d);
    ordered_factorizations(m / d, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

Int offdiagonal_count(const IntVector& diag) {
  Int count = 1;
  const std::size_t n = diag.size();
  for (std::size_t j = 0; j < n; ++j) count = ck::mul(count, ck::pow(diag[j], static_cast<Int>(n - 1 - j)));
  return count;
}

}  // namespace

HnfEnumeration::HnfEnumeration(std::size_t n, Int det) : n_(n), det_(det) {
  if (n == 0 || det < 1) throw Error(ErrorCode::InvalidArgument, "enumeration needs n >= 1 and det >= 1");
  IntVector prefix;
  ordered_factorizations(det, n, prefix, diagonals_);
  offsets_.reserve(diagonals_.size());
  for (const auto& d : diagonals_) {
    offsets_.push_back(total_);
    total_ = ck::add(total_, offdiagonal_count(d));
  }
}

Lattice HnfEnumeration::at(Int index) const {
  if (index < 0 || index >= total_) throw Error(ErrorCode::InvalidArgument, "HNF index out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  std::size_t k = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  const IntVector& diag = diagonals_[k];
  Int local = index - offsets_[k];

  IntMatrix h(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) h(i, i) = diag[i];
  // Entries below the diagonal in row-major order, the first most significant.
  for (std::size_t i = n_; i-- > 1;)
    for (std::size_t j = i; j-- > 0;) {
      h(i, j) = local % diag[j];
      local /= diag[j];
    }
  return Lattice::from_canonical(std::move(h));
}

Int sublattice_count_2d(Int m) {
  Int s = 0;
  for (Int d = 1; d <= m; ++d)
    if (m % d == 0) s += d;
  return s;
}

Int default_search_budget(Int fallback) {
  if (const char* env = std::getenv("SIMPLEX_SIDON_BUDGET")) {
    try {
      return Rational::parse(env).floor();
    } catch (const Error&) {
      throw Error(ErrorCode::ParseError, std::string("SIMPLEX_SIDON_BUDGET is not an integer: ") + env);
    }
  }
  return fallback;
}

Int parallel_find_first(Int count, unsigned threads, const std::function<bool(Int, CosetMarks&)>& pred) {
  constexpr Int kChunk = 256;
  std::atomic<Int> next{0};
  std::atomic<Int> best{count};
  auto worker = [&] {
    CosetMarks marks;
    for (;;) {
      Int start = next.fetch_add(kChunk);
      if (start >= count || start >= best.load()) return;
      Int stop = std::min(count, start + kChunk);
      for (Int k = start; k < stop && k < best.load(); ++k) {
        if (!pred(k, marks)) continue;
        Int cur = best.load();
        while (k < cur && !best.compare_exchange_weak(cur, k)) {
        }
        break;
      }
    }
  };
  if (threads <= 1 || count <= kChunk) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return best.load();
}

Int phi_search_floor(Int h, int n, bool difference_body_floor) {
  Int floor = ck::binomial(h + n, n);
  if (n <= 3) floor = std::max(floor, simplex_density_lower_bound(h, n).ceil());
  if (difference_body_floor)
    for (Int r = 0; r <= h; ++r) floor = std::max(floor, shape_cardinality(ShapeSpec::diff(n, r, h - r)));
  return floor;
}

namespace {

void charge(Int& spent, const HnfEnumeration& e, std::size_t points, const SearchOptions& opts, const std::string& what) {
  Int planned = ck::mul(e.size(), static_cast<Int>(points));
  if (ck::add(spent, planned) > opts.budget)
    throw Error(ErrorCode::BudgetExceeded, what + ": budget " + std::to_string(opts.budget) +
                                               " exhausted before det " + std::to_string(e.det()) +
                                               " (watermark: " + std::to_string(spent) + " point reductions)");
  spent += planned;
}

bool has_cyclic_quotient(const Lattice& l) {
  SnfResult s = snf(l.hnf());
  return std::count_if(s.d.begin(), s.d.end(), [](Int d) { return d != 1; }) <= 1;
}

}  // namespace

Certificate search_phi(Int h, int n, bool cyclic_only, const SearchOptions& opts) {
  if (h < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "search needs h >= 1 and n >= 1");
  const auto pts = shape_points(ShapeSpec::simplex(n, h)).points();
  const Int ceiling = ck::pow(h + 1, n);  // Z_{h+1}^n always works
  const std::string what = std::string(cyclic_only ? "phi_cyclic" : "phi") + "(" + std::to_string(h) + "," +
                           std::to_string(n) + ")";
  Int spent = 0;
  for (Int m = phi_search_floor(h, n, opts.difference_body_floor);; ++m) {
    HnfEnumeration e(static_cast<std::size_t>(n), m);
    charge(spent, e, pts.size(), opts, what);
    Int hit = parallel_find_first(e.size(), opts.threads, [&](Int k, CosetMarks& marks) {
      Lattice l = e.at(k);
      if (!marks.packs(pts, l)) return false;
      return !cyclic_only || has_cyclic_quotient(l);
    });
    if (hit < e.size()) {
      Lattice l = e.at(hit);
      GroupConversion g = packing_to_bh(l, h);
      Certificate c{cyclic_only ? CertificateKind::PhiCyclic : CertificateKind::Phi,
                    h, n, m, l, g.group, g.set, false, std::nullopt};
      c.verified = verify_certificate(c);
      if (!c.verified) throw Error(ErrorCode::ConstructionInvalid, what + ": certificate failed re-verification");
      return c;
    }
    // {0, 1, h+1, ..., (h+1)^(n-1)} is a B_h set in the cyclic group of order (h+1)^n
    if (m >= ceiling)
      throw Error(ErrorCode::ConstructionInvalid, what + ": no packing up to (h+1)^n");
  }
}

Certificate search_psi(Int h, int n, const SearchOptions& opts) {
  if (h < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "search needs h >= 1 and n >= 1");
  const auto pts = shape_points(ShapeSpec::simplex(n, h)).points();
  const std::string what = "psi(" + std::to_string(h) + "," + std::to_string(n) + ")";
  Int spent = 0;
  for (Int m = static_cast<Int>(pts.size()); m >= 1; --m) {
    HnfEnumeration e(static_cast<std::size_t>(n), m);
    charge(spent, e, pts.size(), opts, what);
    Int hit = parallel_find_first(e.size(), opts.threads,
                                  [&](Int k, CosetMarks& marks) { return marks.covers(pts, e.at(k)); });
    if (hit < e.size()) {
      Lattice l = e.at(hit);
      GroupConversion g = covering_to_basis(l, h);
      Certificate c{CertificateKind::Psi, h, n, m, l, g.group, g.set, false, std::nullopt};
      c.verified = verify_certificate(c);
      if (!c.verified) throw Error(ErrorCode::ConstructionInvalid, what + ": certificate failed re-verification");
      return c;
    }
  }
  throw Error(ErrorCode::ConstructionInvalid, what + ": Z^n itself must be a covering");
}

Certificate tiling_certificate(const ShapeSpec& shape, const Lattice& lattice) {
  QuotientGroup q = group_from_lattice(lattice);
  std::vector<GroupElement> set{q.group.zero()};
  for (const auto& img : q.projection.unit_images()) set.push_back(img);
  Certificate c{CertificateKind::Tiling, shape.order(), shape.n, lattice.det(), lattice, q.group, std::move(set),
                false, shape};
  c.verified = verify_certificate(c);
  return c;
}

std::optional<Certificate> search_tiling(const ShapeSpec& shape, const SearchOptions& opts) {
  const auto pts = shape_points(shape).points();
  HnfEnumeration e(static_cast<std::size_t>(shape.n), static_cast<Int>(pts.size()));
  Int spent = 0;
  charge(spent, e, pts.size(), opts, "tiling(" + shape.str() + ")");
  Int hit = parallel_find_first(e.size(), opts.threads,
                                [&](Int k, CosetMarks& marks) { return marks.packs(pts, e.at(k)); });
  if (hit == e.size()) return std::nullopt;
  Certificate c = tiling_certificate(shape, e.at(hit));
  if (!c.verified) throw Error(ErrorCode::ConstructionInvalid, "tiling certificate failed re-verification");
  return c;
}

bool verify_certificate(const Certificate& c) {
  try {
    if (c.lattice.det() != c.value || c.group.order() != c.value) return false;
    if (static_cast<int>(c.lattice.dim()) != c.n) return false;
    if (group_from_lattice(c.lattice).group != c.group) return false;
    if (c.kind != CertificateKind::Tiling) {
      if (c.set.size() != static_cast<std::size_t>(c.n) + 1) return false;
      std::vector<GroupElement> tail;
      for (std::size_t i = 1; i < c.set.size(); ++i) tail.push_back(c.group.sub(c.set[i], c.set[0]));
      if (relation_lattice(c.group, tail) != c.lattice) return false;
    }
    switch (c.kind) {
      case CertificateKind::PhiCyclic:
        if (!c.group.is_cyclic()) return false;
        [[fallthrough]];
      case CertificateKind::Phi: {
        if (!is_bh_set(c.group, c.set, c.h).holds) return false;
        auto arr = classify_arrangement(shape_points(ShapeSpec::simplex(c.n, c.h)), c.lattice).arrangement;
        return arr == Arrangement::PackingOnly || arr == Arrangement::Tiling;
      }
      case CertificateKind::Psi: {
        if (!is_h_basis(c.group, c.set, c.h).holds) return false;
        auto arr = classify_arrangement(shape_points(ShapeSpec::simplex(c.n, c.h)), c.lattice).arrangement;
        return arr == Arrangement::CoveringOnly || arr == Arrangement::Tiling;
      }
      case CertificateKind::Tiling:
        if (!c.shape || c.shape->n != c.n) return false;
        return classify_arrangement(shape_points(*c.shape), c.lattice).arrangement == Arrangement::Tiling;
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

}  // namespace sidon
