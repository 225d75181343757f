#include "sidon/constructions.hpp"

#include <cstdlib>

#include "sidon/correspondence.hpp"
#include "sidon/io.hpp"

#ifndef SIMPLEX_SIDON_DATA_DIR
#define SIMPLEX_SIDON_DATA_DIR "data"
#endif

namespace sidon {

namespace ck = checked;

std::filesystem::path default_catalog_path() {
  if (const char* env = std::getenv("SIMPLEX_SIDON_CATALOG")) return env;
  return std::filesystem::path(SIMPLEX_SIDON_DATA_DIR) / "catalog.jsonl";
}

std::optional<Certificate> stored_certificate(const std::filesystem::path& catalog, CertificateKind kind, Int h,
                                              int n, const std::optional<ShapeSpec>& shape) {
  if (catalog.empty() || !std::filesystem::exists(catalog)) return std::nullopt;
  for (auto& rec : io::read_catalog(catalog)) {
    const Certificate& c = rec.certificate;
    if (c.kind != kind || c.h != h || c.n != n || c.shape != shape) continue;
    Certificate copy = c;
    copy.verified = verify_certificate(copy);
    if (!copy.verified)
      throw Error(ErrorCode::ConstructionInvalid, "stored certificate " + to_string(kind) + "(" + std::to_string(h) +
                                                      "," + std::to_string(n) + ") fails verification");
    return copy;
  }
  return std::nullopt;
}

namespace {

struct SidonBacktrack {
  Int m;
  std::size_t k;
  std::vector<Int> set;
  std::vector<char> used;  // differences already taken

  // Marks the differences of x with the set; undoes everything on a clash.
  bool try_add(Int x) {
    std::size_t done = 0;
    for (; done < set.size(); ++done) {
      Int d = ck::floor_mod(x - set[done], m);
      if (used[static_cast<std::size_t>(d)] || used[static_cast<std::size_t>(m - d)] || 2 * d == m) break;
      used[static_cast<std::size_t>(d)] = used[static_cast<std::size_t>(m - d)] = 1;
    }
    if (done == set.size()) {
      set.push_back(x);
      return true;
    }
    for (std::size_t i = 0; i < done; ++i) {
      Int d = ck::floor_mod(x - set[i], m);
      used[static_cast<std::size_t>(d)] = used[static_cast<std::size_t>(m - d)] = 0;
    }
    return false;
  }

  void remove_last() {
    Int x = set.back();
    set.pop_back();
    for (Int y : set) {
      Int d = ck::floor_mod(x - y, m);
      used[static_cast<std::size_t>(d)] = used[static_cast<std::size_t>(m - d)] = 0;
    }
  }

  bool extend(Int start) {
    if (set.size() == k) return true;
    for (Int x = start; x < m; ++x) {
      if (!try_add(x)) continue;
      if (extend(x + 1)) return true;
      remove_last();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Int>> cyclic_sidon_set(Int m, std::size_t k) {
  if (m < 1 || k == 0) throw Error(ErrorCode::InvalidArgument, "need m >= 1 and k >= 1");
  SidonBacktrack bt{m, k, {0}, std::vector<char>(static_cast<std::size_t>(m) + 1, 0)};
  if (!bt.extend(1)) return std::nullopt;
  return bt.set;
}

namespace {

Certificate certify(CertificateKind kind, Int h, int n, const AbelianGroup& group, std::vector<GroupElement> set) {
  std::vector<GroupElement> tail;
  for (std::size_t i = 1; i < set.size(); ++i) tail.push_back(group.sub(set[i], set[0]));
  Lattice l = kernel_lattice(group, tail);
  Certificate c{kind, h, n, group.order(), l, group, std::move(set), false, std::nullopt};
  c.verified = verify_certificate(c);
  return c;
}

std::vector<GroupElement> cyclic_elements(const std::vector<Int>& values) {
  std::vector<GroupElement> out;
  for (Int v : values) out.push_back(GroupElement{{v}});
  return out;
}

Int hexagon_order(Int r) { return ck::add(ck::mul(3, ck::mul(r, r + 1)), 1); }

Certificate hexagon_candidate(Int r) {
  AbelianGroup g = AbelianGroup::cyclic(hexagon_order(r));
  return certify(CertificateKind::Phi, 2 * r, 2, g, cyclic_elements({0, 1, 3 * r + 2}));
}

// h = 2: Singer-type sets reach max |diff body| = n^2 + n + 1 when they exist.
Certificate sidon_certificate(int n, const SearchOptions& search) {
  const Int floor = phi_search_floor(2, n, true);
  if (auto set = cyclic_sidon_set(floor, static_cast<std::size_t>(n) + 1)) {
    Certificate c = certify(CertificateKind::Phi, 2, n, AbelianGroup::cyclic(floor), cyclic_elements(*set));
    if (c.verified) return c;
  }
  SearchOptions opts = search;
  opts.difference_body_floor = true;
  return search_phi(2, n, false, opts);
}

void require_verified(const Certificate& c, const std::string& what) {
  if (!c.verified) throw Error(ErrorCode::ConstructionInvalid, what + ": certificate failed verification");
}

}  // namespace

Certificate construct_bh(int n, Int h, const ConstructOptions& opts) {
  if (h < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "construct bh needs h >= 1 and n >= 1");
  const std::string what = "construct bh(n=" + std::to_string(n) + ",h=" + std::to_string(h) + ")";
  if (n == 1) {
    AbelianGroup g = AbelianGroup::cyclic(ck::add(h, 1));
    Certificate c = certify(CertificateKind::Phi, h, 1, g, cyclic_elements({0, 1}));
    require_verified(c, what);
    return c;
  }
  if (n == 2 && h % 2 == 0) {
    Certificate c = hexagon_candidate(h / 2);
    if (c.verified) return c;
    c = search_phi(h, 2, false, opts.search);
    require_verified(c, what);
    return c;
  }
  if (n == 2 || (h == 2 && (n == 3 || n == 5 || n == 7))) {
    if (auto c = stored_certificate(opts.catalog, CertificateKind::Phi, h, n)) return *c;
    Certificate c = n == 2 ? search_phi(h, 2, false, opts.search) : sidon_certificate(n, opts.search);
    require_verified(c, what);
    return c;
  }
  throw Error(ErrorCode::UnsupportedParameters,
              what + ": supported are n = 1, n = 2, and h = 2 with n in {3, 5, 7}");
}

Certificate construct_tiling(int n, Int r, Int t, const ConstructOptions& opts) {
  const std::string what =
      "construct tiling(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ",t=" + std::to_string(t) + ")";
  if (r < 1 || t < 0 || n < 1) throw Error(ErrorCode::UnsupportedParameters, what + ": need n, r >= 1 and t >= 0");
  const ShapeSpec shape = ShapeSpec::diff(n, r, t);
  const bool near_diagonal = t == r || t == r - 1;

  Certificate c;
  if (n == 1 && near_diagonal) {
    c = tiling_certificate(shape, hnf(IntMatrix{{r + t + 1}}));
  } else if (n == 2 && t == r) {
    c = tiling_certificate(shape, hexagon_candidate(r).lattice);
    if (!c.verified) {
      auto found = search_tiling(shape, opts.search);
      if (!found) throw Error(ErrorCode::ConstructionInvalid, what + ": no tiling lattice found");
      c = *found;
    }
  } else if ((n == 2 && near_diagonal) || (r == 1 && t == 1)) {
    if (auto stored = stored_certificate(opts.catalog, CertificateKind::Tiling, r + t, n, shape)) return *stored;
    auto found = search_tiling(shape, opts.search);
    if (!found) throw Error(ErrorCode::ConstructionInvalid, what + ": exhaustively no tiling lattice");
    c = *found;
  } else {
    throw Error(ErrorCode::UnsupportedParameters,
                what + ": supported are (1,r,r), (1,r,r-1), (2,r,r), (2,r,r-1) and (n,1,1)");
  }
  require_verified(c, what);
  return c;
}

std::vector<CatalogTask> catalog_tasks() {
  std::vector<CatalogTask> tasks;
  auto add = [&](std::string label, CertificateKind kind, Int h, int n, std::optional<ShapeSpec> shape,
                 std::function<Certificate(const SearchOptions&)> fn) {
    tasks.push_back(CatalogTask{std::move(label), kind, h, n, std::move(shape), std::move(fn)});
  };
  for (Int h = 1; h <= 8; ++h)
    add("phi h=" + std::to_string(h) + " n=2", CertificateKind::Phi, h, 2, std::nullopt,
        [h](const SearchOptions& o) { return search_phi(h, 2, false, o); });
  for (int n : {3, 5, 7})
    add("phi h=2 n=" + std::to_string(n), CertificateKind::Phi, 2, n, std::nullopt,
        [n](const SearchOptions& o) { return sidon_certificate(n, o); });
  for (Int h = 1; h <= 6; ++h)
    add("phi_cyclic h=" + std::to_string(h) + " n=2", CertificateKind::PhiCyclic, h, 2, std::nullopt,
        [h](const SearchOptions& o) { return search_phi(h, 2, true, o); });
  for (int n : {1, 2})
    for (Int h = 1; h <= 4; ++h)
      add("psi h=" + std::to_string(h) + " n=" + std::to_string(n), CertificateKind::Psi, h, n, std::nullopt,
          [h, n](const SearchOptions& o) { return search_psi(h, n, o); });
  auto tiling = [&](const ShapeSpec& s) {
    add("tiling " + s.str(), CertificateKind::Tiling, s.order(), s.n, s, [s](const SearchOptions& o) {
      auto c = search_tiling(s, o);
      if (!c) throw Error(ErrorCode::ConstructionInvalid, "no tiling of " + s.str());
      return *c;
    });
  };
  for (Int r = 1; r <= 4; ++r) tiling(ShapeSpec::diff(2, r, r - 1));
  tiling(ShapeSpec::diff(3, 1, 1));
  tiling(ShapeSpec::cross(2, 1));
  return tasks;
}

}  // namespace sidon
