#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sidon/search.hpp"

namespace sidon {

struct ConstructOptions {
  // Stored certificates are looked up here first; empty disables the lookup.
  std::filesystem::path catalog;
  SearchOptions search;
};

// SIMPLEX_SIDON_CATALOG if set, else the catalog shipped with the sources.
std::filesystem::path default_catalog_path();

// Verified certificate from the catalog matching (kind, h, n, shape), if any.
std::optional<Certificate> stored_certificate(const std::filesystem::path& catalog, CertificateKind kind, Int h,
                                              int n, const std::optional<ShapeSpec>& shape = std::nullopt);

// Lexicographically first B_2 set (distinct differences) of size k in Z_m
// containing 0.
std::optional<std::vector<Int>> cyclic_sidon_set(Int m, std::size_t k);

// B_h set certificate of the optimal order for:
//   n = 1, any h;  n = 2, any h;  h = 2 and n in {3, 5, 7}.
Certificate construct_bh(int n, Int h, const ConstructOptions& opts = {});

// Tiling certificate for the difference body simplex(r) - simplex(t) for
// (1,r,r), (1,r,r-1), (2,r,r), (2,r,r-1) and (n,1,1).
Certificate construct_tiling(int n, Int r, Int t, const ConstructOptions& opts = {});

/// One stored certificate and how to recompute it without the catalog.
struct CatalogTask {
  std::string label;
  CertificateKind kind;
  Int h;
  int n;
  std::optional<ShapeSpec> shape;
  std::function<Certificate(const SearchOptions&)> compute;
};

std::vector<CatalogTask> catalog_tasks();

}  // namespace sidon
