#pragma once

// JSON file formats:
//   lattice   {"n": 2, "basis": [[7,0],[-3,1]]}     rows are generators
//   group     {"factors": [2, 6]}
//   set       {"group": {"factors": [7]}, "elements": [[0],[1],[3]]}
//   rational  {"n": 2, "basis": [["7/4", 0], [1, "1/4"]]}
//   points    {"n": 2, "points": [[0,0],[1,0]]}
//   catalog   JSON Lines, one certificate record per line

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sidon/correspondence.hpp"
#include "sidon/density_bounds.hpp"
#include "sidon/search.hpp"

namespace sidon::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Applies hnf() on load; writes the canonical rows.
Lattice lattice_from_json(const Json& j);
Json lattice_to_json(const Lattice& lattice);

AbelianGroup group_from_json(const Json& j);
Json group_to_json(const AbelianGroup& group);

std::vector<GroupElement> elements_from_json(const Json& j);
Json elements_to_json(const std::vector<GroupElement>& elems);

struct GroupSet {
  AbelianGroup group;
  std::vector<GroupElement> elements;
};
GroupSet set_from_json(const Json& j);
Json set_to_json(const AbelianGroup& group, const std::vector<GroupElement>& elems);

RationalMatrix rational_matrix_from_json(const Json& j);
Json points_to_json(const PointSet& points);
Json verdict_to_json(const Verdict& v);
Json bounds_to_json(const BoundsTable& table);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

struct CatalogRecord {
  Certificate certificate;
  std::string timestamp;
};

std::string utc_timestamp();
// Appends {"kind","h","n","value","lattice","group","set",...,"timestamp"} as one line.
void append_catalog(const std::filesystem::path& path, const Certificate& cert, const std::string& timestamp);
std::vector<CatalogRecord> read_catalog(const std::filesystem::path& path);
void write_catalog(const std::filesystem::path& path, const std::vector<CatalogRecord>& records);

}  // namespace sidon::io
