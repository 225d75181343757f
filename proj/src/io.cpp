#include "sidon/io.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace sidon::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Int to_int(const Json& v) {
  if (!v.is_number_integer()) bad("expected an integer, got " + v.dump());
  return v.get<Int>();
}

IntVector to_int_vector(const Json& v) {
  if (!v.is_array()) bad("expected an array of integers, got " + v.dump());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_int(x));
  return out;
}

std::vector<IntVector> to_rows(const Json& v) {
  if (!v.is_array()) bad("expected an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : v) rows.push_back(to_int_vector(r));
  return rows;
}

Json rows_json(const std::vector<IntVector>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path.string());
  out << text;
}

Lattice lattice_from_json(const Json& j) {
  Int n = to_int(field(j, "n"));
  auto rows = to_rows(field(j, "basis"));
  if (static_cast<Int>(rows.size()) != n) throw Error(ErrorCode::NonSquare, "basis must have n rows");
  for (const auto& r : rows)
    if (static_cast<Int>(r.size()) != n) throw Error(ErrorCode::NonSquare, "basis rows must have n entries");
  return hnf(IntMatrix::from_rows(rows));
}

Json lattice_to_json(const Lattice& lattice) {
  return Json{{"n", lattice.dim()}, {"basis", rows_json(lattice.hnf().to_rows())}};
}

AbelianGroup group_from_json(const Json& j) { return AbelianGroup(to_int_vector(field(j, "factors"))); }

Json group_to_json(const AbelianGroup& group) { return Json{{"factors", group.factors()}}; }

std::vector<GroupElement> elements_from_json(const Json& j) {
  std::vector<GroupElement> out;
  for (auto& r : to_rows(j)) out.push_back(GroupElement{std::move(r)});
  return out;
}

Json elements_to_json(const std::vector<GroupElement>& elems) {
  Json out = Json::array();
  for (const auto& e : elems) out.push_back(e.coords);
  return out;
}

GroupSet set_from_json(const Json& j) {
  GroupSet s{group_from_json(field(j, "group")), elements_from_json(field(j, "elements"))};
  for (const auto& e : s.elements) s.group.require(e);
  return s;
}

Json set_to_json(const AbelianGroup& group, const std::vector<GroupElement>& elems) {
  return Json{{"group", group_to_json(group)}, {"elements", elements_to_json(elems)}};
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  Int n = to_int(field(j, "n"));
  const Json& basis = field(j, "basis");
  if (!basis.is_array() || static_cast<Int>(basis.size()) != n) throw Error(ErrorCode::NonSquare, "basis must have n rows");
  RationalMatrix m;
  for (const auto& row : basis) {
    if (!row.is_array() || static_cast<Int>(row.size()) != n)
      throw Error(ErrorCode::NonSquare, "basis rows must have n entries");
    std::vector<Rational> r;
    for (const auto& v : row) {
      if (v.is_number_integer())
        r.emplace_back(v.get<Int>());
      else if (v.is_string())
        r.push_back(Rational::parse(v.get<std::string>()));
      else
        bad("rational entries must be integers or \"p/q\" strings, got " + v.dump());
    }
    m.push_back(std::move(r));
  }
  return m;
}

Json points_to_json(const PointSet& points) {
  return Json{{"n", points.dim()}, {"points", rows_json(points.points())}};
}

Json verdict_to_json(const Verdict& v) {
  Json out;
  out["holds"] = v.holds;
  if (v.arrangement) out["arrangement"] = to_string(*v.arrangement);
  out["distinct"] = v.distinct;
  out["total"] = v.total;
  if (v.collision) out["collision"] = Json::array({v.collision->first, v.collision->second});
  if (v.uncovered) out["uncovered"] = *v.uncovered;
  return out;
}

Json bounds_to_json(const BoundsTable& table) {
  Json entries = Json::array();
  for (const auto& e : table.entries) {
    Json j;
    j["id"] = e.id;
    j["relation"] = e.relation;
    j["formula"] = e.formula;
    if (e.value) {
      j["value"] = e.value->str();
      j["floor"] = e.value->floor();
      j["ceil"] = e.value->ceil();
    } else {
      j["value"] = nullptr;
    }
    j["applicable"] = e.applicable;
    j["asymptotic"] = e.asymptotic;
    j["numeric"] = e.numeric;
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(std::move(j));
  }
  return Json{{"h", table.h}, {"n", table.n}, {"entries", std::move(entries)}};
}

Json certificate_to_json(const Certificate& c) {
  Json out;
  out["kind"] = to_string(c.kind);
  out["h"] = c.h;
  out["n"] = c.n;
  out["value"] = c.value;
  out["lattice"] = rows_json(c.lattice.hnf().to_rows());
  out["group"] = group_to_json(c.group);
  out["set"] = elements_to_json(c.set);
  if (c.shape) out["shape"] = c.shape->str();
  out["verified"] = c.verified;
  return out;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.kind = certificate_kind_from_string(field(j, "kind").get<std::string>());
  c.h = to_int(field(j, "h"));
  c.n = static_cast<int>(to_int(field(j, "n")));
  c.value = to_int(field(j, "value"));
  c.lattice = Lattice::from_canonical(IntMatrix::from_rows(to_rows(field(j, "lattice"))));
  c.group = group_from_json(field(j, "group"));
  c.set = elements_from_json(field(j, "set"));
  if (j.contains("shape")) c.shape = ShapeSpec::parse(j.at("shape").get<std::string>());
  c.verified = j.value("verified", false);
  return c;
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

Json record_json(const Certificate& cert, const std::string& timestamp) {
  Json j = certificate_to_json(cert);
  j["timestamp"] = timestamp;
  return j;
}

}  // namespace

void append_catalog(const std::filesystem::path& path, const Certificate& cert, const std::string& timestamp) {
  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) bad("cannot append to " + path.string());
  out << record_json(cert, timestamp).dump() << '\n';
}

std::vector<CatalogRecord> read_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open catalog " + path.string());
  std::vector<CatalogRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Json j = Json::parse(line);
      out.push_back(CatalogRecord{certificate_from_json(j), j.value("timestamp", std::string{})});
    } catch (const nlohmann::json::exception& e) {
      bad(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_catalog(const std::filesystem::path& path, const std::vector<CatalogRecord>& records) {
  std::ostringstream os;
  for (const auto& r : records) os << record_json(r.certificate, r.timestamp).dump() << '\n';
  write_text_file(path, os.str());
}

}  // namespace sidon::io
